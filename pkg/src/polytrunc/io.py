"""File formats: canonical neighbour-list text and binary planar_code.

Canonical text: first meaningful line is the vertex count n, then n
lines with the three 0-based neighbours of vertex i in counterclockwise
order.  ``#`` starts a comment anywhere on a line; blank lines are
skipped.  The writer normalizes each line to start at the least
neighbour id, so write -> parse -> write is bit-identical.

planar_code: the ASCII header ``>>planar_code<<`` followed by records;
each record is one byte n, then for each vertex its neighbours in
rotation order as 1-based bytes terminated by a zero byte.  The format
caps n at 255.  Validation failures are collected per record so one bad
entry in an external enumeration does not abort the file.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadHeader, ParseError, PolytopeError, TooLarge, TruncatedRecord
from .polytope import Polytope3, build_from_rotation

PLANAR_CODE_HEADER = b">>planar_code<<"


def parse_canonical_text(text: str) -> Polytope3:
    """Parse one polytope from canonical text."""
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            rows.append((lineno, content))
    if not rows:
        raise ParseError("no content")
    lineno, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected a vertex count, got {head!r}", lineno) from None
    if n < 0:
        raise ParseError(f"negative vertex count {n}", lineno)
    if len(rows) - 1 < n:
        raise ParseError(f"expected {n} neighbour lines, found {len(rows) - 1}", lineno)
    if len(rows) - 1 > n:
        extra_line = rows[n + 1][0]
        raise ParseError("unexpected extra line", extra_line)
    spec = []
    for lineno, content in rows[1:]:
        parts = content.split()
        if len(parts) != 3:
            raise ParseError(f"expected 3 neighbours, got {len(parts)}", lineno)
        try:
            spec.append(tuple(int(x) for x in parts))
        except ValueError:
            raise ParseError(f"non-integer neighbour in {content!r}", lineno) from None
    return build_from_rotation(spec)


def write_canonical_text(p: Polytope3) -> str:
    """Serialize ``p`` as canonical text (deterministic, LF endings)."""
    lines = [str(p.vertex_count)]
    for row in p.neighbors:
        shift = row.index(min(row))
        a, b, c = row[shift:] + row[:shift]
        lines.append(f"{a} {b} {c}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PlanarCodeScan:
    """Outcome of reading a planar_code stream.

    ``entries`` holds (record index, polytope) for records that passed
    validation; ``errors`` holds (record index, error) for the rest.
    """

    entries: tuple[tuple[int, Polytope3], ...]
    errors: tuple[tuple[int, PolytopeError], ...]

    @property
    def polytopes(self) -> tuple[Polytope3, ...]:
        return tuple(p for _, p in self.entries)

    @property
    def record_count(self) -> int:
        return len(self.entries) + len(self.errors)


def parse_planar_code(data: bytes) -> PlanarCodeScan:
    """Read every record of a planar_code stream.

    Raises :class:`BadHeader` for a wrong header and
    :class:`TruncatedRecord` when the stream stops mid-record; all other
    per-record problems are collected, not raised.
    """
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeader(
            f"expected {PLANAR_CODE_HEADER.decode()!r} at the start of the stream"
        )
    pos = len(PLANAR_CODE_HEADER)
    entries: list[tuple[int, Polytope3]] = []
    errors: list[tuple[int, PolytopeError]] = []
    record = 0
    size = len(data)
    while pos < size:
        n = data[pos]
        pos += 1
        if n == 0:
            errors.append((record, ParseError("record with zero vertices")))
            record += 1
            continue
        rows: list[list[int]] = []
        for _ in range(n):
            row: list[int] = []
            while True:
                if pos >= size:
                    raise TruncatedRecord(
                        f"record {record} ends inside a neighbour list"
                    )
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                row.append(b - 1)
            rows.append(row)
        try:
            entries.append((record, build_from_rotation(rows)))
        except PolytopeError as err:
            errors.append((record, err))
        record += 1
    return PlanarCodeScan(entries=tuple(entries), errors=tuple(errors))


def write_planar_code(polytopes: list[Polytope3] | tuple[Polytope3, ...]) -> bytes:
    """Serialize polytopes as a planar_code stream (at most 255 vertices
    each, a limit of the one-byte format)."""
    chunks = [PLANAR_CODE_HEADER]
    for p in polytopes:
        if p.vertex_count > 255:
            raise TooLarge(
                f"{p.vertex_count} vertices does not fit the one-byte planar_code field"
            )
        body = bytearray([p.vertex_count])
        for row in p.neighbors:
            body.extend(u + 1 for u in row)
            body.append(0)
        chunks.append(bytes(body))
    return b"".join(chunks)
