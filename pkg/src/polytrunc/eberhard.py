"""Whole-graph truncation and p-vector realization scans.

Cutting every edge of a polytope without triangular faces produces a
flag polytope; the p-vector changes only in position 6, which grows by
the old edge count.  That transform turns any realization of a sequence
(p_k, k != 6) by a simple 3-polytope into a realization by a flag one.
This module implements the transform and a scanner that looks for
realizations among supplied polytopes (catalog entries, parsed files);
it does not attempt a general realization construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .errors import HasTriangles
from .polytope import Polytope3, PVector, check_star_identity, p_vector
from .truncation import EdgeSubgraph, TruncationResult, truncate


class SparsePSequence:
    """A target sequence of face counts with p6 left unspecified.

    Keys are face sizes k >= 3, k != 6; absent keys count as zero.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        cleaned: dict[int, int] = {}
        for k, c in dict(counts).items():
            k = int(k)
            c = int(c)
            if k < 3:
                raise ValueError(f"face size {k} is below 3")
            if k == 6:
                raise ValueError("p6 is chosen by the search, not the target")
            if c < 0:
                raise ValueError(f"negative count for size {k}")
            if c:
                cleaned[k] = c
        self._counts = dict(sorted(cleaned.items()))

    def __getitem__(self, k: int) -> int:
        return self._counts.get(k, 0)

    def get(self, k: int, default: int = 0) -> int:
        return self._counts.get(k, default)

    def keys(self):
        return self._counts.keys()

    def items(self):
        return self._counts.items()

    def __iter__(self):
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePSequence):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == {k: c for k, c in other.items() if c}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {c}" for k, c in self._counts.items())
        return f"SparsePSequence({{{inner}}})"


def check_flag_sequence(s: SparsePSequence) -> bool:
    """True when the sequence can belong to a flag polytope: no
    triangles and the face-count identity holds."""
    return s[3] == 0 and check_star_identity(dict(s.items()))


def flagify(p: Polytope3) -> TruncationResult:
    """Cut every edge of ``p``; the result is flag when p has no triangles.

    Raises :class:`HasTriangles` otherwise: a triangle with all edges
    cut keeps all three corners, so the whole-graph cut of a polytope
    with triangles is never flag.
    """
    counts = p_vector(p)
    if counts[3]:
        raise HasTriangles(f"polytope has {counts[3]} triangular faces")
    return truncate(p, EdgeSubgraph.all_edges(p))


def transformed_pvector(p: Polytope3) -> PVector:
    """The p-vector of the whole-graph cut of ``p``: every cut edge
    becomes a hexagon, so only p6 changes, growing by f1."""
    counts = p_vector(p).as_dict()
    counts[6] = counts.get(6, 0) + p.f1
    return PVector(counts)


@dataclass(frozen=True)
class ScanMatch:
    index: int
    polytope: Polytope3
    matched: PVector
    flagged: Optional[TruncationResult] = None


def scan_for_sequence(
    polytopes: Iterable[Polytope3],
    s: SparsePSequence,
    *,
    flagify_matches: bool = False,
) -> list[ScanMatch]:
    """Find polytopes whose p-vector agrees with ``s`` away from k = 6.

    Any p6 is accepted.  With ``flagify_matches`` every triangle-free
    match also carries its whole-graph cut, which realizes the same
    sequence by a flag polytope.  An empty result is a valid outcome;
    sequences violating the face-count identity simply never match.
    """
    matches: list[ScanMatch] = []
    for idx, poly in enumerate(polytopes):
        pv = p_vector(poly)
        keys = (set(pv.keys()) | set(s.keys())) - {6}
        if any(pv[k] != s[k] for k in keys):
            continue
        flagged = None
        if flagify_matches and pv[3] == 0:
            flagged = flagify(poly)
        matches.append(ScanMatch(index=idx, polytope=poly, matched=pv, flagged=flagged))
    return matches
