"""Dart-based combinatorial model of simple 3-polytopes.

A polytope is stored as a rotation system on a cubic graph: every vertex
lists its three neighbours in counterclockwise order.  Darts (directed
edges) are numbered ``3*v + i`` where ``i`` is the position of the head in
the rotation of the tail ``v``, so ``rot(3v+i) = 3v + (i+1) % 3``.  Faces
are traced with the fixed successor convention

    face successor of d  =  rot(twin(d))

and are derived data, never part of the input.  An edge is the twin pair
of a dart and is identified by the smaller of the two dart ids.

``build_from_rotation`` is the only constructor.  It validates the full
polytopality contract (cubic, simple graph, spherical Euler count,
3-connected), so every ``Polytope3`` in circulation is a genuine
combinatorial simple 3-polytope in the sense of Steinitz's theorem.
"""

from __future__ import annotations

import struct
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    AsymmetricAdjacency,
    EulerViolation,
    LoopOrMultiEdge,
    Not3Connected,
    NotCubic,
    TooLarge,
)

VertexId = int
DartId = int
EdgeId = int  # the smaller dart id of a twin pair
FaceId = int

#: Hard cap on vertex counts.  Keeps every algorithm at desk scale; large
#: enough that whole-graph truncation of any sweep output still fits.
MAX_VERTICES = 4096


@dataclass(frozen=True)
class Polytope3:
    """Immutable combinatorial simple 3-polytope.

    Equality and hashing use the labelled rotation system only; use
    :func:`is_isomorphic` for label-independent comparison.
    """

    neighbors: tuple[tuple[int, int, int], ...]
    twin: tuple[int, ...] = field(compare=False, repr=False)
    faces: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    face_of_dart: tuple[int, ...] = field(compare=False, repr=False)
    edges: tuple[int, ...] = field(compare=False, repr=False)

    # -- counts ---------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.neighbors)

    @property
    def f0(self) -> int:
        return len(self.neighbors)

    @property
    def f1(self) -> int:
        return 3 * len(self.neighbors) // 2

    @property
    def f2(self) -> int:
        return len(self.faces)

    @property
    def f_vector(self) -> tuple[int, int, int]:
        return (self.f0, self.f1, self.f2)

    @property
    def dart_count(self) -> int:
        return 3 * len(self.neighbors)

    # -- dart navigation ------------------------------------------------

    def origin(self, d: DartId) -> VertexId:
        return d // 3

    def head(self, d: DartId) -> VertexId:
        return self.neighbors[d // 3][d % 3]

    def rot(self, d: DartId) -> DartId:
        """Next dart counterclockwise around the origin of ``d``."""
        return d - d % 3 + (d % 3 + 1) % 3

    def darts_at(self, v: VertexId) -> tuple[DartId, DartId, DartId]:
        return (3 * v, 3 * v + 1, 3 * v + 2)

    def dart_between(self, u: VertexId, v: VertexId) -> Optional[DartId]:
        """Dart from u to v, or None if the vertices are not adjacent."""
        try:
            return 3 * u + self.neighbors[u].index(v)
        except ValueError:
            return None

    # -- edges ------------------------------------------------------------

    def edge_of_dart(self, d: DartId) -> EdgeId:
        t = self.twin[d]
        return d if d < t else t

    def edge_endpoints(self, e: EdgeId) -> tuple[VertexId, VertexId]:
        return (e // 3, self.twin[e] // 3)

    def edge_between(self, u: VertexId, v: VertexId) -> Optional[EdgeId]:
        d = self.dart_between(u, v)
        return None if d is None else self.edge_of_dart(d)

    def edge_faces(self, e: EdgeId) -> tuple[FaceId, FaceId]:
        """The two faces bordering an edge."""
        return (self.face_of_dart[e], self.face_of_dart[self.twin[e]])

    # -- faces ------------------------------------------------------------

    @cached_property
    def face_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.faces)

    @cached_property
    def face_vertices(self) -> tuple[tuple[int, ...], ...]:
        """Vertices along each face cycle, in boundary order."""
        return tuple(tuple(d // 3 for d in cycle) for cycle in self.faces)

    @cached_property
    def face_vertex_masks(self) -> tuple[int, ...]:
        """Vertex set of each face as a bitmask (bit v = vertex v)."""
        out = []
        for cycle in self.faces:
            m = 0
            for d in cycle:
                m |= 1 << (d // 3)
            out.append(m)
        return tuple(out)

    @cached_property
    def face_edges(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids along each face cycle, in boundary order."""
        twin = self.twin
        return tuple(
            tuple(d if d < twin[d] else twin[d] for d in cycle) for cycle in self.faces
        )

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, int, int], ...]:
        """The three faces incident to each vertex (in dart order)."""
        fod = self.face_of_dart
        return tuple(
            (fod[3 * v], fod[3 * v + 1], fod[3 * v + 2])
            for v in range(len(self.neighbors))
        )

    @cached_property
    def triangles(self) -> tuple[FaceId, ...]:
        return tuple(i for i, c in enumerate(self.faces) if len(c) == 3)

    @cached_property
    def face_adjacency_masks(self) -> tuple[int, ...]:
        """Bitmask per face of the faces sharing an edge with it."""
        masks = [0] * len(self.faces)
        fod = self.face_of_dart
        for e in self.edges:
            a, b = fod[e], fod[self.twin[e]]
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    @cached_property
    def _shared_edge(self) -> dict[tuple[int, int], int]:
        # one entry per adjacent face pair; uniqueness is a validated invariant
        fod = self.face_of_dart
        out: dict[tuple[int, int], int] = {}
        for e in self.edges:
            a, b = fod[e], fod[self.twin[e]]
            out[(a, b) if a < b else (b, a)] = e
        return out

    @cached_property
    def _vertex_of_face_triple(self) -> dict[tuple[int, int, int], int]:
        out: dict[tuple[int, int, int], int] = {}
        for v, triple in enumerate(self.vertex_faces):
            out[tuple(sorted(triple))] = v
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Polytope3(f0={self.f0}, f1={self.f1}, f2={self.f2})"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def build_from_rotation(spec: Sequence[Sequence[int]]) -> Polytope3:
    """Build and validate a polytope from per-vertex neighbour triples.

    ``spec[v]`` lists the three neighbours of vertex ``v`` in
    counterclockwise order.  Raises a :class:`ValidationError` subclass if
    the input is not the rotation system of a combinatorial simple
    3-polytope.
    """
    neighbors = tuple(tuple(int(x) for x in row) for row in spec)
    n = len(neighbors)
    if n == 0:
        raise NotCubic("no vertices")
    if n > MAX_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the supported maximum {MAX_VERTICES}")
    for v, row in enumerate(neighbors):
        if len(row) != 3:
            raise NotCubic(f"vertex {v} lists {len(row)} neighbours, expected 3")
        if v in row:
            raise LoopOrMultiEdge(f"vertex {v} lists itself as a neighbour")
        if len(set(row)) != 3:
            raise LoopOrMultiEdge(f"vertex {v} lists a neighbour twice")
        for u in row:
            if not 0 <= u < n:
                raise AsymmetricAdjacency(f"vertex {v} lists unknown vertex {u}")

    nd = 3 * n
    twin = [0] * nd
    for v in range(n):
        row = neighbors[v]
        for i in range(3):
            u = row[i]
            try:
                j = neighbors[u].index(v)
            except ValueError:
                raise AsymmetricAdjacency(
                    f"vertex {v} lists {u} but {u} does not list {v}"
                ) from None
            twin[3 * v + i] = 3 * u + j
    # with distinct neighbour triples the pairing above is automatically a
    # fixed-point-free involution

    # trace faces: successor of d is rot(twin(d))
    face_of_dart = [-1] * nd
    faces: list[tuple[int, ...]] = []
    for d0 in range(nd):
        if face_of_dart[d0] >= 0:
            continue
        fid = len(faces)
        cycle = []
        d = d0
        while face_of_dart[d] < 0:
            face_of_dart[d] = fid
            cycle.append(d)
            t = twin[d]
            d = t - t % 3 + (t % 3 + 1) % 3
        faces.append(tuple(cycle))
    # iterating d0 in increasing order makes every cycle start at its
    # minimal dart, which fixes the face numbering deterministically

    # connectivity (Euler alone cannot see a torus component cancelling a
    # sphere component)
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    reached = 1
    while stack:
        v = stack.pop()
        for u in neighbors[v]:
            if not seen[u]:
                seen[u] = 1
                reached += 1
                stack.append(u)
    if reached != n:
        raise Not3Connected("graph is disconnected")

    f1 = nd // 2
    f2 = len(faces)
    euler = n - f1 + f2
    if euler != 2:
        raise EulerViolation(
            f"f0 - f1 + f2 = {euler}, the rotation system is not spherical"
        )

    # 3-connectivity.  For a connected cubic plane graph, vertex
    # connectivity equals edge connectivity, and minimal edge cuts are the
    # edge sets dual to cycles of the dual graph.  Rejecting bridges (dual
    # loops) and face pairs sharing two edges (dual digons) is therefore an
    # exact 3-connectivity test; tests cross-check it against exhaustive
    # vertex-pair deletion.
    pair_seen: dict[int, int] = {}
    for d in range(nd):
        t = twin[d]
        if d < t:
            a = face_of_dart[d]
            b = face_of_dart[t]
            if a == b:
                raise Not3Connected(
                    f"edge {d // 3}-{t // 3} borders face {a} on both sides (bridge)"
                )
            key = a * f2 + b if a < b else b * f2 + a
            if key in pair_seen:
                raise Not3Connected(
                    f"faces {min(a, b)} and {max(a, b)} share two edges (2-cut)"
                )
            pair_seen[key] = d

    edges = tuple(d for d in range(nd) if d < twin[d])
    return Polytope3(
        neighbors=neighbors,
        twin=tuple(twin),
        faces=tuple(faces),
        face_of_dart=tuple(face_of_dart),
        edges=edges,
    )


# ---------------------------------------------------------------------------
# p-vectors
# ---------------------------------------------------------------------------


class PVector:
    """Facet-size census: ``pv[k]`` is the number of k-gonal faces.

    Absent keys count as zero.  Compares equal to any mapping with the
    same nonzero counts.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        cleaned: dict[int, int] = {}
        for k, c in dict(counts).items():
            k = int(k)
            c = int(c)
            if k < 3:
                raise ValueError(f"face size {k} is below 3")
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

    def values(self):
        return self._counts.values()

    def items(self):
        return self._counts.items()

    def __iter__(self):
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __contains__(self, k: object) -> bool:
        return k in self._counts

    def total(self) -> int:
        """Total face count (equals f2 of the source polytope)."""
        return sum(self._counts.values())

    def as_dict(self) -> dict[int, int]:
        return dict(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PVector):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == {k: c for k, c in other.items() if c}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {c}" for k, c in self._counts.items())
        return f"PVector({{{inner}}})"


def p_vector(p: Polytope3) -> PVector:
    """Count the k-gonal faces of ``p`` for every k."""
    return PVector(Counter(len(cycle) for cycle in p.faces))


def check_star_identity(v: PVector | Mapping[int, int]) -> bool:
    """Check 3*p3 + 2*p4 + p5 == 12 + sum over k >= 7 of (k-6)*p_k.

    The identity holds for every simple 3-polytope (double counting of
    edge-face incidences plus the Euler count), so it doubles as a sanity
    test for anything this package accepts or produces.
    """
    counts = dict(v.items()) if not isinstance(v, dict) else v
    lhs = 3 * counts.get(3, 0) + 2 * counts.get(4, 0) + counts.get(5, 0)
    rhs = 12 + sum((k - 6) * c for k, c in counts.items() if k >= 7)
    return lhs == rhs


# ---------------------------------------------------------------------------
# incidence queries
# ---------------------------------------------------------------------------


def faces_adjacent(p: Polytope3, i: FaceId, j: FaceId) -> Optional[EdgeId]:
    """The unique edge shared by faces i and j, or None.

    Uniqueness is guaranteed by validation: two faces of a simple
    3-polytope share at most one edge.
    """
    if i == j:
        raise ValueError("faces must be distinct")
    return p._shared_edge.get((i, j) if i < j else (j, i))


def triple_vertex(p: Polytope3, i: FaceId, j: FaceId, k: FaceId) -> Optional[VertexId]:
    """The vertex lying on all three faces, or None.

    In a simple 3-polytope a vertex lies on exactly three faces, so such
    a vertex is unique when it exists.
    """
    if i == j or j == k or i == k:
        raise ValueError("faces must be pairwise distinct")
    return p._vertex_of_face_triple.get(tuple(sorted((i, j, k))))


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------


def _bfs_code(
    neighbors: tuple[tuple[int, int, int], ...],
    twin: tuple[int, ...],
    start: DartId,
    reverse: bool,
) -> list[int]:
    # Breadth-first code: label vertices in discovery order; for each
    # vertex emit its neighbours' labels in rotation order starting from
    # the dart it was entered by (the start dart for the root).  The code
    # determines the rotation system up to relabelling, so the minimum
    # over all starts and both orientations is a complete invariant of
    # the embedding up to reflection.
    n = len(neighbors)
    label = [-1] * n
    ref = [0] * n
    root = start // 3
    label[root] = 0
    ref[root] = start
    order = [root]
    code: list[int] = []
    step = 2 if reverse else 1
    for v in order:
        r = ref[v]
        base = r - r % 3
        i = r % 3
        row = neighbors[v]
        for _ in range(3):
            u = row[i]
            lu = label[u]
            if lu < 0:
                lu = len(order)
                label[u] = lu
                ref[u] = twin[base + i]
                order.append(u)
            code.append(lu)
            i = (i + step) % 3
    return code


def canonical_form(p: Polytope3) -> bytes:
    """Label- and reflection-invariant byte string for ``p``.

    The lexicographically minimal breadth-first code over all starting
    darts and both orientations, packed as big-endian 16-bit words with
    the vertex count first.
    """
    cached = p.__dict__.get("_canonical_form")
    if cached is not None:
        return cached
    neighbors = p.neighbors
    twin = p.twin
    best: list[int] | None = None
    for start in range(3 * len(neighbors)):
        for reverse in (False, True):
            code = _bfs_code(neighbors, twin, start, reverse)
            if best is None or code < best:
                best = code
    assert best is not None
    packed = struct.pack(f">{len(best) + 1}H", len(neighbors), *best)
    p.__dict__["_canonical_form"] = packed
    return packed


def is_isomorphic(p: Polytope3, q: Polytope3) -> bool:
    """Combinatorial equivalence, including mirror images."""
    return canonical_form(p) == canonical_form(q)


# ---------------------------------------------------------------------------
# independent connectivity oracle
# ---------------------------------------------------------------------------


def three_connected_by_pair_deletion(adjacency: Sequence[Sequence[int]]) -> bool:
    """Exhaustive 3-connectivity test: delete every vertex pair, check
    connectivity of the rest.

    Quadratically many BFS runs; kept as the independent cross-check for
    the structural test used during validation.
    """
    n = len(adjacency)
    if n < 4:
        return False

    def connected_without(removed: tuple[int, ...]) -> bool:
        blocked = bytearray(n)
        for r in removed:
            blocked[r] = 1
        start = next(v for v in range(n) if not blocked[v])
        seen = bytearray(n)
        seen[start] = 1
        stack = [start]
        count = 1
        while stack:
            v = stack.pop()
            for u in adjacency[v]:
                if not seen[u] and not blocked[u]:
                    seen[u] = 1
                    count += 1
                    stack.append(u)
        return count == n - len(removed)

    if not connected_without(()):
        return False
    for u in range(n):
        for v in range(u + 1, n):
            if not connected_without((u, v)):
                return False
    return True
