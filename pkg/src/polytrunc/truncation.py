"""Cutting an edge subgraph off a simple 3-polytope.

Given a polytope P and a set of edges G of its graph, slicing all edges
of G simultaneously (each slightly deeper than its endpoints' corners)
yields a new polytope whose facets correspond to the old facets plus one
new facet per cut edge.  The result is simple exactly when no vertex
meets G in precisely two edges, so valencies are restricted to
{0, 1, 3} here and valency 2 is a hard error.

The surgery is performed face-cycle-first: every boundary cycle of the
result is written down explicitly from local rules, the rotation system
is assembled from the corners of those cycles, and the result is passed
through full validation.  Near a cut vertex the rules are:

* valency 0: the corner survives as one vertex.
* valency 1: the corner is replaced by two vertices, one on each facet
  containing the cut edge; the third facet gains the edge between them.
* valency 3: the corner is replaced by four vertices: one on each of the
  three old facets plus a central vertex where the three cut facets
  meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import NonSimpleInput, NonSimpleResult
from .flags import belt_edges, enumerate_3belts
from .polytope import EdgeId, FaceId, Polytope3, VertexId, build_from_rotation


@dataclass(frozen=True)
class EdgeSubgraph:
    """A nonempty set of edges of a fixed host polytope.

    Edges are edge ids of the host (smaller dart of each twin pair).
    Isolated vertices cannot occur because the subgraph is given by its
    edge set.
    """

    host: Polytope3
    edges: frozenset[EdgeId]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        if not self.edges:
            raise ValueError("edge subgraph must be nonempty")
        if not self.edges.issubset(self.host.edges):
            bad = sorted(self.edges - frozenset(self.host.edges))
            raise ValueError(f"not edge ids of the host polytope: {bad}")

    @classmethod
    def from_vertex_pairs(
        cls, host: Polytope3, pairs: Iterable[tuple[VertexId, VertexId]]
    ) -> "EdgeSubgraph":
        edges = set()
        for u, v in pairs:
            e = host.edge_between(u, v)
            if e is None:
                raise ValueError(f"no edge {u}-{v} in the host polytope")
            edges.add(e)
        return cls(host, frozenset(edges))

    @classmethod
    def all_edges(cls, host: Polytope3) -> "EdgeSubgraph":
        return cls(host, frozenset(host.edges))

    @cached_property
    def sorted_edges(self) -> tuple[EdgeId, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def valencies(self) -> tuple[int, ...]:
        counts = [0] * self.host.vertex_count
        for e in self.edges:
            u, v = self.host.edge_endpoints(e)
            counts[u] += 1
            counts[v] += 1
        return tuple(counts)

    def vertex_pairs(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted (u, v) pairs, for reports."""
        return tuple(
            sorted(tuple(sorted(self.host.edge_endpoints(e))) for e in self.edges)
        )

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TruncationResult:
    """The cut polytope plus provenance of its faces.

    ``face_of_facet`` maps each old face id to its face in the result;
    ``face_of_edge`` maps each cut edge id to its new face.  Together the
    two maps enumerate every face of the result exactly once.
    """

    polytope: Polytope3
    face_of_facet: Mapping[FaceId, FaceId]
    face_of_edge: Mapping[EdgeId, FaceId]


def valency_profile(gamma: EdgeSubgraph) -> tuple[int, ...]:
    """Number of subgraph edges at each host vertex."""
    return gamma.valencies


def admits_simple_truncation(gamma: EdgeSubgraph) -> bool:
    """True when cutting ``gamma`` yields a simple polytope (no vertex
    of valency 2)."""
    return 2 not in gamma.valencies


def _check_host(p: Polytope3, gamma: EdgeSubgraph) -> None:
    if gamma.host is not p and gamma.host != p:
        raise ValueError("edge subgraph is bound to a different polytope")


def truncate(p: Polytope3, gamma: EdgeSubgraph) -> TruncationResult:
    """Cut every edge of ``gamma`` off ``p`` as combinatorial surgery.

    Raises :class:`NonSimpleResult` when some vertex has valency 2 in
    ``gamma`` (the geometric cut would not be simple, and this model
    holds simple polytopes only).  The output passes full validation.
    """
    _check_host(p, gamma)
    val = gamma.valencies
    for v, c in enumerate(val):
        if c == 2:
            raise NonSimpleResult(
                f"vertex {v} meets the subgraph in exactly 2 edges"
            )

    in_gamma = gamma.edges
    twin = p.twin
    fod = p.face_of_dart

    # the single subgraph edge at each valency-1 vertex
    gamma_at: dict[int, EdgeId] = {}
    for e in in_gamma:
        for w in (e // 3, twin[e] // 3):
            if val[w] == 1:
                gamma_at[w] = e

    # allocate new vertices in deterministic order
    index: dict[tuple, int] = {}
    for v in range(p.vertex_count):
        if val[v] == 0:
            index[("v", v)] = len(index)
        elif val[v] == 1:
            e = gamma_at[v]
            for f in sorted((fod[e], fod[twin[e]])):
                index[("s", v, f)] = len(index)
        else:
            for f in sorted(p.vertex_faces[v]):
                index[("s", v, f)] = len(index)
            index[("c", v)] = len(index)

    cycles: list[tuple[str, int, list[int]]] = []  # (kind, old id, new cycle)

    # old facets, walked in boundary order; corners are rewritten in place
    for fid, cycle in enumerate(p.faces):
        out: list[int] = []
        prev = cycle[-1]
        for d in cycle:
            v = d // 3
            if val[v] == 0:
                out.append(index[("v", v)])
            elif val[v] == 3:
                out.append(index[("s", v, fid)])
            else:
                g = gamma_at[v]
                e_in = prev if prev < twin[prev] else twin[prev]
                e_out = d if d < twin[d] else twin[d]
                if g == e_in or g == e_out:
                    out.append(index[("s", v, fid)])
                else:
                    # corner cut off sideways: enter on the new vertex of
                    # the incoming edge's other facet, leave on the
                    # outgoing edge's
                    x = fod[e_in] if fod[e_in] != fid else fod[twin[e_in]]
                    y = fod[e_out] if fod[e_out] != fid else fod[twin[e_out]]
                    out.append(index[("s", v, x)])
                    out.append(index[("s", v, y)])
            prev = d
        cycles.append(("facet", fid, out))

    # one new facet per cut edge; orientation chosen to run against the
    # neighbouring facet walks
    for e in sorted(in_gamma):
        u = e // 3
        v = twin[e] // 3
        left = fod[e]
        right = fod[twin[e]]
        out = [index[("s", v, left)], index[("s", u, left)]]
        if val[u] == 3:
            out.append(index[("c", u)])
        out.append(index[("s", u, right)])
        out.append(index[("s", v, right)])
        if val[v] == 3:
            out.append(index[("c", v)])
        cycles.append(("edge", e, out))

    # recover the rotation at each new vertex from the corners of the
    # cycles: a corner (a, w, b) means b follows a counterclockwise at w
    successor: list[dict[int, int]] = [{} for _ in range(len(index))]
    for _, _, cyc in cycles:
        k = len(cyc)
        for t in range(k):
            w = cyc[t]
            a = cyc[t - 1]
            b = cyc[t + 1 - k]
            if a in successor[w]:
                raise AssertionError("inconsistent surgery: corner written twice")
            successor[w][a] = b
    rows = []
    for w, succ in enumerate(successor):
        if len(succ) != 3:
            raise AssertionError("inconsistent surgery: vertex degree != 3")
        first = min(succ)
        second = succ[first]
        third = succ[second]
        if succ[third] != first:
            raise AssertionError("inconsistent surgery: rotation does not close")
        rows.append((first, second, third))

    new_poly = build_from_rotation(rows)

    face_of_facet: dict[int, int] = {}
    face_of_edge: dict[int, int] = {}
    for kind, old_id, cyc in cycles:
        a, b = cyc[0], cyc[1]
        fid = new_poly.face_of_dart[3 * a + rows[a].index(b)]
        if kind == "facet":
            face_of_facet[old_id] = fid
        else:
            face_of_edge[old_id] = fid
    targets = sorted(face_of_facet.values()) + sorted(face_of_edge.values())
    assert sorted(targets) == list(range(new_poly.f2))

    return TruncationResult(
        polytope=new_poly,
        face_of_facet=MappingProxyType(face_of_facet),
        face_of_edge=MappingProxyType(face_of_edge),
    )


@dataclass(frozen=True)
class PredictedSizes:
    """Forecast boundary lengths for the cut, by pure counting."""

    facets: Mapping[FaceId, int]
    edge_faces: Mapping[EdgeId, int]


def predicted_face_sizes(p: Polytope3, gamma: EdgeSubgraph) -> PredictedSizes:
    """Forecast the face sizes of ``truncate(p, gamma)`` without surgery.

    An old facet grows by one for each of its vertices whose single cut
    edge points away from it.  A cut edge's facet has two long sides
    plus one end vertex per valency-1 endpoint and two per valency-3
    endpoint.
    """
    _check_host(p, gamma)
    val = gamma.valencies
    for v, c in enumerate(val):
        if c == 2:
            raise NonSimpleResult(
                f"vertex {v} meets the subgraph in exactly 2 edges"
            )
    twin = p.twin
    gamma_at: dict[int, EdgeId] = {}
    for e in gamma.edges:
        for w in (e // 3, twin[e] // 3):
            if val[w] == 1:
                gamma_at[w] = e

    facets: dict[int, int] = {}
    for fid, cycle in enumerate(p.faces):
        edge_set = set(p.face_edges[fid])
        size = len(cycle)
        for d in cycle:
            v = d // 3
            if val[v] == 1 and gamma_at[v] not in edge_set:
                size += 1
        facets[fid] = size

    ends = {1: 1, 3: 2}
    edge_faces = {
        e: 2 + ends[val[e // 3]] + ends[val[twin[e] // 3]]
        for e in gamma.edges
    }
    return PredictedSizes(
        facets=MappingProxyType(facets), edge_faces=MappingProxyType(edge_faces)
    )


def flag_criterion(
    p: Polytope3, gamma: EdgeSubgraph, *, apply_simplex_exception: bool = True
) -> bool:
    """Predict whether the cut polytope is flag, without performing the cut.

    The prediction is false when some triangular facet of ``p`` contains
    two or more subgraph edges (the triangle survives the cut), or when
    some 3-belt of ``p`` contains no subgraph edge (the belt survives).
    One case escapes both clauses: cutting a single edge off the
    tetrahedron gives the triangular prism, which has a 3-belt, so that
    input is reported not flag as well.  ``apply_simplex_exception=False``
    disables the extra case, exposing the two bare clauses.

    Raises :class:`NonSimpleInput` when a valency-2 vertex exists, since
    the prediction only concerns simple results.
    """
    _check_host(p, gamma)
    val = gamma.valencies
    for v, c in enumerate(val):
        if c == 2:
            raise NonSimpleInput(
                f"vertex {v} meets the subgraph in exactly 2 edges"
            )
    chosen = gamma.edges
    for fid in p.triangles:
        if sum(e in chosen for e in p.face_edges[fid]) >= 2:
            return False
    for belt in enumerate_3belts(p):
        if not any(e in chosen for e in belt_edges(p, belt)):
            return False
    if apply_simplex_exception and p.f2 == 4 and len(chosen) == 1:
        return False
    return True
