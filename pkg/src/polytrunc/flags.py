"""Three-belts, missing faces, and two independent flagness checks.

A polytope is flag when every family of pairwise intersecting facets has
a common point.  For simple 3-polytopes the failure modes are tightly
constrained: a vertex lies on exactly 3 facets, so no four facets meet,
and an inclusion-minimal family with empty intersection has size 2, 3
or 4.  ``is_flag`` decides flagness through 3-belt enumeration;
``is_flag_oracle`` decides it straight from the definition with facet
vertex sets and knows nothing about belts.  Both must always agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polytope import FaceId, Polytope3, VertexId, triple_vertex


@dataclass(frozen=True)
class Belt3:
    """Three pairwise adjacent facets with no common vertex."""

    faces: tuple[FaceId, FaceId, FaceId]

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(sorted(self.faces)))
        if len(set(self.faces)) != 3:
            raise ValueError("a 3-belt needs three distinct faces")


@dataclass(frozen=True)
class MissingFace:
    """Inclusion-minimal facet set with empty intersection."""

    faces: tuple[FaceId, ...]

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(sorted(self.faces)))

    @property
    def cardinality(self) -> int:
        return len(self.faces)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_3belts(p: Polytope3) -> list[Belt3]:
    """All face triples that are pairwise adjacent with empty triple
    intersection, sorted by face ids."""
    cached = p.__dict__.get("_belts3")
    if cached is None:
        adjacency = p.face_adjacency_masks
        triples = p._vertex_of_face_triple
        belts = []
        for i in range(p.f2):
            above_i = adjacency[i] >> (i + 1) << (i + 1)
            for j in _iter_bits(above_i):
                common = adjacency[i] & adjacency[j]
                for k in _iter_bits(common >> (j + 1) << (j + 1)):
                    if (i, j, k) not in triples:
                        belts.append(Belt3((i, j, k)))
        cached = sorted(belts, key=lambda b: b.faces)
        p.__dict__["_belts3"] = cached
    return list(cached)


def is_flag(p: Polytope3) -> bool:
    """Flagness via 3-belts: false for the simplex, otherwise true iff
    there is no 3-belt."""
    if p.f2 == 4:
        return False
    return not enumerate_3belts(p)


def is_flag_oracle(p: Polytope3) -> bool:
    """Flagness straight from the definition, by brute force.

    Checks that every pairwise intersecting facet family of size 3 and 4
    has a common vertex, using facet vertex sets only.  Families of size
    5 or more need not be checked: any such family contains a pairwise
    intersecting 4-subset, and a vertex of a simple 3-polytope lies on
    exactly 3 facets, so the 4-subset already fails.
    """
    masks = p.face_vertex_masks
    m = len(masks)
    # pairwise intersection graph from vertex sets (not from edges)
    inter = [0] * m
    for i in range(m):
        mi = masks[i]
        for j in range(i + 1, m):
            if mi & masks[j]:
                inter[i] |= 1 << j
                inter[j] |= 1 << i
    for i in range(m):
        above_i = inter[i] >> (i + 1) << (i + 1)
        for j in _iter_bits(above_i):
            mij = masks[i] & masks[j]
            common = inter[i] & inter[j]
            for k in _iter_bits(common >> (j + 1) << (j + 1)):
                if not mij & masks[k]:
                    return False
                # any pairwise intersecting 4-family has empty overall
                # intersection (only 3 facets per vertex): reject outright
                if common & inter[k] >> (k + 1) << (k + 1):
                    return False
    return True


def missing_faces(p: Polytope3) -> list[MissingFace]:
    """All inclusion-minimal facet sets with empty intersection.

    Cardinality 2: disjoint facet pairs.  Cardinality 3: pairwise
    intersecting triples with no common vertex.  Cardinality 4: pairwise
    intersecting quadruples all of whose triples meet (then the whole
    intersection is empty automatically).  Larger sets cannot be minimal.
    """
    masks = p.face_vertex_masks
    m = len(masks)
    found: list[MissingFace] = []
    inter = [0] * m
    for i in range(m):
        mi = masks[i]
        for j in range(i + 1, m):
            if mi & masks[j]:
                inter[i] |= 1 << j
                inter[j] |= 1 << i
            else:
                found.append(MissingFace((i, j)))
    for i in range(m):
        above_i = inter[i] >> (i + 1) << (i + 1)
        for j in _iter_bits(above_i):
            mij = masks[i] & masks[j]
            common = inter[i] & inter[j]
            for k in _iter_bits(common >> (j + 1) << (j + 1)):
                if not mij & masks[k]:
                    found.append(MissingFace((i, j, k)))
                    continue
                for l in _iter_bits(common & inter[k] >> (k + 1) << (k + 1)):
                    if (
                        mij & masks[l]
                        and masks[i] & masks[k] & masks[l]
                        and masks[j] & masks[k] & masks[l]
                    ):
                        found.append(MissingFace((i, j, k, l)))
    return sorted(found, key=lambda f: (f.cardinality, f.faces))


def belt_edges(p: Polytope3, belt: Belt3) -> tuple[int, int, int]:
    """The three edges shared by the belt's face pairs."""
    i, j, k = belt.faces
    shared = p._shared_edge
    return (shared[(i, j)], shared[(j, k)], shared[(i, k)])


def has_common_vertex(p: Polytope3, i: FaceId, j: FaceId, k: FaceId) -> VertexId | None:
    return triple_vertex(p, i, j, k)
