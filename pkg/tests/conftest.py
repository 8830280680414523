"""Shared fixtures and independent brute-force helpers.

The helpers here re-derive facts straight from definitions (vertex sets,
powerset scans, pair deletion) so the package's optimized routines are
always checked against a second, dumber route.
"""

from __future__ import annotations

from itertools import combinations

import pytest

from polytrunc import Polytope3, catalog

EXHAUSTIVE_HOSTS = ("tetrahedron", "triangular_prism", "cube", "pentagonal_prism")


@pytest.fixture(scope="session")
def tetrahedron():
    return catalog("tetrahedron")


@pytest.fixture(scope="session")
def triangular_prism():
    return catalog("triangular_prism")


@pytest.fixture(scope="session")
def cube():
    return catalog("cube")


@pytest.fixture(scope="session")
def pentagonal_prism():
    return catalog("pentagonal_prism")


@pytest.fixture(scope="session")
def dodecahedron():
    return catalog("dodecahedron")


# ---------------------------------------------------------------------------
# brute-force oracles
# ---------------------------------------------------------------------------


def face_vertex_sets(p: Polytope3) -> list[frozenset[int]]:
    return [frozenset(vs) for vs in p.face_vertices]


def brute_belts(p: Polytope3) -> list[tuple[int, int, int]]:
    """3-belts by scanning all face triples with vertex sets only."""
    sets = face_vertex_sets(p)
    out = []
    for i, j, k in combinations(range(p.f2), 3):
        if (
            sets[i] & sets[j]
            and sets[j] & sets[k]
            and sets[i] & sets[k]
            and not sets[i] & sets[j] & sets[k]
        ):
            out.append((i, j, k))
    return out


def brute_missing_faces(p: Polytope3) -> list[tuple[int, ...]]:
    """Inclusion-minimal empty-intersection facet sets, cardinality <= 4."""
    sets = face_vertex_sets(p)

    def meet(faces):
        acc = sets[faces[0]]
        for f in faces[1:]:
            acc = acc & sets[f]
        return acc

    out = []
    for size in (2, 3, 4):
        for faces in combinations(range(p.f2), size):
            if meet(faces):
                continue
            if all(
                meet(sub)
                for r in range(1, size)
                for sub in combinations(faces, r)
            ):
                out.append(faces)
    return sorted(out, key=lambda f: (len(f), f))


def brute_is_flag(p: Polytope3) -> bool:
    """Flagness by scanning every facet subset up to the facet count."""
    sets = face_vertex_sets(p)
    for size in range(2, p.f2 + 1):
        for faces in combinations(range(p.f2), size):
            if all(sets[a] & sets[b] for a, b in combinations(faces, 2)):
                acc = sets[faces[0]]
                for f in faces[1:]:
                    acc = acc & sets[f]
                if not acc:
                    return False
    return True


def relabelled(p: Polytope3, perm: list[int], shifts: list[int]) -> list[tuple[int, ...]]:
    """Rotation spec of p with vertices renamed by perm and each rotation
    cyclically shifted; the combinatorial type is unchanged."""
    rows: list[tuple[int, ...]] = [()] * p.vertex_count
    for v, row in enumerate(p.neighbors):
        s = shifts[v] % 3
        turned = row[s:] + row[:s]
        rows[perm[v]] = tuple(perm[u] for u in turned)
    return rows
