"""Built-in catalog of simple 3-polytopes.

All entries are generated from explicit vertex coordinates: the rotation
at each vertex is the counterclockwise order of its neighbours around the
outward radial direction.  Validation at construction certifies the
result, so the catalog needs no hand-maintained rotation tables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import atan2, cos, pi, sin, sqrt

from .errors import UnknownName
from .polytope import Polytope3, PVector, build_from_rotation, p_vector

PRISM_MIN = 3
PRISM_MAX = 20

Point = tuple[float, float, float]


def _rotation_from_coordinates(
    points: list[Point], edges: list[tuple[int, int]]
) -> list[tuple[int, int, int]]:
    """Neighbour triples in counterclockwise order around each vertex.

    Assumes the origin is interior to the convex hull of ``points``, so
    the position vector of a vertex is an outward direction there.
    """
    adjacency: dict[int, list[int]] = {v: [] for v in range(len(points))}
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    rows = []
    for v, p in enumerate(points):
        norm = sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2])
        axis = (p[0] / norm, p[1] / norm, p[2] / norm)
        # orthonormal frame (e1, e2, axis), right handed
        pick = (1.0, 0.0, 0.0) if abs(axis[0]) < 0.9 else (0.0, 1.0, 0.0)
        e1 = _unit(_cross(pick, axis))
        e2 = _cross(axis, e1)
        def angle(u: int) -> float:
            q = points[u]
            d = (q[0] - p[0], q[1] - p[1], q[2] - p[2])
            return atan2(_dot(d, e2), _dot(d, e1))
        rows.append(tuple(sorted(adjacency[v], key=angle)))
    return rows


def _dot(a: Point, b: Point) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a: Point, b: Point) -> Point:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _unit(a: Point) -> Point:
    n = sqrt(_dot(a, a))
    return (a[0] / n, a[1] / n, a[2] / n)


def _tetrahedron() -> Polytope3:
    points: list[Point] = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    return build_from_rotation(_rotation_from_coordinates(points, edges))


def _prism(k: int) -> Polytope3:
    """k-gonal prism: bottom ring 0..k-1, top ring k..2k-1."""
    points: list[Point] = []
    for z in (-1.0, 1.0):
        for i in range(k):
            a = 2 * pi * i / k
            points.append((cos(a), sin(a), z))
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + 1) % k))
        edges.append((i, k + i))
    return build_from_rotation(_rotation_from_coordinates(points, edges))


def _dodecahedron() -> Polytope3:
    phi = (1 + sqrt(5)) / 2
    inv = 1 / phi
    points: list[Point] = [
        (x, y, z) for x in (-1.0, 1.0) for y in (-1.0, 1.0) for z in (-1.0, 1.0)
    ]
    for a, b in [(inv, phi), (-inv, phi), (inv, -phi), (-inv, -phi)]:
        points.append((0.0, a, b))
        points.append((a, b, 0.0))
        points.append((b, 0.0, a))
    edge_len2 = (2 * inv) ** 2
    edges = []
    for i in range(20):
        for j in range(i + 1, 20):
            d = tuple(points[i][t] - points[j][t] for t in range(3))
            if abs(_dot(d, d) - edge_len2) < 1e-9:
                edges.append((i, j))
    return build_from_rotation(_rotation_from_coordinates(points, edges))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    polytope: Polytope3
    p_vector: PVector


_PRISM_RE = re.compile(r"^k_prism\((\d+)\)$")
_CACHE: dict[str, Polytope3] = {}


def _known_names() -> str:
    return (
        "tetrahedron, triangular_prism, cube, pentagonal_prism, dodecahedron, "
        f"k_prism(k) for {PRISM_MIN} <= k <= {PRISM_MAX}"
    )


def catalog(name: str) -> Polytope3:
    """Look up a catalog polytope by name.

    Accepts the five fixed names and ``k_prism(k)`` with
    3 <= k <= 20.  Raises :class:`UnknownName` otherwise.
    """
    key = name.strip().lower()
    if key in _CACHE:
        return _CACHE[key]
    m = _PRISM_RE.match(key)
    if m:
        k = int(m.group(1))
        if not PRISM_MIN <= k <= PRISM_MAX:
            raise UnknownName(
                f"k_prism({k}) is out of range; supported: {_known_names()}"
            )
        poly = _prism(k)
    elif key == "tetrahedron":
        poly = _tetrahedron()
    elif key == "triangular_prism":
        poly = _prism(3)
    elif key == "cube":
        poly = _prism(4)
    elif key == "pentagonal_prism":
        poly = _prism(5)
    elif key == "dodecahedron":
        poly = _dodecahedron()
    else:
        raise UnknownName(f"no catalog polytope named {name!r}; known: {_known_names()}")
    _CACHE[key] = poly
    return poly


def catalog_entries() -> list[CatalogEntry]:
    """All catalog polytopes, one entry per combinatorial type."""
    named = [
        "tetrahedron",
        "triangular_prism",
        "cube",
        "pentagonal_prism",
        "dodecahedron",
    ]
    names = named + [f"k_prism({k})" for k in range(6, PRISM_MAX + 1)]
    out = []
    for name in names:
        poly = catalog(name)
        out.append(CatalogEntry(name=name, polytope=poly, p_vector=p_vector(poly)))
    return out
