"""Building simple 3-polytopes and querying their combinatorics.

A polytope is described by its rotation system: each vertex lists its
three neighbours in counterclockwise order.  Construction validates the
whole package contract, so anything that builds is a genuine
combinatorial simple 3-polytope.
"""

from polytrunc import (
    Not3Connected,
    NotCubic,
    build_from_rotation,
    catalog,
    check_star_identity,
    faces_adjacent,
    p_vector,
    triple_vertex,
)

# The tetrahedron by hand: 4 vertices, each adjacent to the other three.
tetrahedron = build_from_rotation([
    (2, 3, 1),
    (3, 2, 0),
    (3, 0, 1),
    (2, 1, 0),
])
print("tetrahedron f-vector:", tetrahedron.f_vector)
print("tetrahedron faces:", tetrahedron.face_vertices)

# The catalog covers the usual suspects, including every prism up to 20.
for name in ("cube", "pentagonal_prism", "dodecahedron", "k_prism(12)"):
    p = catalog(name)
    pv = p_vector(p)
    print(f"{name}: f={p.f_vector} p-vector={pv.as_dict()}"
          f" identity-ok={check_star_identity(pv)}")

# Face incidence queries: two faces share at most one edge, three faces
# share at most one vertex.
cube = catalog("cube")
print("\ncube faces 0 and 1 share edge:", faces_adjacent(cube, 0, 1))
print("cube corner faces meet at vertex:",
      triple_vertex(cube, *cube.vertex_faces[0]))

# Validation rejects anything that is not a simple 3-polytope.
try:
    build_from_rotation([(1, 2), (0, 2, 3), (0, 1, 3), (1, 2, 0)])
except NotCubic as err:
    print("\ndegree-2 vertex rejected:", err)

try:
    build_from_rotation([
        (4, 2, 3), (3, 2, 5), (1, 3, 0), (2, 1, 0),
        (7, 6, 0), (6, 7, 1), (4, 7, 5), (6, 4, 5),
    ])
except Not3Connected as err:
    print("2-connected graph rejected:", err)
