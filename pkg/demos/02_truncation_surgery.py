"""Cutting edge subgraphs off a polytope.

Slicing a set of edges G off a simple 3-polytope P yields a polytope
with one extra facet per cut edge.  The result is simple exactly when
no vertex meets G in two edges.  Everything here is pure combinatorial
surgery on the rotation system, re-validated after every cut.
"""

from polytrunc import (
    EdgeSubgraph,
    NonSimpleResult,
    admits_simple_truncation,
    catalog,
    is_isomorphic,
    p_vector,
    predicted_face_sizes,
    truncate,
    valency_profile,
)

tetrahedron = catalog("tetrahedron")

# Cutting one edge off the tetrahedron gives the triangular prism.
one_edge = EdgeSubgraph.from_vertex_pairs(tetrahedron, [(0, 1)])
print("valencies:", valency_profile(one_edge))
result = truncate(tetrahedron, one_edge)
print("one edge cut:", result.polytope.f_vector,
      p_vector(result.polytope).as_dict())
print("isomorphic to the triangular prism:",
      is_isomorphic(result.polytope, catalog("triangular_prism")))

# The provenance maps tell which new face came from where.
print("old facets map to faces:", dict(result.face_of_facet))
print("cut edges map to faces:", dict(result.face_of_edge))

# A perfect matching of the tetrahedron yields the cube.
matching = EdgeSubgraph.from_vertex_pairs(tetrahedron, [(0, 1), (2, 3)])
print("\nmatching cut is the cube:",
      is_isomorphic(truncate(tetrahedron, matching).polytope, catalog("cube")))

# Face sizes are forecast exactly by counting, before any surgery.
prism = catalog("triangular_prism")
gamma = EdgeSubgraph.from_vertex_pairs(prism, [(0, 3)])
forecast = predicted_face_sizes(prism, gamma)
cut = truncate(prism, gamma)
sizes = cut.polytope.face_sizes
print("\nforecast per old facet:", dict(forecast.facets))
print("actual sizes:", {f: sizes[cut.face_of_facet[f]] for f in range(prism.f2)})

# Two edges meeting at a vertex leave a valency-2 vertex: the cut would
# not be simple, so it is refused.
bad = EdgeSubgraph.from_vertex_pairs(tetrahedron, [(0, 1), (0, 2)])
print("\nadmits simple truncation:", admits_simple_truncation(bad))
try:
    truncate(tetrahedron, bad)
except NonSimpleResult as err:
    print("refused:", err)
