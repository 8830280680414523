"""Flagness: 3-belts, missing faces, and the cut-prediction criterion.

A simple 3-polytope other than the simplex fails to be flag exactly
when three facets pairwise intersect without a common vertex (a
3-belt).  Whether a cut polytope is flag can be predicted from the host
and the cut subgraph alone; the package checks that prediction against
a brute-force oracle computed on the actual cut.
"""

from polytrunc import (
    EdgeSubgraph,
    catalog,
    enumerate_3belts,
    flag_criterion,
    is_flag,
    is_flag_oracle,
    missing_faces,
    truncate,
)
from polytrunc.sweeps import admissible_subgraphs, run_sweep

prism = catalog("triangular_prism")
print("triangular prism belts:", [b.faces for b in enumerate_3belts(prism)])
print("missing faces:", [m.faces for m in missing_faces(prism)])
print("flag:", is_flag(prism), "| by definition:", is_flag_oracle(prism))

# Cutting the right edge kills the belt: one vertical edge gives the cube.
vertical = EdgeSubgraph.from_vertex_pairs(prism, [(0, 3)])
print("\npredicted flag after cutting 0-3:", flag_criterion(prism, vertical))
print("oracle on the actual cut:",
      is_flag_oracle(truncate(prism, vertical).polytope))

# A triangle edge leaves the belt intact.
bottom = EdgeSubgraph.from_vertex_pairs(prism, [(0, 1)])
print("predicted flag after cutting 0-1:", flag_criterion(prism, bottom))

# The one exception: a single edge of the tetrahedron.  Both clauses of
# the prediction hold vacuously, yet the cut is the prism, hence not
# flag; the criterion reports the case explicitly.
tetrahedron = catalog("tetrahedron")
single = EdgeSubgraph.from_vertex_pairs(tetrahedron, [(0, 1)])
print("\ntetrahedron single edge, bare clauses:",
      flag_criterion(tetrahedron, single, apply_simplex_exception=False))
print("tetrahedron single edge, full criterion:",
      flag_criterion(tetrahedron, single))
print("oracle:", is_flag_oracle(truncate(tetrahedron, single).polytope))

# Sweep every admissible subgraph of the cube: prediction matches the
# oracle on all of them.
cube = catalog("cube")
outcomes = list(run_sweep(cube, admissible_subgraphs(cube)))
agreements = sum(o.agree for o in outcomes)
print(f"\ncube sweep: {agreements}/{len(outcomes)} agreements")
print("flag cuts found:", sum(o.oracle for o in outcomes))
