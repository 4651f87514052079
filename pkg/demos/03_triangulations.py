"""Unimodular triangulations and incidence counts
=================================================

The regular-boundary property asks for a face-compatible unimodular
triangulation of every dilated boundary with at most n! cells at each
lattice point.  The octahedron passes; the double cones over the square and
the big triangle are forced to fail at their apexes.
"""

from chowtool import (
    standard_simplex_triangulation,
    boundary_triangulation,
    cone_over_boundary,
    verify_regular_boundary,
    incidence,
    double_cone,
    volume,
    catalog,
)

# the alcove triangulation of a dilated standard simplex: k^n unimodular
# cells, incidence (n+1)!/(r+1)! on the chain strata
T = standard_simplex_triangulation(2, 3)
print(f"alcove cells of 3 T_2: {len(T)}")
inc = incidence(T)
print(f"    interior point (1,1) meets {inc[(1, 1)]} cells (= 3!)")
print(f"    corner (0,0) meets {inc[(0, 0)]} cell")

# boundary triangulations assembled facet by facet
for name in ("D_X4", "D_X6", "D_X8", "D_X9"):
    P = catalog.get(name).polytope
    k = 2
    B = boundary_triangulation(P, k)
    report = verify_regular_boundary(P, B, k)
    print(f"{name} at k = {k}: {report.summary()}")
    if report.offenders:
        print(f"    offending points: {list(report.offenders)}")

# coning a boundary triangulation over the origin fills the solid polytope
X3 = catalog.get("X3").polytope
B = boundary_triangulation(X3, 2)
C = cone_over_boundary(X3, B)
print(f"\ncones over the boundary of 2 X3: {len(C)} cells, "
      f"volume {C.relative_volume()} = Vol(2 X3) = {volume(X3) * 4}")
print(f"    the origin meets {incidence(C)[(0, 0)]} cones")
