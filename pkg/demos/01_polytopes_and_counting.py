"""Lattice polytopes and exact point counting
=============================================

Build a few polytopes, inspect their facet systems, and watch the Ehrhart
polynomial reproduce the dilation counts exactly.
"""

from chowtool import (
    Polytope,
    facets,
    lattice_points,
    volume,
    boundary_volume,
    is_reflexive,
    lattice_shells,
    ehrhart_polynomial,
    count,
    catalog,
)

# the five reflexive polygons whose fixed-point-free symmetry will matter later
for name in ("X3", "X4", "X6", "X8", "X9"):
    P = catalog.get(name).polytope
    print(f"{name}: vertices {list(P.vertices)}")
    print(f"    volume {volume(P)}, boundary volume {boundary_volume(P)}, "
          f"reflexive {is_reflexive(P)}")

# facets are stored as inward primitive normals with offsets; for a
# reflexive polytope every offset is 1
X6 = catalog.get("X6").polytope
print("\nX6 facet system:")
for f in facets(X6):
    print(f"    <{f.normal}, x> >= -{f.offset}")

# chi(kP) is a polynomial in k; the leading coefficients are the volume and
# half the boundary volume, and in the plane this is exactly Pick's theorem
X3 = catalog.get("X3").polytope
poly = ehrhart_polynomial(X3)
print(f"\nEhrhart polynomial of X3: {poly}")
for k in range(7):
    print(f"    chi({k} X3) = {count(X3, k)}  (polynomial gives {poly(k)})")

# reflexive polytopes stratify into boundary shells of the sub-dilations
print("\nshells of 3 X4:")
for level, pts in sorted(lattice_shells(catalog.get("X4").polytope, 3).items()):
    print(f"    level {level}: {len(pts)} points")
