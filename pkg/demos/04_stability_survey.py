"""Stability survey over the catalog
====================================

classify() runs the verdict pipeline: product factorization, the
special-polytope criterion, the incidence criterion, cap instabilities, and
finally the LP falsifier.  Verdicts only assert what a theorem licenses;
everything else stays inconclusive.
"""

from chowtool import classify, catalog

SURVEY = [
    "X3", "X4", "X6", "X8", "X9",
    "X3_x_segment", "X9_x_segment",
    "D_X3", "D_X4", "D_X6", "D_X8", "D_X9",
    "A3", "D3", "cube3", "P3modZ4",
    "cuboctahedron", "rhombic_dodecahedron", "P3_blowup4_dual",
    "P3_blowup4",
]

for name in SURVEY:
    P = catalog.get(name).polytope
    verdict = classify(P)
    deciding = next((c for c in verdict.checks if c.passed), None)
    via = deciding.name if deciding else "-"
    print(f"{name:22s} {verdict.status:16s} via {via}")

print()
print("P3_blowup4 stays inconclusive: the listed vertices put its corner-cut")
print("triangles at lattice distance two, so none of the reflexive-polytope")
print("criteria apply (see the catalog entry notes).")
