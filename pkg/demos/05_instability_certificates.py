"""Destabilizing certificates on double cones
=============================================

The double cone over a polytope with volume at least (n+1)(n+2) is not
asymptotically Chow semistable: the cap function supported on the two apex
cones has sum 2 but integral 2 Vol(Q)/((n+1)(n+2)) > 2, and its chow gap is
negative for every dilation.  The six-cube is the first cube over the
threshold.
"""

from fractions import Fraction

from chowtool import (
    chow_gap,
    double_cone,
    double_cone_instability,
    falsify,
    volume,
    count,
    catalog,
)
from chowtool.stability import double_cone_cap

for n in (4, 5, 6, 7):
    Q = catalog.get(f"cube{n}").polytope
    verdict = double_cone_instability(Q)
    thresh = (n + 1) * (n + 2)
    print(f"D(cube{n}): Vol = {volume(Q)} vs threshold {thresh} -> {verdict.status}")
    if verdict.certificate:
        c = verdict.certificate
        print(f"    cap gap at k = {c.k}: {c.gap}")

# re-evaluate the cube6 certificate through the gap evaluator by hand
Q = catalog.get("cube6").polytope
D, cap = double_cone_cap(Q, 1)
gap = chow_gap(D, 1, cap)
chi = count(D, 1)
print(f"\nby hand: chi(D) = {chi}, sum f = 2, so the discrete average is 2/{chi};")
print(f"the continuous average is (16/7)/Vol(D) = 1/8; gap = {gap}")

# the LP falsifier searches all fold-convex PL functions on a carrier and
# can only do better than the cap
cert = falsify(D, 1)
print(f"\nLP falsifier optimum gap: {cert.gap} (cap gave {gap})")
