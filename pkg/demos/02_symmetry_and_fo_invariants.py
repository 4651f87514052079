"""Automorphisms and the Futaki-Ono invariant
=============================================

The FO invariant of an affine functional compares its average over the
rescaled lattice points of kP with its average over P.  Vanishing for every
functional and every k is necessary for asymptotic Chow semistability; a
single nonzero value persists for all large k because both sides are
polynomials in k.
"""

from fractions import Fraction

from chowtool import (
    Polytope,
    AffineFunctional,
    automorphisms,
    is_symmetric,
    fo_invariant,
    is_weakly_symmetric,
    catalog,
)

for name in ("X3", "X4", "X6", "X8", "X9"):
    P = catalog.get(name).polytope
    group = automorphisms(P)
    print(f"{name}: automorphism group of order {len(group)}, "
          f"symmetric {is_symmetric(P)}")

# symmetric polytopes have vanishing FO invariants for free
X6 = catalog.get("X6").polytope
a = AffineFunctional((Fraction(3), Fraction(-2)), Fraction(1, 7))
print("\nFO on X6 for a generic affine functional:")
for k in (1, 2, 3, 4):
    print(f"    k = {k}: {fo_invariant(X6, a, k)}")

# an asymmetric polytope fails the necessary condition, with an exact witness
skew = Polytope([(0, 0), (2, 0), (0, 1)], name="skew triangle")
x1 = AffineFunctional.coordinate(0, 2)
print(f"\nFO of x1 on the skew triangle at k = 1: {fo_invariant(skew, x1, 1)}")
ok, witness = is_weakly_symmetric(skew)
print(f"weakly symmetric: {ok}")
print(f"    {witness.describe()}")

# a weakly symmetric polytope that is not covered by the symmetry shortcut:
# the unit triangle has its only fixed point away from the origin, yet every
# FO invariant vanishes identically
T2 = Polytope([(0, 0), (1, 0), (0, 1)], name="unit triangle")
ok, cert = is_weakly_symmetric(T2)
print(f"\nunit triangle weakly symmetric: {ok}")
print(f"    certificate checked k = {cert.checked_ks}, "
      f"revalidated out of sample: {all(cert.validate_at(k) for k in (6, 7, 8))}")
