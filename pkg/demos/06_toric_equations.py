"""Binomial equations of the toric embeddings
=============================================

The lattice points of P index homogeneous coordinates z_0..z_N (z_0 at the
origin); every integer relation among the points yields a binomial, with
z_0 absorbing the degree surplus.  The emitted sets are kernel-lattice
generators, not a saturated ideal basis, and say so.
"""

from chowtool.toricgen import render_equations
from chowtool import catalog

for name in ("X3", "X4", "X6", "A3", "D3", "D_X3", "D_X4"):
    print(render_equations(catalog.get(name).polytope, name=name))
    print()
