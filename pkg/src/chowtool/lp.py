"""Exact-rational linear programming by the primal simplex method.

Small dense tableaus over Fraction with Bland's anticycling rule; problem
sizes here are a few dozen variables after symmetry reduction, so no
sparsity tricks are needed.
"""

from fractions import Fraction

from .errors import LPUnbounded


def solve_lp(objective, rows, rhs):
    """Maximize objective . x subject to rows x <= rhs and x >= 0.

    Requires rhs >= 0 (x = 0 is the starting basic solution, which the
    callers guarantee: the zero function is always feasible).  Returns
    (optimal value, optimizer tuple).
    """
    m, n = len(rows), len(objective)
    for b in rhs:
        if b < 0:
            raise ValueError("solve_lp needs rhs >= 0")
    tab = [
        [Fraction(rows[i][j]) for j in range(n)]
        + [Fraction(int(kk == i)) for kk in range(m)]
        + [Fraction(rhs[i])]
        for i in range(m)
    ]
    red = [-Fraction(c) for c in objective] + [Fraction(0)] * (m + 1)
    basis = [n + i for i in range(m)]

    while True:
        enter = None
        for j in range(n + m):
            if red[j] < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise LPUnbounded("unbounded direction found")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                row = tab[leave]
                tab[i] = [x - f * y for x, y in zip(tab[i], row)]
        f = red[enter]
        if f != 0:
            row = tab[leave]
            red = [x - f * y for x, y in zip(red, row)]
        basis[leave] = enter

    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tab[i][-1]
    value = sum(Fraction(c) * xi for c, xi in zip(objective, x))
    return value, tuple(x)
