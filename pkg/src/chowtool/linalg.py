"""Exact integer and rational linear algebra.

Everything here works on plain Python ints and fractions.Fraction; sizes are
desk scale (n <= 8), so clarity wins over asymptotics.
"""

from fractions import Fraction
from math import gcd


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(c * x for x in a)


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def det_int(rows):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def cross_normal(vectors):
    """Integer normal to n-1 independent integer vectors in Z^n.

    Component k is (-1)^k times the minor obtained by deleting column k;
    the result is orthogonal to every input vector.
    """
    m = len(vectors)
    n = m + 1
    normal = []
    for k in range(n):
        minor = [[v[j] for j in range(n) if j != k] for v in vectors]
        normal.append((-1) ** k * det_int(minor))
    return tuple(normal)


def rank_rational(rows):
    """Rank of a matrix with int/Fraction entries."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if a[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        pv = a[rank][col]
        for i in range(nrows):
            if i != rank and a[i][col] != 0:
                f = a[i][col] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == min(nrows, ncols):
            break
    return rank


def solve_rational(matrix, rhs):
    """Solve A x = b exactly; returns a tuple of Fractions or None.

    A must be square and nonsingular for a result; None signals singularity.
    """
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if a[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(a[i][n] for i in range(n))


def matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def matvec(a, v):
    return tuple(dot(row, v) for row in a)


def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def invert_rational(matrix):
    """Exact inverse of a square matrix; None if singular."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if a[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(tuple(a[i][n + j] for j in range(n)) for i in range(n))


def integer_kernel_basis(rows):
    """Basis of the integer kernel {u : M u = 0} of an integer matrix.

    Column reduction by unimodular operations; the returned vectors form a
    lattice basis of the full integer kernel (saturated by construction).
    """
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    a = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_op(j, k, q):
        # column_j -= q * column_k
        for i in range(m):
            a[i][j] -= q * a[i][k]
        for i in range(n):
            u[i][j] -= q * u[i][k]

    def col_swap(j, k):
        for i in range(m):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(n):
            u[i][j], u[i][k] = u[i][k], u[i][j]

    c0 = 0
    for row in range(m):
        if c0 == n:
            break
        while True:
            nz = [j for j in range(c0, n) if a[row][j] != 0]
            if not nz:
                break
            if len(nz) == 1:
                if nz[0] != c0:
                    col_swap(nz[0], c0)
                c0 += 1
                break
            piv = min(nz, key=lambda j: abs(a[row][j]))
            for j in nz:
                if j != piv:
                    q = a[row][j] // a[row][piv]
                    if q != 0:
                        col_op(j, piv, q)
    kernel = []
    for j in range(c0, n):
        if all(a[i][j] == 0 for i in range(m)):
            kernel.append(tuple(u[i][j] for i in range(n)))
    return kernel


def hermite_normal_form(rows):
    """Row-style Hermite normal form over Z (canonical for row-span tests).

    Pivots are positive, entries above a pivot reduced into [0, pivot);
    zero rows dropped.
    """
    if not rows:
        return []
    a = [list(r) for r in rows if any(x != 0 for x in r)]
    if not a:
        return []
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        piv = None
        while True:
            nz = [i for i in range(r, len(a)) if a[i][col] != 0]
            if not nz:
                break
            if len(nz) == 1:
                piv = nz[0]
                break
            best = min(nz, key=lambda i: abs(a[i][col]))
            for i in nz:
                if i != best:
                    q = a[i][col] // a[best][col]
                    if q != 0:
                        a[i] = [x - q * y for x, y in zip(a[i], a[best])]
            a = [row for k, row in enumerate(a) if k < r or any(x != 0 for x in row)]
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        if a[r][col] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][col] // a[r][col]
            if q != 0:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return [tuple(row) for row in a[:r]]


def same_row_span(rows_a, rows_b):
    """True iff two integer matrices generate the same row lattice over Z."""
    return hermite_normal_form(rows_a) == hermite_normal_form(rows_b)


def simplex_relative_volume_times_factorial(vertices):
    """d! times the relative volume of a lattice d-simplex.

    Equals the product of the invariant factors of the edge matrix, i.e. the
    gcd of its maximal minors; value 1 means unimodular.
    """
    verts = list(vertices)
    d = len(verts) - 1
    if d == 0:
        return 1
    edges = [vec_sub(v, verts[0]) for v in verts[1:]]
    n = len(verts[0])
    if d == n:
        return abs(det_int(edges))
    from itertools import combinations

    g = 0
    for cols in combinations(range(n), d):
        minor = [[e[c] for c in cols] for e in edges]
        g = gcd(g, abs(det_int(minor)))
        if g == 1:
            return 1
    return g
