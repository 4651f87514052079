"""Lattice automorphisms, the symmetric/weakly-symmetric predicates, and the
Futaki-Ono invariant.

The automorphism group is the full stabilizer of P in GL(n, Z): it contains
the determinant-one group the stability criteria quantify over, so using it
for invariance only strengthens symmetric-side conclusions and keeps the
falsifier sound.

The FO invariant of an affine function a at dilation k is the average of a
over (1/k)(kP n Z^n) minus its average over P; this is the unique reading
under which both terms are averages over the same body.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import OriginNotInterior
from .geometry import centroid, lattice_points, volume
from .ehrhart import count, moment_sum, lagrange_interpolate, evaluate_polynomial
from .linalg import (
    dot,
    matmul,
    matvec,
    identity_matrix,
    invert_rational,
    rank_rational,
    det_int,
)


@dataclass(frozen=True)
class AffineFunctional:
    """a(x) = <linear, x> + constant with exact rational data."""

    linear: tuple
    constant: Fraction = Fraction(0)

    def __call__(self, point):
        return sum(Fraction(c) * x for c, x in zip(self.linear, point)) + Fraction(
            self.constant
        )

    @staticmethod
    def coordinate(i, n):
        return AffineFunctional(tuple(Fraction(int(j == i)) for j in range(n)))


def _check_origin_interior(P):
    if not all(f.offset >= 1 for f in P.facets):
        raise OriginNotInterior(
            "the linear action fixes 0, so 0 must be interior to P"
        )


def _gram_form(P):
    """G-invariant positive form Q = sum of outer products of facet normals.

    Every lattice automorphism of P permutes the primitive facet normals, so
    it is an isometry of Q; Gram values under Q prune the image search.
    """
    n = P.dim
    q = [[0] * n for _ in range(n)]
    for f in P.facets:
        for i in range(n):
            for j in range(n):
                q[i][j] += f.normal[i] * f.normal[j]
    return tuple(tuple(row) for row in q)


def _q_dot(q, a, b):
    return sum(a[i] * q[i][j] * b[j] for i in range(len(a)) for j in range(len(a)))


def automorphisms(P):
    """All matrices in GL(n, Z) mapping the vertex set of P onto itself.

    Backtracking over images of a linearly independent vertex base, pruned by
    Gram values of the invariant form; the result is asserted to be closed
    under composition.
    """
    _check_origin_interior(P)
    n = P.dim
    verts = list(P.vertices)
    q = _gram_form(P)

    base = []
    rows = []
    for v in verts:
        if rank_rational(rows + [v]) == len(rows) + 1:
            base.append(v)
            rows.append(v)
            if len(base) == n:
                break
    assert len(base) == n, "vertices of a full-dimensional 0-interior polytope span"

    base_inv = invert_rational([list(col) for col in zip(*base)])
    assert base_inv is not None
    grams = [[_q_dot(q, base[i], base[j]) for j in range(i + 1)] for i in range(n)]
    vert_set = set(verts)

    found = []

    def extend(images):
        depth = len(images)
        if depth == n:
            # g maps base[i] -> images[i]; columns solve g * base = images
            img_cols = list(zip(*images))
            g = matmul([list(r) for r in img_cols], base_inv)
            gi = []
            for row in g:
                r = []
                for x in row:
                    fx = Fraction(x)
                    if fx.denominator != 1:
                        return
                    r.append(int(fx))
                gi.append(tuple(r))
            g = tuple(gi)
            if abs(det_int(g)) != 1:
                return
            if {matvec(g, v) for v in verts} != vert_set:
                return
            found.append(g)
            return
        for w in verts:
            ok = True
            for j in range(depth):
                if _q_dot(q, images[j], w) != grams[depth][j]:
                    ok = False
                    break
            if ok and _q_dot(q, w, w) == grams[depth][depth]:
                extend(images + [w])

    extend([])
    found.sort()
    if len(found) <= 200:
        group = set(found)
        for a in found:
            for b in found:
                assert matmul(a, b) in group, "automorphism set not closed"
    return found


def automorphism_generators(P):
    """A generating set of (a subgroup of) the automorphism group.

    Constructor provenance gives generators without a search: products act
    factorwise, a double cone adds the apex swap, and duals act by inverse
    transpose.  Fresh polytopes fall back to the full search.
    """
    prov = P._provenance
    n = P.dim
    if prov is None:
        return automorphisms(P)
    kind, parts = prov
    if kind == "product":
        A, B = parts
        gens = []
        for g in automorphism_generators(A):
            gens.append(_block_diag(g, identity_matrix(B.dim)))
        for g in automorphism_generators(B):
            gens.append(_block_diag(identity_matrix(A.dim), g))
        return gens
    if kind == "double_cone":
        (A,) = parts
        gens = [_block_diag(g, ((1,),)) for g in automorphism_generators(A)]
        flip = _block_diag(identity_matrix(A.dim), ((-1,),))
        gens.append(flip)
        return gens
    if kind == "dual":
        (A,) = parts
        gens = []
        for g in automorphism_generators(A):
            inv = invert_rational(g)
            git = tuple(tuple(int(inv[j][i]) for j in range(n)) for i in range(n))
            gens.append(git)
        return gens
    return automorphisms(P)


def _block_diag(a, b):
    na, nb = len(a), len(b)
    out = []
    for i in range(na):
        out.append(tuple(a[i]) + (0,) * nb)
    for i in range(nb):
        out.append((0,) * na + tuple(b[i]))
    return tuple(out)


def orbits(points, generators):
    """Partition of a point set into orbits under the generated group."""
    point_set = set(points)
    seen = {}
    result = []
    for p in sorted(point_set):
        if p in seen:
            continue
        orbit = {p}
        frontier = [p]
        while frontier:
            x = frontier.pop()
            for g in generators:
                y = matvec(g, x)
                if y in point_set and y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for x in orbit:
            seen[x] = len(result)
        result.append(tuple(sorted(orbit)))
    return result


def is_symmetric(P):
    """True iff the common fixed subspace of the automorphism group is {0}."""
    _check_origin_interior(P)
    n = P.dim
    gens = automorphism_generators(P)
    rows = []
    for g in gens:
        for i in range(n):
            rows.append(tuple(g[i][j] - int(i == j) for j in range(n)))
    return rank_rational(rows) == n


def fo_invariant(P, a, k):
    """Discrete-minus-continuous average of the affine function a.

    The sum runs over p in (1/k)(kP n Z^n), i.e. (a . moment/k + a0 chi)/chi,
    and the integral term reduces to a at the centroid.
    """
    chi = count(P, k)
    mom = moment_sum(P, k)
    lin = [Fraction(c) for c in a.linear]
    discrete = (
        sum(c * Fraction(m, k) for c, m in zip(lin, mom)) / chi + Fraction(a.constant)
    )
    cont = sum(c * x for c, x in zip(lin, centroid(P))) + Fraction(a.constant)
    return discrete - cont


@dataclass(frozen=True)
class WeakSymmetryCertificate:
    """Record of the polynomial identity moment_i(k) = k * centroid_i * chi(k).

    Both sides have degree at most n+1 in k, so agreement at k = 1..n+3
    (plus the trivial k = 0) forces the identity for every k; the stored
    moment and counting polynomials let callers revalidate out of sample.
    """

    dim: int
    checked_ks: tuple
    centroid: tuple
    moment_polys: tuple  # per-coordinate coefficients of moment_sum(P, .)
    count_poly: tuple  # coefficients of chi(kP) sampled through degree n

    def validate_at(self, k):
        chi = evaluate_polynomial(self.count_poly, k)
        for i in range(self.dim):
            mom = evaluate_polynomial(self.moment_polys[i], k)
            if mom != k * self.centroid[i] * chi:
                return False
        return True


@dataclass(frozen=True)
class FOWitness:
    """A nonvanishing FO value; being one nonzero value of a polynomial of
    degree <= n+1, it certifies FO != 0 for all but finitely many k."""

    coordinate: int
    k: int
    value: Fraction

    def describe(self):
        return (
            f"FO(x_{self.coordinate + 1}, k={self.k}) = {self.value} != 0; the "
            "defect is polynomial in k, so it persists for all large k"
        )


def is_weakly_symmetric(P):
    """Certified test that FO_P(a, k) = 0 for every affine a and every k.

    Returns (True, WeakSymmetryCertificate) or (False, FOWitness).  Constant
    functionals vanish identically, so only the n coordinate functionals are
    checked; polynomiality in k upgrades finitely many checks to all k.
    """
    n = P.dim
    c = centroid(P)
    for k in range(1, n + 4):
        chi = count(P, k)
        mom = moment_sum(P, k)
        for i in range(n):
            if Fraction(mom[i]) != k * c[i] * chi:
                value = Fraction(mom[i], k) / chi - c[i]
                return False, FOWitness(coordinate=i, k=k, value=value)
    count_samples = [(k, count(P, k)) for k in range(n + 2)]
    count_poly = tuple(lagrange_interpolate(count_samples))
    mom_samples = [moment_sum(P, k) if k else (0,) * n for k in range(n + 2)]
    mom_polys = tuple(
        tuple(lagrange_interpolate([(k, mom_samples[k][i]) for k in range(n + 2)]))
        for i in range(n)
    )
    cert = WeakSymmetryCertificate(
        dim=n,
        checked_ks=tuple(range(1, n + 4)),
        centroid=tuple(c),
        moment_polys=mom_polys,
        count_poly=count_poly,
    )
    return True, cert
