"""Exact representations of full-dimensional integral polytopes.

A Polytope is stored by its true vertex list together with the derived
irredundant facet system (inward primitive normals).  All arithmetic is
integer / rational, there are no floating-point paths, and every operation
is a pure function of immutable data.  Intended scale is dimension <= 7
with coordinates of catalog size.

Dilations kP are never materialized: operations take a dilation factor k
and scale facet offsets on the fly.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .errors import NotFullDimensional, NotReflexive, DimensionTooSmall
from .linalg import (
    dot,
    vec_sub,
    primitive,
    det_int,
    cross_normal,
    rank_rational,
    integer_kernel_basis,
    solve_rational,
)


@dataclass(frozen=True)
class Facet:
    """One facet inequality <normal, x> >= -offset of a full-dimensional polytope.

    The normal is inward and primitive; the facet itself lies on
    {x : <normal, x> = -offset}.
    """

    normal: tuple
    offset: int
    vertices: tuple  # true vertices lying on the facet, lexicographically sorted

    def value(self, point, k=1):
        """Slack <normal, point> + k*offset of the dilated inequality."""
        return dot(self.normal, point) + k * self.offset


# ---------------------------------------------------------------------------
# convex hull (beneath-beyond, exact integer arithmetic)
# ---------------------------------------------------------------------------


def _affine_basis(points):
    """Indices of an affinely independent subset spanning the ambient space."""
    n = len(points[0])
    base = [0]
    rows = []
    for i in range(1, len(points)):
        cand = rows + [vec_sub(points[i], points[0])]
        if rank_rational(cand) == len(cand):
            rows = cand
            base.append(i)
            if len(base) == n + 1:
                return base
    raise NotFullDimensional(n, len(base) - 1)


class _RawFacet:
    __slots__ = ("verts", "normal", "h")

    def __init__(self, verts, normal, h):
        self.verts = verts  # tuple of points, sorted
        self.normal = normal  # inward integer normal (primitive)
        self.h = h  # inequality <normal, x> >= h


def _facet_from_points(pts, inside_point):
    """Build a raw simplicial facet through pts oriented toward inside_point."""
    edges = [vec_sub(p, pts[0]) for p in pts[1:]]
    normal = cross_normal(edges)
    normal = primitive(normal)
    h = dot(normal, pts[0])
    side = sum(Fraction(c) * x for c, x in zip(normal, inside_point)) - h
    if side < 0:
        normal = tuple(-c for c in normal)
        h = -h
    elif side == 0:
        raise AssertionError("degenerate facet orientation")
    return _RawFacet(tuple(sorted(pts)), normal, h)


def convex_hull(points):
    """Exact hull of integer points: (true vertices, merged facets, raw simplices).

    Raw simplices triangulate the boundary (they may reference boundary
    points that are not vertices); merged facets carry primitive inward
    normals and the true vertices on each supporting hyperplane.
    """
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    n = len(pts[0])
    if n == 1:
        lo, hi = pts[0][0], pts[-1][0]
        if lo == hi:
            raise NotFullDimensional(1, 0)
        verts = [(lo,), (hi,)]
        facets = [
            Facet(normal=(-1,), offset=hi, vertices=((hi,),)),
            Facet(normal=(1,), offset=-lo, vertices=((lo,),)),
        ]
        facets.sort(key=lambda f: (f.normal, f.offset))
        return verts, facets, [((lo,),), ((hi,),)]

    base = _affine_basis(pts)
    simplex = [pts[i] for i in base]
    inside = tuple(Fraction(sum(c), n + 1) for c in zip(*simplex))

    facets = {}
    next_id = [0]
    ridge_map = {}

    def add_facet(raw):
        fid = next_id[0]
        next_id[0] += 1
        facets[fid] = raw
        for i in range(len(raw.verts)):
            ridge = frozenset(raw.verts[:i] + raw.verts[i + 1 :])
            ridge_map.setdefault(ridge, set()).add(fid)
        return fid

    def remove_facet(fid):
        raw = facets.pop(fid)
        for i in range(len(raw.verts)):
            ridge = frozenset(raw.verts[:i] + raw.verts[i + 1 :])
            owners = ridge_map.get(ridge)
            owners.discard(fid)
            if not owners:
                del ridge_map[ridge]

    for i in range(n + 1):
        face_pts = [simplex[j] for j in range(n + 1) if j != i]
        add_facet(_facet_from_points(face_pts, inside))

    in_simplex = set(simplex)
    for p in pts:
        if p in in_simplex:
            continue
        visible = [fid for fid, f in facets.items() if dot(f.normal, p) < f.h]
        if not visible:
            continue
        visible_set = set(visible)
        horizon = []
        for fid in visible:
            raw = facets[fid]
            for i in range(len(raw.verts)):
                ridge = frozenset(raw.verts[:i] + raw.verts[i + 1 :])
                owners = ridge_map[ridge]
                others = owners - visible_set
                if others:
                    horizon.append(tuple(sorted(ridge)))
        for fid in visible:
            remove_facet(fid)
        for ridge in horizon:
            add_facet(_facet_from_points(list(ridge) + [p], inside))

    for ridge, owners in ridge_map.items():
        if len(owners) != 2:
            raise AssertionError("hull boundary is not ridge-closed")

    # merge coplanar raw facets, then recover true vertices
    merged = {}
    for raw in facets.values():
        merged.setdefault((raw.normal, raw.h), set()).update(raw.verts)

    candidates = set()
    for verts in merged.values():
        candidates.update(verts)
    true_vertices = []
    for v in sorted(candidates):
        active = [normal for (normal, h) in merged if dot(normal, v) == h]
        if len(active) >= n and rank_rational(active) == n:
            true_vertices.append(v)

    facet_list = []
    for (normal, h) in sorted(merged):
        tight = tuple(v for v in true_vertices if dot(normal, v) == h)
        facet_list.append(Facet(normal=normal, offset=-h, vertices=tight))

    raw_simplices = [f.verts for f in facets.values()]
    raw_simplices.sort()
    return true_vertices, facet_list, raw_simplices


# ---------------------------------------------------------------------------
# Polytope
# ---------------------------------------------------------------------------


class Polytope:
    """Full-dimensional integral polytope with exact derived facet data.

    Instances are immutable; construct with a list of integer points (the
    convex hull is computed, non-vertices dropped) or through the
    constructors product / dual / double_cone which derive the facet system
    without a hull run.
    """

    def __init__(self, points, name=None, _trusted=None):
        pts = [tuple(int(x) for x in p) for p in points]
        if not pts:
            raise ValueError("empty point list")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise ValueError("points of mixed dimension")
        self.dim = dims.pop()
        self.name = name
        if _trusted is not None:
            facets, raw = _trusted
            self.vertices = tuple(sorted(set(pts)))
            self.facets = tuple(sorted(facets, key=lambda f: (f.normal, f.offset)))
            self._raw_boundary = raw
            self._validate_trusted()
        else:
            verts, facets, raw = convex_hull(pts)
            self.vertices = tuple(verts)
            self.facets = tuple(facets)
            self._raw_boundary = raw
        self._volume = None
        self._centroid = None
        self._facet_relvols = None
        self._points_cache = {}
        self._provenance = None  # ("product", (P, Q)) etc., set by constructors

    # -- construction helpers ------------------------------------------------

    def _validate_trusted(self):
        n = self.dim
        for v in self.vertices:
            for f in self.facets:
                if f.value(v) < 0:
                    raise AssertionError("trusted facet system violated by a vertex")
        for f in self.facets:
            tight = [v for v in self.vertices if f.value(v) == 0]
            if len(tight) < n:
                raise AssertionError("trusted facet with too few tight vertices")
            rows = [vec_sub(v, tight[0]) for v in tight[1:]]
            if rank_rational(rows) != n - 1:
                raise AssertionError("trusted facet not (n-1)-dimensional")
        for v in self.vertices:
            active = [f.normal for f in self.facets if f.value(v) == 0]
            if rank_rational(active) != n:
                raise AssertionError("trusted vertex list contains a non-vertex")

    def __repr__(self):
        label = self.name or "polytope"
        return f"<{label}: dim {self.dim}, {len(self.vertices)} vertices, {len(self.facets)} facets>"

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def with_name(self, name):
        clone = Polytope.__new__(Polytope)
        clone.__dict__.update(self.__dict__)
        clone.name = name
        clone._points_cache = {}
        return clone

    # -- basic queries ---------------------------------------------------------

    def contains(self, point, k=1):
        return all(f.value(point, k) >= 0 for f in self.facets)

    def strictly_contains(self, point, k=1):
        return all(f.value(point, k) > 0 for f in self.facets)

    def bounding_box(self, k=1):
        los, his = [], []
        for i in range(self.dim):
            coords = [v[i] for v in self.vertices]
            los.append(k * min(coords))
            his.append(k * max(coords))
        return los, his

    def raw_boundary_simplices(self):
        """Simplicial facets from the hull run (a corner triangulation of the boundary)."""
        if self._raw_boundary is None:
            verts, facets, raw = convex_hull(self.vertices)
            self._raw_boundary = raw
        return self._raw_boundary


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def facets(P):
    """The irredundant facet system, lexicographically ordered by normal."""
    return list(P.facets)


def lattice_points(P, k):
    """All integer points of kP, by pruned bounding-box scan.

    The scan fixes coordinates one at a time; every facet inequality is
    propagated through interval arithmetic on the remaining coordinates, so
    the enumeration visits little more than the answer.
    """
    if k < 1:
        raise ValueError("dilation k must be >= 1")
    cached = P._points_cache.get(k)
    if cached is not None:
        return cached
    if P._provenance and P._provenance[0] == "product":
        A, B = P._provenance[1]
        pts = sorted(a + b for a in lattice_points(A, k) for b in lattice_points(B, k))
        P._points_cache[k] = pts
        return pts
    n = P.dim
    los, his = P.bounding_box(k)
    norms = [f.normal for f in P.facets]
    rhs = [-k * f.offset for f in P.facets]  # need <normal, x> >= rhs
    # suffix extrema of each facet functional over the box
    suf_min = [[0] * (n + 1) for _ in norms]
    suf_max = [[0] * (n + 1) for _ in norms]
    for fi, nml in enumerate(norms):
        for j in range(n - 1, -1, -1):
            c = nml[j]
            lo_term = min(c * los[j], c * his[j])
            hi_term = max(c * los[j], c * his[j])
            suf_min[fi][j] = suf_min[fi][j + 1] + lo_term
            suf_max[fi][j] = suf_max[fi][j + 1] + hi_term

    out = []
    point = [0] * n

    def rec(j, partial):
        # partial[fi] = sum over coords < j of normal[fi] . point
        if j == n:
            out.append(tuple(point))
            return
        lo, hi = los[j], his[j]
        for fi, nml in enumerate(norms):
            c = nml[j]
            bound = rhs[fi] - partial[fi] - suf_max[fi][j + 1]
            if c > 0:
                lo = max(lo, -((-bound) // c))  # ceil(bound / c)
            elif c < 0:
                hi = min(hi, bound // c)  # floor(bound / c), c negative
            elif bound > 0:
                return
        if lo > hi:
            return
        for x in range(lo, hi + 1):
            point[j] = x
            new_partial = [partial[fi] + norms[fi][j] * x for fi in range(len(norms))]
            rec(j + 1, new_partial)

    rec(0, [0] * len(norms))
    out.sort()
    P._points_cache[k] = out
    return out


def interior_lattice_points(P, k=1):
    return [v for v in lattice_points(P, k) if P.strictly_contains(v, k)]


def boundary_lattice_points(P, k=1):
    return [v for v in lattice_points(P, k) if not P.strictly_contains(v, k)]


def _fan_simplices(P):
    """Fan (placing) decomposition from the lexicographically least vertex.

    Yields full-dimensional simplices (v0, s_1..s_n) covering P, one per raw
    boundary simplex not containing v0.
    """
    v0 = P.vertices[0]
    for simplex in P.raw_boundary_simplices():
        if v0 in simplex:
            continue
        yield (v0,) + simplex


def volume(P):
    """Exact Euclidean volume (conv{0, e_1..e_n} has volume 1/n!)."""
    if P._volume is not None:
        return P._volume
    n = P.dim
    total = 0
    for simplex in _fan_simplices(P):
        edges = [vec_sub(q, simplex[0]) for q in simplex[1:]]
        total += abs(det_int(edges))
    vol = Fraction(total, _factorial(n))
    P._volume = vol
    return vol


def centroid(P):
    """Exact centroid, volume-weighted over the fan decomposition."""
    if P._centroid is not None:
        return P._centroid
    n = P.dim
    total = 0
    acc = [Fraction(0)] * n
    for simplex in _fan_simplices(P):
        edges = [vec_sub(q, simplex[0]) for q in simplex[1:]]
        w = abs(det_int(edges))
        if w == 0:
            continue
        total += w
        for i in range(n):
            acc[i] += w * Fraction(sum(q[i] for q in simplex), n + 1)
    c = tuple(a / total for a in acc)
    P._centroid = c
    return c


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def facet_lattice_basis(facet):
    """Basis of the direction lattice of the facet hyperplane (integer kernel of the normal)."""
    return integer_kernel_basis([list(facet.normal)])


def facet_coordinates(facet, points):
    """Coordinates of facet points in the facet's own lattice (anchored at the first vertex)."""
    basis = facet_lattice_basis(facet)
    anchor = facet.vertices[0]
    cols = list(zip(*basis))  # n x (n-1) matrix
    out = []
    for p in points:
        target = vec_sub(p, anchor)
        sol = _solve_integer_least(cols, target)
        out.append(sol)
    return out, basis, anchor


def _solve_integer_least(cols, target):
    """Solve cols * x = target where cols is n x d of rank d; x integral."""
    n = len(cols)
    d = len(cols[0])
    rows = []
    rhs = []
    for i in range(n):
        rows.append(list(cols[i]))
        rhs.append(target[i])
    # pick d independent rows
    chosen, chosen_rhs = [], []
    for i in range(n):
        cand = chosen + [rows[i]]
        if rank_rational(cand) == len(cand):
            chosen = cand
            chosen_rhs.append(rhs[i])
            if len(chosen) == d:
                break
    sol = solve_rational(chosen, chosen_rhs)
    assert sol is not None
    assert all(x.denominator == 1 for x in sol), "facet point outside facet lattice"
    sol = tuple(int(x) for x in sol)
    for i in range(n):
        assert sum(cols[i][j] * sol[j] for j in range(d)) == target[i]
    return sol


def facet_relative_volume(P, facet):
    """Relative (lattice-normalized) volume of one facet.

    A unimodular (n-1)-simplex in the facet contributes 1/(n-1)!; this is
    the normalization that makes the Ehrhart k^{n-1} coefficient equal
    Vol(boundary)/2.
    """
    if P._facet_relvols is not None:
        got = P._facet_relvols.get((facet.normal, facet.offset))
        if got is not None:
            return got
    n = P.dim
    if n == 1:
        return Fraction(1)
    if len(facet.vertices) == n:
        from .linalg import simplex_relative_volume_times_factorial

        g = simplex_relative_volume_times_factorial(facet.vertices)
        return Fraction(g, _factorial(n - 1))
    coords, _, _ = facet_coordinates(facet, facet.vertices)
    sub = Polytope(coords)
    return volume(sub)


def boundary_volume(P):
    """Lattice-normalized boundary volume, summed over facets."""
    if P.dim < 2:
        raise DimensionTooSmall("boundary volume needs dimension >= 2")
    return sum(facet_relative_volume(P, f) for f in P.facets)


def is_reflexive(P):
    """True iff every facet offset is 1 (then 0 is the unique interior lattice point)."""
    if not all(f.offset == 1 for f in P.facets):
        return False
    interior = interior_lattice_points(P, 1)
    assert interior == [tuple([0] * P.dim)], "reflexive cross-check failed"
    return True


def product(P, Q, name=None):
    """Cartesian product, with facet system and caches derived from the factors."""
    n, m = P.dim, Q.dim
    verts = [a + b for a in P.vertices for b in Q.vertices]
    zero_m = (0,) * m
    zero_n = (0,) * n
    new_facets = []
    for f in P.facets:
        tight = tuple(sorted(a + b for a in f.vertices for b in Q.vertices))
        new_facets.append(Facet(normal=f.normal + zero_m, offset=f.offset, vertices=tight))
    for f in Q.facets:
        tight = tuple(sorted(a + b for a in P.vertices for b in f.vertices))
        new_facets.append(Facet(normal=zero_n + f.normal, offset=f.offset, vertices=tight))
    R = Polytope(verts, name=name, _trusted=(new_facets, None))
    R._provenance = ("product", (P, Q))
    R._volume = volume(P) * volume(Q)
    cp = centroid(P)
    cq = centroid(Q)
    R._centroid = tuple(cp) + tuple(cq)
    relvols = {}
    for f in P.facets:
        relvols[(f.normal + zero_m, f.offset)] = facet_relative_volume(P, f) * volume(Q)
    for f in Q.facets:
        relvols[(zero_n + f.normal, f.offset)] = volume(P) * facet_relative_volume(Q, f)
    R._facet_relvols = relvols
    return R


def dual(P, name=None):
    """Polar dual of a reflexive polytope (vertices = facet normals)."""
    if not all(f.offset == 1 for f in P.facets):
        raise NotReflexive("dual requires all facet offsets equal to 1")
    verts = [f.normal for f in P.facets]
    new_facets = []
    for v in P.vertices:
        tight = tuple(sorted(f.normal for f in P.facets if v in f.vertices))
        new_facets.append(Facet(normal=v, offset=1, vertices=tight))
    R = Polytope(verts, name=name, _trusted=(new_facets, None))
    R._provenance = ("dual", (P,))
    return R


def double_cone(P, name=None):
    """Bipyramid over P x {0} with apexes (0,...,0,+-1).

    Lattice points of k.D(P) at height q form (k-|q|)P; facets are pyramids
    over the facets of P.
    """
    n = P.dim
    verts = [v + (0,) for v in P.vertices]
    apex_up = (0,) * n + (1,)
    apex_dn = (0,) * n + (-1,)
    verts += [apex_up, apex_dn]
    new_facets = []
    for f in P.facets:
        base = [v + (0,) for v in f.vertices]
        for apex, sgn in ((apex_up, -f.offset), (apex_dn, f.offset)):
            normal = f.normal + (sgn,)
            tight = tuple(sorted(base + [apex]))
            new_facets.append(Facet(normal=normal, offset=f.offset, vertices=tight))
    R = Polytope(verts, name=name, _trusted=(new_facets, None))
    R._provenance = ("double_cone", (P,))
    R._volume = 2 * volume(P) / (n + 1)
    cp = centroid(P)
    R._centroid = tuple(Fraction(n + 1, n + 2) * c for c in cp) + (Fraction(0),)
    relvols = {}
    for f in P.facets:
        rv = facet_relative_volume(P, f) / n if n >= 2 else Fraction(1, 1)
        relvols[(f.normal + (-f.offset,), f.offset)] = rv
        relvols[(f.normal + (f.offset,), f.offset)] = rv
    R._facet_relvols = relvols
    return R


def lattice_shells(P, k):
    """Partition of kP into boundary shells of iP, i = 0..k (reflexive P only)."""
    if not all(f.offset == 1 for f in P.facets):
        raise NotReflexive("lattice shells require a reflexive polytope")
    shells = {i: set() for i in range(k + 1)}
    for v in lattice_points(P, k):
        level = max(-dot(f.normal, v) for f in P.facets)
        level = max(level, 0)
        shells[level].add(v)
    return shells
