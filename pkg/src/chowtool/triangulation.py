"""Unimodular triangulations and incidence counts.

Two building blocks cover the whole catalog:

* the alcove triangulation of a dilated standard simplex kT_n (the affine
  type-A hyperplane arrangement; k^n unimodular cells, every lattice point
  attains the incidence profile (n+1)!/(r+1)! on skeleton interiors), and
* the staircase (Freudenthal) triangulation of axis-aligned boxes.

Boundary triangulations are assembled facet by facet: facets that are
dilated unimodular simplices or axis-aligned boxes transport the two model
triangulations, two-dimensional facets get a bespoke polygon triangulation,
and anything else must be user-supplied.  Cell sets restricted to shared
faces are lattice-intrinsic for the simplex/box strategies, which is what
makes the per-facet assembly face-compatible.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product

from .errors import NoStrategy, NotReflexive
from .geometry import (
    Polytope,
    facet_coordinates,
    facet_relative_volume,
    boundary_volume,
    volume,
    convex_hull,
    _factorial,
)
from .linalg import (
    dot,
    vec_sub,
    vec_add,
    det_int,
    solve_rational,
    rank_rational,
    simplex_relative_volume_times_factorial,
)


@dataclass(frozen=True)
class LatticeSimplex:
    """A d-dimensional lattice simplex given by its d+1 vertices (sorted)."""

    vertices: tuple

    @property
    def dim(self):
        return len(self.vertices) - 1

    def relative_volume(self):
        """Volume against the lattice of the affine hull; unimodular means 1/d!."""
        g = simplex_relative_volume_times_factorial(self.vertices)
        return Fraction(g, _factorial(self.dim))

    def is_unimodular(self):
        return simplex_relative_volume_times_factorial(self.vertices) == 1

    def barycentric(self, point):
        """Exact barycentric coordinates of a point, or None if outside."""
        verts = self.vertices
        d = self.dim
        n = len(verts[0])
        rows = [[Fraction(verts[j][i]) for j in range(d + 1)] for i in range(n)]
        rows.append([Fraction(1)] * (d + 1))
        rhs = [Fraction(x) for x in point] + [Fraction(1)]
        chosen, chosen_rhs = [], []
        for i in range(len(rows)):
            cand = chosen + [rows[i]]
            if rank_rational(cand) == len(cand):
                chosen = cand
                chosen_rhs.append(rhs[i])
                if len(chosen) == d + 1:
                    break
        sol = solve_rational(chosen, chosen_rhs)
        if sol is None:
            return None
        for i in range(len(rows)):
            if sum(rows[i][j] * sol[j] for j in range(d + 1)) != rhs[i]:
                return None
        if any(c < 0 for c in sol):
            return None
        return sol

    def contains(self, point):
        return self.barycentric(point) is not None


def make_simplex(points):
    return LatticeSimplex(vertices=tuple(sorted(tuple(p) for p in points)))


@dataclass
class Triangulation:
    """A finite set of lattice simplices of equal dimension.

    The incidence map counts, for every lattice point of the union, the
    simplices whose closed cell contains it.
    """

    dim: int
    simplices: tuple
    strategy: str = "explicit"
    _incidence: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.simplices = tuple(
            sorted(self.simplices, key=lambda s: s.vertices)
        )

    def __len__(self):
        return len(self.simplices)

    def relative_volume(self):
        return sum(s.relative_volume() for s in self.simplices)

    def all_unimodular(self):
        return all(s.is_unimodular() for s in self.simplices)

    def incidence(self):
        if self._incidence is not None:
            return self._incidence
        counts = {}
        for s in self.simplices:
            if s.is_unimodular():
                pts = s.vertices
            else:
                pts = _lattice_points_of_simplex(s)
            for p in pts:
                counts[p] = counts.get(p, 0) + 1
        self._incidence = counts
        return counts

    def ridge_census(self):
        """Map from (d-1)-subface (frozenset) to the number of incident cells."""
        census = {}
        for s in self.simplices:
            verts = s.vertices
            for i in range(len(verts)):
                face = frozenset(verts[:i] + verts[i + 1 :])
                census[face] = census.get(face, 0) + 1
        return census


def _lattice_points_of_simplex(s):
    verts = s.vertices
    n = len(verts[0])
    los = [min(v[i] for v in verts) for i in range(n)]
    his = [max(v[i] for v in verts) for i in range(n)]
    out = []
    for p in iter_product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        if s.contains(p):
            out.append(p)
    return out


def incidence(T):
    """Spec-level alias: incidence counts of a Triangulation."""
    return T.incidence()


# ---------------------------------------------------------------------------
# model triangulations
# ---------------------------------------------------------------------------


def _alcove_cells_order_simplex(n, k):
    """Cells of the affine type-A arrangement inside 0 <= y_1 <= ... <= y_n <= k.

    Each cell is a chain m, m+e_{s1}, ..., m+1 staying weakly increasing;
    exactly k^n cells come out.
    """
    cells = []

    def bases(prefix, low):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(low, k):
            yield from bases(prefix + [v], v)

    def chains(current, remaining, chain):
        if not remaining:
            cells.append(tuple(chain))
            return
        for j in list(remaining):
            nxt = list(current)
            nxt[j] += 1
            if j + 1 < n and nxt[j] > current[j + 1]:
                continue
            if j == n - 1 and nxt[j] > k:
                continue
            if j > 0 and nxt[j - 1] > nxt[j]:
                continue
            chains(tuple(nxt), remaining - {j}, chain + [tuple(nxt)])

    for m in bases([], 0):
        chains(m, frozenset(range(n)), [m])
    return cells


def _y_to_x(y):
    prev = 0
    out = []
    for v in y:
        out.append(v - prev)
        prev = v
    return tuple(out)


def standard_simplex_triangulation(n, k):
    """Alcove triangulation of kT_n = conv{0, k e_1, ..., k e_n}.

    k^n unimodular cells; a lattice point interior to an (n-r)-dimensional
    face of kT_n lies in (n+1)!/(r+1)! of them.
    """
    simplices = []
    for chain in _alcove_cells_order_simplex(n, k):
        simplices.append(make_simplex([_y_to_x(y) for y in chain]))
    return Triangulation(dim=n, simplices=tuple(simplices), strategy="alcove")


def alcove_refine_dilated_simplex(verts, k):
    """Alcove cells of k * conv(verts) for a unimodular lattice simplex.

    The cell set is invariant only under dihedral relabelings of the vertex
    cycle, so the cycle is fixed canonically to the lexicographic vertex
    order.  Restricting a lex cycle to a subset of vertices again gives the
    lex cycle, which makes refinements of adjacent simplices agree on their
    shared faces.
    """
    return alcove_refine_cycle(sorted(tuple(v) for v in verts), k)


def alcove_refine_cycle(verts, k):
    """Alcove cells of k * conv(verts) with the vertex cycle given by the
    caller's order.

    Only safe when every shared face of adjacent simplices has at most
    three vertices (three-element cycles are all dihedrally equivalent),
    or when neighbours use the induced order of this cycle.
    """
    verts = [tuple(v) for v in verts]
    d = len(verts) - 1
    base = verts[0]
    cols = [vec_sub(v, base) for v in verts[1:]]
    cells = []
    for chain in _alcove_cells_order_simplex(d, k):
        mapped = []
        for y in chain:
            x = _y_to_x(y)
            p = tuple(
                k * base[i] + sum(cols[j][i] * x[j] for j in range(d))
                for i in range(len(base))
            )
            mapped.append(p)
        cells.append(make_simplex(mapped))
    return cells


def refine_anchored(small, m):
    """Alcove cells of the m-fold dilation of conv(small) about small[0].

    Used for facets that are m-dilated unimodular simplices in place: the
    target simplex is small[0] + m (conv(small) - small[0]).  Translation
    preserves lexicographic order, so the canonical cycles still match
    across shared faces.
    """
    base = small[0]
    shift = tuple((1 - m) * x for x in base)
    out = []
    for c in alcove_refine_dilated_simplex(list(small), m):
        out.append([tuple(a + s for a, s in zip(v, shift)) for v in c.vertices])
    return out


def _freudenthal_box_cells(los, his):
    """Staircase cells of an axis-aligned integer box, one chain per unit cell."""
    d = len(los)
    cells = []
    ranges = [range(lo, hi) for lo, hi in zip(los, his)]
    for m in iter_product(*ranges):
        for chain in _permutation_chains(d):
            pts = [m]
            cur = list(m)
            for j in chain:
                cur[j] += 1
                pts.append(tuple(cur))
            cells.append(pts)
    return cells


def _permutation_chains(d):
    if d == 0:
        yield ()
        return
    from itertools import permutations

    yield from permutations(range(d))


# ---------------------------------------------------------------------------
# boundary triangulation strategies
# ---------------------------------------------------------------------------


def _embed(active, fixed, point):
    """Rebuild an ambient point from values on active coordinates."""
    out = list(fixed)
    for idx, value in zip(active, point):
        out[idx] = value
    return tuple(out)


def _facet_as_aligned_box(facet):
    """Detect an axis-aligned box facet; returns (active coords, lows, highs) or None."""
    verts = facet.vertices
    n = len(verts[0])
    los = [min(v[i] for v in verts) for i in range(n)]
    his = [max(v[i] for v in verts) for i in range(n)]
    active = [i for i in range(n) if los[i] != his[i]]
    expected = set()
    for combo in iter_product(*( (los[i], his[i]) for i in active )):
        expected.add(_embed(active, los, combo))
    if expected == set(verts):
        return active, los, his
    return None


def _facet_as_dilated_simplex(facet):
    """Detect facet = m * (unimodular simplex); returns (m, vertices) or None."""
    verts = facet.vertices
    n = len(verts[0])
    d = n - 1
    if len(verts) != d + 1:
        return None
    coords, _, _ = facet_coordinates(facet, verts)
    edges = [vec_sub(c, coords[0]) for c in coords[1:]]
    det = abs(det_int(edges))
    if det == 0:
        return None
    m = round(det ** (1.0 / d))
    for cand in (m - 1, m, m + 1):
        if cand >= 1 and cand ** d == det:
            m = cand
            break
    else:
        return None
    for e in edges:
        if any(x % m for x in e):
            return None
    if m == 1:
        return 1, verts
    # vertices of the (1/m)-shrunk simplex, back in ambient coordinates
    base = verts[0]
    amb_edges = [vec_sub(v, base) for v in verts[1:]]
    small = [base]
    for e in amb_edges:
        small.append(tuple(b + x // m for b, x in zip(base, e)))
    return m, tuple(small)


def _polygon_facet_level1(P, facet):
    """Unimodular triangulation of a 2-dimensional facet at dilation 1.

    One interior lattice point: fan from it.  No interior points: dynamic
    programming over the boundary cycle, scored so that diagonals prefer
    endpoints lying on few facets of P (this is what keeps the incidence at
    shared vertices under control, e.g. for rhombic facets).
    """
    from .geometry import lattice_points as _lp

    coords, basis, anchor = facet_coordinates(facet, facet.vertices)
    sub = Polytope(coords)
    pts2 = sub.vertices
    all2 = _points_in_polygon(sub)
    interior = [p for p in all2 if sub.strictly_contains(p)]

    def back(p2):
        return tuple(
            a + sum(b[i] * c for b, c in zip(basis, p2)) for i, a in enumerate(anchor)
        )

    para = _as_parallelogram(pts2)
    if para is not None:
        v0, p1, l1, p2_, l2 = para
        cells = []
        for cell in _freudenthal_box_cells([0, 0], [l1, l2]):
            mapped = []
            for (x, y) in cell:
                pt = tuple(v0[i] + x * p1[i] + y * p2_[i] for i in range(2))
                mapped.append(back(pt))
            cells.append(mapped)
            if simplex_relative_volume_times_factorial(mapped) != 1:
                raise NoStrategy("parallelogram strategy produced a bad triangle")
        return cells

    if len(interior) == 1:
        center = interior[0]
        cycle = _boundary_cycle(sub, all2)
        tris = []
        for i in range(len(cycle)):
            tris.append((center, cycle[i], cycle[(i + 1) % len(cycle)]))
    elif len(interior) == 0:
        cycle = _boundary_cycle(sub, all2)
        valence = {}
        for p2 in cycle:
            amb = back(p2)
            valence[p2] = sum(1 for f in P.facets if amb in f.vertices)
        tris = _best_cycle_triangulation(cycle, valence)
        if tris is None:
            raise NoStrategy("empty polygon facet admits no unimodular triangulation")
    else:
        raise NoStrategy("polygon facet with several interior points")

    cells = []
    for tri in tris:
        cell = [back(p2) for p2 in tri]
        cells.append(cell)
        if simplex_relative_volume_times_factorial(cell) != 1:
            raise NoStrategy("polygon strategy produced a non-unimodular triangle")
    return cells


def _points_in_polygon(sub):
    from .geometry import lattice_points as _lp

    return _lp(sub, 1)


def _as_parallelogram(verts):
    """Detect a parallelogram whose primitive edges span the lattice.

    Returns (v0, p1, l1, p2, l2) with lattice lengths l_i along the
    primitive directions p_i, or None.  The staircase triangulation in this
    basis keeps interior vertex valences at 6.
    """
    from .linalg import primitive as _prim, vec_gcd

    if len(verts) != 4:
        return None
    vs = sorted(verts)
    v0 = vs[0]
    others = vs[1:]
    for i in range(3):
        a = vec_sub(others[i], v0)
        for j in range(3):
            if j == i:
                continue
            b = vec_sub(others[j], v0)
            rest = [others[m] for m in range(3) if m not in (i, j)][0]
            if vec_sub(rest, v0) != vec_add(a, b):
                continue
            p1, p2 = _prim(a), _prim(b)
            if abs(det_int([p1, p2])) != 1:
                continue
            l1 = vec_gcd(a)
            l2 = vec_gcd(b)
            return v0, p1, l1, p2, l2
    return None


def _boundary_cycle(sub, all_points):
    """Boundary lattice points of a polygon in cyclic order around the centroid."""
    from functools import cmp_to_key
    from .geometry import centroid as _centroid

    boundary = [p for p in all_points if not sub.strictly_contains(p)]
    cx, cy = _centroid(sub)

    def half(p):
        dx, dy = Fraction(p[0]) - cx, Fraction(p[1]) - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        ax, ay = Fraction(a[0]) - cx, Fraction(a[1]) - cy
        bx, by = Fraction(b[0]) - cx, Fraction(b[1]) - cy
        cross = ax * by - ay * bx
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(boundary, key=cmp_to_key(cmp))


def _best_cycle_triangulation(cycle, valence):
    """All triangulations of a convex cycle by DP; returns the best triangle list.

    Degenerate (collinear) triangles are rejected, which forces subdivided
    edges to be used; ties break lexicographically for determinism.
    """
    m = len(cycle)
    if m < 3:
        return None

    from functools import lru_cache

    def area2(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    INF = float("inf")

    @lru_cache(maxsize=None)
    def best(i, j):
        """Triangulate the chain i..j; returns (cost, canonical key, triangles)."""
        if j - i < 2:
            return (0, (), ())
        out = None
        for k in range(i + 1, j):
            if area2(cycle[i], cycle[k], cycle[j]) == 0:
                continue
            left = best(i, k)
            right = best(k, j)
            if left is None or right is None:
                continue
            cost = (
                left[0]
                + right[0]
                + valence.get(cycle[i], 1)
                + valence.get(cycle[k], 1)
                + valence.get(cycle[j], 1)
            )
            tris = left[2] + right[2] + ((cycle[i], cycle[k], cycle[j]),)
            key = tuple(sorted(tuple(sorted(t)) for t in tris))
            cand = (cost, key, tris)
            if out is None or cand[:2] < out[:2]:
                out = cand
        return out

    res = best(0, m - 1)
    if res is None:
        return None
    return list(res[2])


def level1_boundary(P):
    """Per-facet unimodular triangulation of the undilated boundary.

    Returns a list of (facet, cells); raises NoStrategy when a facet fits
    none of the built-in shapes.
    """
    n = P.dim
    if n == 1:
        return [(f, [[f.vertices[0]]]) for f in P.facets]
    out = []
    for f in P.facets:
        m_simplex = _facet_as_dilated_simplex(f)
        if m_simplex is not None:
            m, small = m_simplex
            if m == 1:
                out.append((f, [list(small)]))
            else:
                out.append((f, refine_anchored(small, m)))
            continue
        box = _facet_as_aligned_box(f)
        if box is not None:
            active, los, his = box
            cells = []
            for cell in _freudenthal_box_cells(
                [los[i] for i in active], [his[i] for i in active]
            ):
                cells.append([_embed(active, los, p) for p in cell])
            out.append((f, cells))
            continue
        if n == 3:
            out.append((f, _polygon_facet_level1(P, f)))
            continue
        raise NoStrategy(
            f"no triangulation strategy for facet with normal {f.normal}"
        )
    return out


def boundary_triangulation(P, k, user=None):
    """Triangulation of the boundary of kP into (n-1)-simplices.

    Strategy-built triangulations are the k-dilations of the level-1 facet
    triangulations, refined inside each dilated cell by the alcove rule, so
    incidence counts depend only on the stratum of a point.  A user-supplied
    Triangulation is passed through unchanged.
    """
    if user is not None:
        return user
    n = P.dim
    if n == 1:
        cells = [make_simplex([(k * f.vertices[0][0],)]) for f in P.facets]
        return Triangulation(dim=0, simplices=tuple(cells), strategy="segments")
    level1 = level1_boundary(P)
    simplices = []
    for facet, cells in level1:
        box = _facet_as_aligned_box(facet)
        if box is not None and k > 1:
            active, los, his = box
            for cell in _freudenthal_box_cells(
                [k * los[i] for i in active], [k * his[i] for i in active]
            ):
                fixed = [k * c for c in los]
                simplices.append(make_simplex([_embed(active, fixed, p) for p in cell]))
            continue
        for cell in cells:
            if k == 1:
                simplices.append(make_simplex(cell))
            else:
                simplices.extend(alcove_refine_dilated_simplex(list(cell), k))
    return Triangulation(dim=n - 1, simplices=tuple(simplices), strategy="facets")


def cone_over_boundary(P, boundary_tri):
    """Cone every boundary simplex to the origin (reflexive P).

    One n-simplex per boundary simplex; the incidence of the origin equals
    the number of boundary simplices.
    """
    if not all(f.offset == 1 for f in P.facets):
        raise NotReflexive("cone_over_boundary requires a reflexive polytope")
    n = P.dim
    origin = (0,) * n
    cells = []
    for s in boundary_tri.simplices:
        assert origin not in s.vertices
        cells.append(make_simplex((origin,) + s.vertices))
    return Triangulation(dim=n, simplices=tuple(cells), strategy="cone")


def polygon_unimodular_triangulation(Q):
    """Unimodular triangles covering a 2-dimensional lattice polytope,
    using all of its lattice points as vertices.

    Dilated standard simplices take the alcove cells, boxes the staircase
    (both keep interior vertex valences at 6); a single interior point is
    coned; empty polygons go through the cycle DP.
    """
    from .geometry import lattice_points as _lp

    verts = Q.vertices
    if len(verts) == 3:
        edges = [vec_sub(v, verts[0]) for v in verts[1:]]
        det = abs(det_int(edges))
        m = 1
        while m * m < det:
            m += 1
        if m * m == det and all(x % m == 0 for e in edges for x in e):
            small = [verts[0]] + [
                tuple(b + x // m for b, x in zip(verts[0], e)) for e in edges
            ]
            if m == 1:
                return [tuple(small)]
            return [tuple(c) for c in refine_anchored(small, m)]
    box = None
    los = [min(v[i] for v in verts) for i in range(2)]
    his = [max(v[i] for v in verts) for i in range(2)]
    from itertools import product as iproduct

    if set(iproduct(*zip(los, his))) == set(verts):
        return [tuple(c) for c in _freudenthal_box_cells(los, his)]
    pts = _lp(Q, 1)
    interior = [p for p in pts if Q.strictly_contains(p)]
    if len(interior) == 1:
        center = interior[0]
        cycle = _boundary_cycle(Q, pts)
        out = []
        for i in range(len(cycle)):
            tri = (center, cycle[i], cycle[(i + 1) % len(cycle)])
            if simplex_relative_volume_times_factorial(tri) != 1:
                raise NoStrategy("fan triangle not unimodular")
            out.append(tri)
        return out
    if not interior:
        cycle = _boundary_cycle(Q, pts)
        tris = _best_cycle_triangulation(cycle, {p: 1 for p in cycle})
        if tris is None:
            raise NoStrategy("polygon admits no unimodular triangulation")
        return [tuple(t) for t in tris]
    raise NoStrategy("polygon with several interior points")


def _bipyramid_exclusions(Q, tris):
    """Pick, per triangle, the vertex to place opposite the apexes.

    The axis through an interior vertex u of the polygon triangulation meets
    4 cells per incident triangle when the apex is cycle-adjacent to u, and
    6 otherwise, so interior vertices must never be excluded (valence 6
    leaves no slack against the (n+1)! = 24 bound) and boundary midpoints
    may be excluded at most valence - 2 times.
    """
    from .geometry import lattice_points as _lp

    valence = {}
    for t in tris:
        for v in t:
            valence[v] = valence.get(v, 0) + 1
    qverts = set(Q.vertices)
    boundary = {
        p for p in _lp(Q, 1) if not Q.strictly_contains(p)
    }
    caps = {}
    for v in valence:
        if v in qverts:
            caps[v] = len(tris)  # corners are unconstrained
        elif v in boundary:
            caps[v] = max(valence[v] - 2, 0)
        else:
            caps[v] = 0
    out = []
    for t in tris:
        choice = max(sorted(t), key=lambda v: caps[v])
        caps[choice] -= 1
        out.append(choice)
    return out


def full_triangulation(P, k):
    """Unimodular triangulation of kP whose incidence profile feeds the
    sufficient stability criterion.

    Double cones over polygons are triangulated as bipyramids over a
    balanced polygon triangulation (interior valences stay at 6, so the
    axis points meet exactly 24 cells); everything else cones the level-1
    boundary over the origin.  All dilated cells are alcove-refined with
    lexicographic vertex cycles, which keeps the complex face-to-face.
    """
    if not all(f.offset == 1 for f in P.facets):
        raise NotReflexive("full triangulation requires a reflexive polytope")
    n = P.dim
    origin = (0,) * n
    simplices = []
    prov = P._provenance
    if prov is not None and prov[0] == "double_cone" and prov[1][0].dim == 2:
        Q = prov[1][0]
        apex_up = (0, 0, 1)
        apex_dn = (0, 0, -1)
        tris = [tuple(t) for t in polygon_unimodular_triangulation(Q)]
        excluded = _bipyramid_exclusions(Q, tris)
        for tri, excl in zip(tris, excluded):
            rest = sorted(v for v in tri if v != excl)
            cycle2d = [rest[0], excl, rest[1]]
            lifted = [v + (0,) for v in cycle2d]
            for apex in (apex_up, apex_dn):
                # cycle (apex, p, excl, q): the apex is adjacent to p and q,
                # so dilated edges [apex, p], [apex, q] meet only 4 cells of
                # this refinement; excl sits opposite the apex
                cone = [apex] + lifted
                if k == 1:
                    simplices.append(make_simplex(cone))
                else:
                    simplices.extend(alcove_refine_cycle(cone, k))
        return Triangulation(
            dim=n, simplices=tuple(simplices), strategy="bipyramid-refined"
        )
    for facet, cells in level1_boundary(P):
        for cell in cells:
            cone = [origin] + [tuple(p) for p in cell]
            if k == 1:
                simplices.append(make_simplex(cone))
            else:
                simplices.extend(alcove_refine_dilated_simplex(cone, k))
    return Triangulation(dim=n, simplices=tuple(simplices), strategy="refined-cone")


def delaunay_triangulation(points):
    """Regular (lifted) triangulation with every input point as a vertex.

    Points are lifted to the paraboloid and the lower hull is projected;
    cocircular cells are split deterministically by the insertion order of
    the exact hull.
    """
    pts = sorted(set(tuple(p) for p in points))
    n = len(pts[0])
    if n == 1:
        cells = [
            make_simplex([pts[i], pts[i + 1]]) for i in range(len(pts) - 1)
        ]
        return Triangulation(dim=1, simplices=tuple(cells), strategy="delaunay")
    lifted = [p + (sum(x * x for x in p),) for p in pts]
    verts, facets, raw = convex_hull(lifted)
    inside = tuple(Fraction(sum(c), len(lifted)) for c in zip(*lifted))
    cells = []
    for simplex in raw:
        edges = [vec_sub(q, simplex[0]) for q in simplex[1:]]
        from .linalg import cross_normal, primitive as _prim

        normal = cross_normal(edges)
        side = sum(Fraction(c) * x for c, x in zip(normal, inside)) - dot(
            normal, simplex[0]
        )
        if side < 0:
            normal = tuple(-c for c in normal)
        if normal[-1] <= 0:
            continue
        cell = [p[:-1] for p in simplex]
        if abs(det_int([vec_sub(q, cell[0]) for q in cell[1:]])) == 0:
            continue
        cells.append(make_simplex(cell))
    return Triangulation(dim=n, simplices=tuple(cells), strategy="delaunay")


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass
class BoundaryReport:
    """Outcome of verify_regular_boundary; failures are entries, not exceptions."""

    dilation: int
    cell_count: int
    coverage_ok: bool
    total_relative_volume: Fraction
    expected_relative_volume: Fraction
    all_unimodular: bool
    nonunimodular_count: int
    face_compatible: bool
    facet_aligned: bool
    max_incidence: int
    incidence_bound: int
    offenders: tuple
    regular: bool

    def summary(self):
        verdict = "regular" if self.regular else "not regular"
        return (
            f"{verdict}: {self.cell_count} cells, max incidence "
            f"{self.max_incidence} (bound {self.incidence_bound})"
        )


def verify_regular_boundary(P, T, k):
    """Check a claimed triangulation of the boundary of kP.

    Verifies coverage (relative volumes sum to Vol(boundary) * k^{n-1}),
    per-simplex unimodularity, the pseudo-manifold ridge condition (every
    interior ridge in exactly two cells), facet alignment, and the incidence
    bound n! at every lattice point.
    """
    n = P.dim
    expected = boundary_volume(P) * k ** (n - 1)
    total = T.relative_volume()
    coverage_ok = total == expected

    nonuni = [s for s in T.simplices if not s.is_unimodular()]

    facet_aligned = True
    for s in T.simplices:
        on_some = False
        for f in P.facets:
            if all(f.value(v, k) == 0 for v in s.vertices):
                on_some = True
                break
        if not on_some:
            facet_aligned = False
            break

    # the boundary of kP is a closed surface, so every ridge of a proper
    # triangulation lies in exactly two cells; a count of one flags two
    # facets subdividing their shared face differently
    face_compatible = True
    if T.dim >= 1:
        for face, cnt in T.ridge_census().items():
            if cnt != 2:
                face_compatible = False
                break

    counts = T.incidence()
    bound = _factorial(n)
    max_inc = max(counts.values()) if counts else 0
    offenders = tuple(sorted(p for p, c in counts.items() if c > bound))

    regular = (
        coverage_ok
        and not nonuni
        and face_compatible
        and facet_aligned
        and max_inc <= bound
    )
    return BoundaryReport(
        dilation=k,
        cell_count=len(T),
        coverage_ok=coverage_ok,
        total_relative_volume=total,
        expected_relative_volume=expected,
        all_unimodular=not nonuni,
        nonunimodular_count=len(nonuni),
        face_compatible=face_compatible,
        facet_aligned=facet_aligned,
        max_incidence=max_inc,
        incidence_bound=bound,
        offenders=offenders,
        regular=regular,
    )
