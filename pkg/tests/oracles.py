"""Independent reference computations used by the tests.

None of these reuse the package's LP, face enumeration, root isolation or
region slicing code; they take deliberately different (slower, brute force)
routes to the same quantities.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy as sp


# ---------------------------------------------------------------------------
# Newton distance by exhaustive basis enumeration


def _solve_exact(A, b):
    """Gauss-Jordan over the rationals; ``None`` when singular."""
    m = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for col in range(m):
        piv = next((r for r in range(col, m) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [v / pv for v in M[col]]
        for r in range(m):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[r][m] for r in range(m)]


def minimal_exponents(support):
    pts = {tuple(a) for a in support}
    return sorted(a for a in pts
                  if not any(b != a and all(x <= y for x, y in zip(b, a)) for b in pts))


def newton_distance_oracle(support) -> Fraction:
    """``min t`` with ``(t, ..., t)`` in conv(support) + positive orthant.

    Every vertex of the LP ``min t : sum l_j a_j <= t 1, sum l_j = 1, l >= 0``
    picks ``k`` support points and ``k`` tight coordinates; all such square
    systems are solved exactly and the feasible candidates compared.
    """
    pts = minimal_exponents(support)
    n = len(pts[0])
    best = None
    for k in range(1, n + 1):
        for J in itertools.combinations(pts, k):
            for I in itertools.combinations(range(n), k):
                # unknowns l_1..l_k, t
                A = [[a[i] for a in J] + [-1] for i in I] + [[1] * k + [0]]
                b = [0] * k + [1]
                sol = _solve_exact(A, b)
                if sol is None:
                    continue
                lam, t = sol[:k], sol[k]
                if any(v < 0 for v in lam):
                    continue
                point = [sum(l * a[i] for l, a in zip(lam, J)) for i in range(n)]
                if all(p <= t for p in point) and (best is None or t < best):
                    best = t
    return best


# ---------------------------------------------------------------------------
# zero order for n <= 2 via sympy


def _sym_poly(terms: dict, syms):
    expr = 0
    for alpha, c in terms.items():
        mono = sp.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, alpha):
            mono *= s**k
        expr += mono
    return expr


def compact_edges_2d(support):
    """Compact one-dimensional faces of the Newton polyhedron, by brute force over pairs."""
    pts = sorted({tuple(a) for a in support})
    edges = set()
    for a, b in itertools.combinations(pts, 2):
        d1, d2 = b[0] - a[0], b[1] - a[1]
        if d1 * d2 >= 0:
            continue
        w = (abs(d2), abs(d1))
        lvl = w[0] * a[0] + w[1] * a[1]
        vals = [w[0] * p[0] + w[1] * p[1] for p in pts]
        if min(vals) == lvl:
            edges.add(tuple(p for p, v in zip(pts, vals) if v == lvl))
    return sorted(edges)


def jet_order_sympy(expr, syms, point) -> int:
    """Largest m with every partial of order < m vanishing at ``point``."""
    subs = dict(zip(syms, point))
    m = 0
    layer = [expr]
    while True:
        if any(sp.simplify(e.subs(subs)) != 0 for e in layer):
            return m
        m += 1
        layer = list({sp.expand(sp.diff(e, s)) for e in layer for s in syms})
        if m > 64:
            raise RuntimeError("jet order did not terminate")


def zero_order_oracle(terms: dict, n: int) -> int:
    """o(f) for n <= 2 from exact real roots of face polynomials on t2 = +-1.

    For n = 2 the face polynomials of edges are weighted homogeneous, so every
    zero in the open quadrants is carried by the weighted scaling to one with
    t2 = +-1, and the scaling preserves jet order.
    """
    if n == 1:
        return 0
    if n != 2:
        raise ValueError("the zero-order oracle covers n <= 2 only")
    t1, t2 = sp.symbols("t1 t2")
    best = 0
    for edge in compact_edges_2d(terms):
        f = _sym_poly({a: terms[a] for a in edge}, (t1, t2))
        for sigma in (1, -1):
            g = sp.Poly(f.subs(t2, sigma), t1)
            for r in set(sp.real_roots(g)):
                if r == 0:
                    continue
                best = max(best, jet_order_sympy(f, (t1, t2), (r, sigma)))
    return best


# ---------------------------------------------------------------------------
# slicing a polytope by a horizontal plane


def _jarvis(points):
    """Convex hull by gift wrapping, counter-clockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts
    hull = []
    start = pts[0]
    p = start
    while True:
        hull.append(p)
        q = pts[0] if pts[0] != p else pts[1]
        for r in pts:
            if r == p:
                continue
            cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
            far = (r[0] - p[0]) ** 2 + (r[1] - p[1]) ** 2 > (q[0] - p[0]) ** 2 + (q[1] - p[1]) ** 2
            if cross < 0 or (cross == 0 and far):
                q = r
        p = q
        if p == start:
            break
    return hull


def slice_below_surface(triangles, z0, floor=Fraction(-2)):
    """Horizontal section at ``z0`` of the convex solid under a union of triangles.

    The solid is the hull of the triangle vertices and their drops to
    ``floor``; its section is the hull of every vertex-pair segment's crossing
    with the plane.
    """
    verts = []
    for tri in triangles:
        for v in tri:
            v = tuple(Fraction(c) for c in v)
            verts.append(v)
            verts.append((v[0], v[1], Fraction(floor)))
    pts = []
    for a, b in itertools.combinations(set(verts), 2):
        if a[2] == z0:
            pts.append((a[0], a[1]))
        if b[2] == z0:
            pts.append((b[0], b[1]))
        if (a[2] - z0) * (b[2] - z0) < 0:
            lam = (z0 - a[2]) / (b[2] - a[2])
            pts.append((a[0] + lam * (b[0] - a[0]), a[1] + lam * (b[1] - a[1])))
    return _jarvis(pts)


def j_closed_form(h, n):
    """Trapezoid vertices written out from the closed-form corner formulas."""
    h = Fraction(h)
    a = h * (n + 3) / (2 * (h + 1))
    b = h * (n + 1) / (2 * (h + 1))
    return [(Fraction(0), Fraction(0)), (a, b), (1 - b, 1 - a), (Fraction(1), Fraction(1))]


# ---------------------------------------------------------------------------
# analytic sublevel measures


def sublevel_t_power(l: int, r: float, eps: float) -> float:
    """m{|t|^l < eps} on (-r, r)."""
    return 2 * min(r, eps ** (1 / l))


def sublevel_product_unit_square(eps: float) -> float:
    """m{t1 t2 < eps} on (0, 1)^2 for eps <= 1."""
    import math

    return eps * (1 + math.log(1 / eps))
