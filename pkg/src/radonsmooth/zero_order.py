"""Maximal zero order of face polynomials off the coordinate hyperplanes.

The order of a zero is its jet order: the largest ``m`` such that every
partial derivative of total order ``< m`` vanishes there.  Vertex faces are
monomials and never vanish off the axes; every edge polynomial is
quasi-homogeneous and collapses to a univariate polynomial, which makes the
computation exact whenever all compact faces have dimension <= 1 (always the
case for n <= 2).  Higher-dimensional faces fall back to a numerical
multistart search that yields a lower bound only.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.stats import qmc

from . import univariate as uv
from .exceptions import InputError
from .newton import Face, face_polynomial, newton_of
from .poly import MultiPoly

EXACT = "exact"
LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class Witness:
    face: str
    order: int
    point: tuple | None = None
    ray: str | None = None
    certificate: str = "none"   # "exact-rational", "numeric" or "none"


@dataclass(frozen=True)
class ZeroOrderResult:
    value: int
    exactness: str
    witnesses: tuple = ()

    @property
    def is_exact(self) -> bool:
        return self.exactness == EXACT


# ---------------------------------------------------------------------------
# jet orders


def _multi_indices(n: int, total: int):
    for combo in itertools.combinations_with_replacement(range(n), total):
        orders = [0] * n
        for i in combo:
            orders[i] += 1
        yield tuple(orders)


def jet_order_exact(p: MultiPoly, point: Sequence[Fraction]) -> int:
    """Jet order of ``p`` at a rational point, by exact evaluation."""
    if p.is_zero():
        raise InputError("the zero polynomial has infinite order everywhere")
    for m in range(p.degree + 1):
        for orders in _multi_indices(p.dimension, m):
            if p.derivative(orders).eval_exact(point) != 0:
                return m
    return p.degree  # pragma: no cover - some derivative of order deg is a nonzero constant


def jet_order_numeric(p: MultiPoly, point: Sequence[float], rtol: float = 1e-9) -> int:
    """Jet order at a float point; a derivative counts as zero below ``rtol`` times its scale."""
    x = np.asarray(point, dtype=float)
    for m in range(p.degree + 1):
        for orders in _multi_indices(p.dimension, m):
            d = p.derivative(orders)
            if d.is_zero():
                continue
            val = abs(d.evaluate(x[None, :])[0])
            if val > rtol * _abs_scale(d, x):
                return m
    return p.degree


def _abs_scale(p: MultiPoly, x: np.ndarray) -> float:
    s = 0.0
    for a, c in p.terms.items():
        s += abs(float(c)) * float(np.prod(np.abs(x) ** np.asarray(a)))
    return s


# ---------------------------------------------------------------------------
# per-face computation


def _no_zeros_off_axes(fF: MultiPoly) -> bool:
    if len(fF.terms) == 1:
        return True
    coefs = list(fF.terms.values())
    even = all(k % 2 == 0 for a in fF.terms for k in a)
    return even and (all(c > 0 for c in coefs) or all(c < 0 for c in coefs))


def edge_reduction(fF: MultiPoly, F: Face):
    """Write an edge polynomial as ``t^alpha0 * P(t^d)``.

    ``d`` is the primitive integer direction of the edge.  Returns
    ``(coeffs, d, alpha0)`` with ``coeffs`` the coefficients of ``P`` in
    increasing degree.
    """
    members = sorted(F.members)
    a0, far = members[0], members[-1]
    diff = [b - a for a, b in zip(a0, far)]
    g = 0
    for v in diff:
        g = math.gcd(g, v)
    d = tuple(v // g for v in diff)
    coeffs = [Fraction(0)] * (g + 1)
    for a, c in fF.terms.items():
        offs = [x - y for x, y in zip(a, a0)]
        k = next(o // e for o, e in zip(offs, d) if e)
        if any(o != k * e for o, e in zip(offs, d)) or not 0 <= k <= g:
            raise InputError(f"exponent {a} does not lie on the edge {F.key}")
        coeffs[k] = c
    return coeffs, d, a0


def _bezout(d) -> list:
    """Integer vector ``x`` with ``x . d == 1`` for a primitive integer vector ``d``."""
    g, x = 0, [0] * len(d)
    for i, v in enumerate(d):
        if g == 0:
            g, x[i] = v, 1
            continue
        # s*g + t*v = g'
        old_r, r, old_s, s_, old_t, t = g, v, 1, 0, 0, 1
        while r:
            qq = old_r // r
            old_r, r = r, old_r - qq * r
            old_s, s_ = s_, old_s - qq * s_
            old_t, t = t, old_t - qq * t
        x = [old_s * xi for xi in x]
        x[i] = old_t
        g = old_r
    return [g * xi for xi in x]  # g is +-1 here


def _edge_witness(root, d):
    """A point of ``(R\\{0})^n`` with ``t^d == root``."""
    if isinstance(root, Fraction):
        return tuple(root ** xi for xi in _bezout(d)), True
    r = float(root)
    x = _bezout(d)
    # odd entry of d lets us carry the sign on one coordinate
    j = next(i for i, e in enumerate(d) if e % 2)
    pt = [abs(r) ** xi for xi in x]
    if r < 0:
        pt[j] = -pt[j]
    return tuple(pt), False


def _edge_order(fF: MultiPoly, F: Face):
    coeffs, d, a0 = edge_reduction(fF, F)
    order = uv.real_root_max_multiplicity(coeffs, exclude_zero=True)
    if order == 0:
        return 0, []
    core, _ = uv.strip_zero_root(coeffs)
    witnesses = []
    for factor, mult in uv.square_free_decomposition(core):
        if mult != order or uv.count_real_roots(factor) == 0:
            continue
        rats = uv.rational_roots(factor)
        if rats:
            root = rats[0]
        else:
            lo, hi = uv.isolate_real_roots(factor)[0]
            root = (lo + hi) / 2
            root = float(root)
        point, rational = _edge_witness(root, d)
        if rational:
            got = jet_order_exact(fF, point)
            cert = "exact-rational"
        else:
            got = jet_order_numeric(fF, point, rtol=1e-7)
            cert = "numeric"
        if got != order:  # pragma: no cover - guards the reduction itself
            raise AssertionError(f"witness jet order {got} != multiplicity {order} on {F.key}")
        mono = "*".join(f"t{i + 1}^{e}" for i, e in enumerate(d) if e)
        witnesses.append(Witness(F.key, order, tuple(point), f"{mono} = {root}", cert))
        break
    return order, witnesses


def zero_order_face(fF: MultiPoly, F: Face, *, seed: int = 0, starts: int = 64):
    """Maximal zero order of one face polynomial on ``(R\\{0})^n``.

    Returns ``(order, exactness, witnesses)``.
    """
    if fF.is_zero():
        raise InputError("zero face polynomial")
    n = fF.dimension
    if _no_zeros_off_axes(fF):
        return 0, EXACT, []
    if n == 1 or F.dim == 0:
        return 0, EXACT, []
    if F.dim == 1:
        order, wit = _edge_order(fF, F)
        return order, EXACT, wit
    order, wit = _numeric_order(fF, F, seed=seed, starts=starts)
    return order, LOWER_BOUND, wit


def oscillation_order(p: MultiPoly, *, seed: int = 0, newton=None) -> ZeroOrderResult:
    """Maximum zero order over all compact face polynomials of ``p``."""
    N = newton if newton is not None else newton_of(p)
    value = 0
    exact = True
    witnesses = []
    for F in N.faces:
        fF = face_polynomial(p, F)
        order, exactness, wit = zero_order_face(fF, F, seed=seed)
        exact &= exactness == EXACT
        witnesses.extend(wit)
        value = max(value, order)
    witnesses = [w for w in witnesses if w.order == value] if value else []
    return ZeroOrderResult(value, EXACT if exact else LOWER_BOUND, tuple(witnesses))


# ---------------------------------------------------------------------------
# n >= 3: multistart Gauss-Newton on the derivative systems


def _derivative_system(fF: MultiPoly, m: int):
    """All partial derivatives of total order < m, minus identically zero ones."""
    polys = []
    for k in range(m):
        for orders in _multi_indices(fF.dimension, k):
            d = fF.derivative(orders)
            if not d.is_zero():
                polys.append(d)
    return polys


def _refine(polys, x, iters=60, rtol=1e-9):
    n = len(x)
    grads = [[P.partial(i) for i in range(n)] for P in polys]

    def resid(y):
        return np.array([P.evaluate(y[None, :])[0] for P in polys])

    def scale(y):
        return np.array([max(_abs_scale(P, y), 1e-300) for P in polys])

    r = resid(x)
    for _ in range(iters):
        if np.all(np.abs(r) <= rtol * scale(x)):
            return x, True
        J = np.array([[g.evaluate(x[None, :])[0] for g in row] for row in grads])
        step, *_ = np.linalg.lstsq(J, -r, rcond=None)
        t = 1.0
        base = float(r @ r)
        while t > 1e-6:
            y = x + t * step
            ry = resid(y)
            if float(ry @ ry) < base:
                break
            t *= 0.5
        else:
            return x, False
        x, r = y, ry
    return x, bool(np.all(np.abs(r) <= rtol * scale(x)))


def _numeric_order(fF: MultiPoly, F: Face, *, seed: int, starts: int):
    n = fF.dimension
    sampler = qmc.Sobol(2 * n, scramble=True, seed=seed)
    u = sampler.random(starts)
    mags = 2.0 ** (2 * u[:, :n] - 1)
    signs = np.where(u[:, n:] < 0.5, -1.0, 1.0)
    best = 0
    best_pt = None
    systems = [_derivative_system(fF, m) for m in range(1, fF.degree + 1)]
    for x0 in mags * signs:
        x = x0
        m = 1
        while m <= fF.degree:
            x_new, ok = _refine(systems[m - 1], x)
            # zeros on or near a coordinate hyperplane do not count
            if not ok or np.min(np.abs(x_new)) < 1e-4 * np.max(np.abs(x0)):
                break
            x = x_new
            if m > best:
                best, best_pt = m, x.copy()
            m += 1
    wit = []
    if best:
        wit.append(Witness(F.key, best, tuple(float(v) for v in best_pt), None, "numeric"))
    return best, wit
