"""Dense two-phase simplex over the rationals, Bland's rule.

Solves ``min c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0`` exactly.
Problem sizes in this package are tiny (tens of rows), so a dense
:class:`~fractions.Fraction` tableau is fast enough and never rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple | None = None
    value: Fraction | None = None

    @property
    def success(self) -> bool:
        return self.status == OPTIMAL


def _pivot(T, row, col):
    prow = T[row]
    p = prow[col]
    if p != 1:
        inv = 1 / p
        prow[:] = [v * inv for v in prow]
    for i, r in enumerate(T):
        if i == row:
            continue
        f = r[col]
        if f:
            r[:] = [a - f * b for a, b in zip(r, prow)]


def _run(T, basis, allowed):
    """Minimise with the objective stored in the last tableau row."""
    m = len(T) - 1
    obj = T[-1]
    ncols = len(obj) - 1
    while True:
        enter = next((j for j in range(ncols) if allowed[j] and obj[j] < 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, best[1], enter)
        basis[best[1]] = enter
        obj = T[-1]


def linprog(c: Sequence, A_ub=None, b_ub=None, A_eq=None, b_eq=None) -> LPResult:
    """Exact LP with nonnegative variables.

    Returns an :class:`LPResult`; ``x`` and ``value`` are set only when the
    problem has a finite optimum.
    """
    c = [Fraction(v) for v in c]
    nv = len(c)
    rows = []   # (coeffs, rhs, kind) kind in {"ub", "eq"}
    for a, b in zip(A_ub or [], b_ub or []):
        rows.append(([Fraction(v) for v in a], Fraction(b), "ub"))
    for a, b in zip(A_eq or [], b_eq or []):
        rows.append(([Fraction(v) for v in a], Fraction(b), "eq"))
    for a, _, _ in rows:
        if len(a) != nv:
            raise ValueError("constraint row length does not match the objective")
    m = len(rows)
    n_slack = sum(1 for r in rows if r[2] == "ub")
    ncols = nv + n_slack + m  # structural, slack, artificial
    T = []
    basis = []
    k = 0
    for i, (a, b, kind) in enumerate(rows):
        row = a + [Fraction(0)] * (n_slack + m) + [b]
        if kind == "ub":
            row[nv + k] = Fraction(1)
            k += 1
        if b < 0:
            row = [-v for v in row]
        row[nv + n_slack + i] = Fraction(1)
        T.append(row)
        basis.append(nv + n_slack + i)

    # phase 1: minimise the sum of artificials
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(nv + n_slack, ncols):
        obj[j] = Fraction(1)
    for row in T:
        obj = [o - r for o, r in zip(obj, row)]
    T.append(obj)
    allowed = [True] * ncols
    _run(T, basis, allowed)
    if T[-1][-1] != 0:
        return LPResult(INFEASIBLE)

    # drive remaining artificials out of the basis
    art0 = nv + n_slack
    for i in range(m):
        if basis[i] >= art0:
            col = next((j for j in range(art0) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, i, col)
                basis[i] = col
    for j in range(art0, ncols):
        allowed[j] = False

    # phase 2
    obj = [Fraction(0)] * (ncols + 1)
    obj[:nv] = c
    for i in range(m):
        cb = obj[basis[i]]
        if cb:
            obj = [o - cb * r for o, r in zip(obj, T[i])]
    T[-1] = obj
    status = _run(T, basis, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * nv
    for i in range(m):
        if basis[i] < nv:
            x[basis[i]] = T[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, tuple(x), value)


def feasible(A_ub=None, b_ub=None, A_eq=None, b_eq=None, nvars=None) -> bool:
    if nvars is None:
        nvars = len((A_ub or A_eq)[0])
    return linprog([0] * nvars, A_ub, b_ub, A_eq, b_eq).success


def in_convex_hull(point: Sequence, vertices: Sequence[Sequence]) -> bool:
    """Exact test of ``point`` in the convex hull of ``vertices``."""
    vertices = list(vertices)
    dim = len(point)
    A_eq = [[Fraction(v[j]) for v in vertices] for j in range(dim)]
    b_eq = [Fraction(x) for x in point]
    A_eq.append([1] * len(vertices))
    b_eq.append(1)
    return feasible(A_eq=A_eq, b_eq=b_eq, nvars=len(vertices))
