"""Newton polyhedra of polynomials: vertices, compact faces, Newton distance.

Everything here is exact.  A face of the (unbounded) Newton polyhedron is
compact exactly when some strictly positive covector exposes it, so each
question reduces to a small rational LP over the minimal support points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from . import lp
from .exceptions import InputError
from .poly import MultiPoly

MAX_FACE_DIMENSION = 4


@dataclass(frozen=True)
class Face:
    members: tuple            # sorted exponent tuples lying on the face
    exposing_weight: tuple    # primitive positive integer covector
    dim: int

    @property
    def level(self) -> Fraction:
        """Minimum of ``w . alpha`` over the support (attained on the face)."""
        a = self.members[0]
        return Fraction(sum(w * x for w, x in zip(self.exposing_weight, a)))

    @property
    def key(self) -> str:
        return "{" + ",".join("(" + ",".join(map(str, m)) + ")" for m in self.members) + "}"


@dataclass(frozen=True)
class NewtonPolyhedron:
    dimension: int
    support: frozenset
    minimal_points: tuple
    vertices: tuple
    vertex_weights: dict = field(compare=False, repr=False)
    faces: tuple = field(compare=False, repr=False, default=())

    @property
    def compact_faces(self) -> tuple:
        return self.faces

    def contains(self, point: Sequence) -> bool:
        """Exact membership test for ``point`` in the polyhedron."""
        return _dominated_by_hull(point, self.vertices)

    def certify_vertex(self, v) -> bool:
        """Re-check the stored certificate: ``w`` is minimised uniquely at ``v``."""
        w = self.vertex_weights[v]
        if any(x <= 0 for x in w):
            return False
        val = _dot(w, v)
        return all(_dot(w, b) > val for b in self.support if b != v)


@dataclass(frozen=True)
class StarPoly:
    """Sum over Newton vertices of ``|t_1|^{v_1} ... |t_n|^{v_n}``."""

    vertex_exponents: tuple

    @property
    def dimension(self) -> int:
        return len(self.vertex_exponents[0])

    def evaluate(self, points) -> np.ndarray:
        x = np.abs(np.asarray(points, dtype=float))
        return MultiPoly(self.dimension, {v: 1 for v in self.vertex_exponents}).evaluate(x)

    def __call__(self, point) -> float:
        return eval_star(self, point)

    def as_poly(self) -> MultiPoly:
        """The same monomial sum without absolute values (equal on the open positive orthant)."""
        return MultiPoly(self.dimension, {v: 1 for v in self.vertex_exponents})


def _dot(w, a) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(w, a)), Fraction(0))


def _primitive(w: Sequence[Fraction]) -> tuple:
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in w), 1)
    ints = [int(Fraction(x) * den) for x in w]
    g = reduce(gcd, ints)
    return tuple(v // g for v in ints)


def affine_rank(points: Iterable[Sequence]) -> int:
    pts = [list(map(Fraction, p)) for p in points]
    if len(pts) <= 1:
        return 0
    rows = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    rank = 0
    ncol = len(rows[0])
    for col in range(ncol):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def minimal_points(support: Iterable[Sequence[int]]) -> tuple:
    """Support points not componentwise >= another support point."""
    pts = sorted({tuple(p) for p in support})
    out = []
    for p in pts:
        if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts):
            out.append(p)
    return tuple(out)


def _dominated_by_hull(point, vertices) -> bool:
    # lambda >= 0, sum lambda = 1, sum lambda_v v_j <= x_j
    vs = list(vertices)
    n = len(point)
    A_ub = [[Fraction(v[j]) for v in vs] for j in range(n)]
    b_ub = [Fraction(x) for x in point]
    return lp.feasible(A_ub=A_ub, b_ub=b_ub, A_eq=[[1] * len(vs)], b_eq=[1], nvars=len(vs))


def minimal_face(points: Sequence[tuple], anchor: Iterable[tuple]):
    """Smallest positively-exposed face of the polyhedron containing ``anchor``.

    Solves: find ``w = 1 + u`` (``u >= 0``) with ``w.a`` constant on the
    anchor set and ``w.b - w.a0 >= s_b`` for the other points, maximising
    ``sum s_b`` with ``0 <= s_b <= 1``.  Any optimum lies in the relative
    interior of the anchor's normal cone, so the points with ``s_b = 0`` are
    exactly the face members.  Returns ``(members, weight)`` or ``None``.
    """
    anchor = sorted(set(anchor))
    a0 = anchor[0]
    others = [p for p in points if p not in anchor]
    n = len(a0)
    nv = n + len(others)
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for k, b in enumerate(others):
        diff = [bi - ai for bi, ai in zip(b, a0)]
        row = [-Fraction(d) for d in diff] + [Fraction(0)] * len(others)
        row[n + k] = Fraction(1)
        A_ub.append(row)
        b_ub.append(Fraction(sum(diff)))
        cap = [Fraction(0)] * nv
        cap[n + k] = Fraction(1)
        A_ub.append(cap)
        b_ub.append(Fraction(1))
    for a in anchor[1:]:
        diff = [ai - bi for ai, bi in zip(a, a0)]
        A_eq.append([Fraction(d) for d in diff] + [Fraction(0)] * len(others))
        b_eq.append(Fraction(-sum(diff)))
    c = [Fraction(0)] * n + [Fraction(-1)] * len(others)
    res = lp.linprog(c, A_ub or None, b_ub or None, A_eq or None, b_eq or None)
    if not res.success:
        return None
    w = [1 + res.x[i] for i in range(n)]
    members = list(anchor)
    for k, b in enumerate(others):
        if res.x[n + k] == 0:
            members.append(b)
    return tuple(sorted(members)), _primitive(w)


def newton_polyhedron(support: Iterable[Sequence[int]]) -> NewtonPolyhedron:
    """Build the Newton polyhedron of a support set, with vertices and compact faces."""
    supp = frozenset(tuple(int(x) for x in a) for a in support)
    if not supp:
        raise InputError("empty support")
    n = len(next(iter(supp)))
    if any(len(a) != n for a in supp):
        raise InputError("support points have inconsistent lengths")
    if n > MAX_FACE_DIMENSION:
        raise InputError(
            f"exact face enumeration supports n <= {MAX_FACE_DIMENSION}, got n = {n}")
    mins = minimal_points(supp)
    vertices = []
    weights = {}
    for p in mins:
        found = minimal_face(mins, [p])
        if found is not None and found[0] == (p,):
            vertices.append(p)
            weights[p] = found[1]
    vertices = tuple(sorted(vertices))
    faces = _enumerate_faces(mins, vertices, weights)
    return NewtonPolyhedron(n, supp, mins, vertices, weights, faces)


def _enumerate_faces(mins, vertices, weights) -> tuple:
    found: dict[tuple, tuple] = {}
    level = []
    for v in vertices:
        found[(v,)] = weights[v]
        level.append((v,))
    while level:
        nxt = []
        for members in level:
            mv = [v for v in members if v in weights]
            for v in vertices:
                if v in members:
                    continue
                res = minimal_face(mins, mv + [v])
                if res is None:
                    continue
                mem, w = res
                if mem in found:
                    if w < found[mem]:
                        found[mem] = w
                    continue
                found[mem] = w
                nxt.append(mem)
        level = nxt
    faces = [Face(m, w, affine_rank(m)) for m, w in found.items()]
    faces.sort(key=lambda f: (f.dim, f.members))
    return tuple(faces)


def compact_faces(N: NewtonPolyhedron) -> list:
    return list(N.faces)


def newton_distance(N: NewtonPolyhedron) -> Fraction:
    """Least ``t`` with ``(t, ..., t)`` in the polyhedron, by exact LP."""
    vs = list(N.vertices)
    n = N.dimension
    k = len(vs)
    # variables: lambda_1..lambda_k, t
    c = [Fraction(0)] * k + [Fraction(1)]
    A_ub = [[Fraction(v[j]) for v in vs] + [Fraction(-1)] for j in range(n)]
    b_ub = [Fraction(0)] * n
    A_eq = [[Fraction(1)] * k + [Fraction(0)]]
    res = lp.linprog(c, A_ub, b_ub, A_eq, [Fraction(1)])
    if not res.success:  # pragma: no cover - always feasible for nonempty support
        raise RuntimeError(f"Newton distance LP failed: {res.status}")
    return res.value


def face_polynomial(p: MultiPoly, F: Face) -> MultiPoly:
    missing = [m for m in F.members if p.coefficient(m) == 0]
    if missing:
        raise InputError(f"face members {missing} are not in the support of the polynomial")
    return p.restrict(F.members)


def star_polynomial(N: NewtonPolyhedron) -> StarPoly:
    return StarPoly(tuple(N.vertices))


def eval_star(star: StarPoly, point: Sequence[float]) -> float:
    total = 0.0
    for v in star.vertex_exponents:
        term = 1.0
        for x, k in zip(point, v):
            if k:
                term *= abs(float(x)) ** k
        total += term
    return total


def newton_of(p: MultiPoly) -> NewtonPolyhedron:
    return newton_polyhedron(p.support())
