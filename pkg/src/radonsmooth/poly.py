"""Exact multivariate polynomials with rational coefficients.

A polynomial in the variables ``t1..tn`` is stored as a map from exponent
tuples to nonzero :class:`fractions.Fraction` coefficients.  Values are
immutable; arithmetic returns new objects.  Floating point only enters in
:meth:`MultiPoly.evaluate`, at the boundary to the numerical modules.
"""

from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

from .exceptions import DimensionMismatchError, InputError, PolynomialSyntaxError

MAX_DEGREE = 64

MultiIndex = tuple  # tuple[int, ...]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


class MultiPoly:
    """Polynomial in ``dimension`` real variables with exact coefficients."""

    __slots__ = ("_dim", "_terms", "_hash")

    def __init__(self, dimension: int, terms: Mapping[Sequence[int], object] | None = None):
        if not isinstance(dimension, int) or dimension < 1:
            raise InputError(f"dimension must be a positive integer, got {dimension!r}")
        collected: dict[tuple[int, ...], Fraction] = {}
        for alpha, coef in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dimension:
                raise DimensionMismatchError(
                    f"exponent {alpha} has length {len(alpha)}, expected {dimension}")
            if any(a < 0 for a in alpha):
                raise InputError(f"negative exponent in {alpha}")
            c = collected.get(alpha, Fraction(0)) + _as_fraction(coef)
            collected[alpha] = c
        self._dim = dimension
        self._terms = {a: c for a, c in sorted(collected.items()) if c != 0}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, dimension: int) -> "MultiPoly":
        return cls(dimension)

    @classmethod
    def monomial(cls, alpha: Sequence[int], coef=1) -> "MultiPoly":
        return cls(len(alpha), {tuple(alpha): coef})

    # -- basic accessors ----------------------------------------------
    @property
    def dimension(self) -> int:
        return self._dim

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self._terms), default=-1)

    @property
    def min_degree(self) -> int:
        return min((sum(a) for a in self._terms), default=-1)

    def support(self) -> frozenset:
        if not self._terms:
            raise InputError("the zero polynomial has empty support")
        return frozenset(self._terms)

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def restrict(self, exponents: Iterable[Sequence[int]]) -> "MultiPoly":
        """Sub-polynomial keeping only the listed exponents."""
        keep = {tuple(a) for a in exponents}
        return MultiPoly(self._dim, {a: c for a, c in self._terms.items() if a in keep})

    # -- arithmetic ---------------------------------------------------
    def _check_same_dim(self, other: "MultiPoly"):
        if other._dim != self._dim:
            raise DimensionMismatchError(
                f"dimension mismatch: {self._dim} vs {other._dim}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly(self._dim, {(0,) * self._dim: other})
        self._check_same_dim(other)
        terms = dict(self._terms)
        for a, c in other._terms.items():
            terms[a] = terms.get(a, Fraction(0)) + c
        return MultiPoly(self._dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self._dim, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _as_fraction(other)
            return MultiPoly(self._dim, {a: c * v for a, v in self._terms.items()})
        self._check_same_dim(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                terms[k] = terms.get(k, Fraction(0)) + c * d
        return MultiPoly(self._dim, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative powers are not polynomials")
        out = MultiPoly(self._dim, {(0,) * self._dim: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._dim, tuple(self._terms.items())))
        return self._hash

    # -- calculus -----------------------------------------------------
    def partial(self, axis: int) -> "MultiPoly":
        if not 0 <= axis < self._dim:
            raise IndexError(f"axis {axis} out of range for dimension {self._dim}")
        terms = {}
        for a, c in self._terms.items():
            if a[axis] == 0:
                continue
            b = list(a)
            b[axis] -= 1
            terms[tuple(b)] = c * a[axis]
        return MultiPoly(self._dim, terms)

    def derivative(self, orders: Sequence[int]) -> "MultiPoly":
        """Mixed partial derivative with ``orders[i]`` derivatives in variable i."""
        if len(orders) != self._dim:
            raise DimensionMismatchError("derivative order vector has wrong length")
        out = self
        for axis, k in enumerate(orders):
            for _ in range(k):
                out = out.partial(axis)
        return out

    # -- evaluation ---------------------------------------------------
    def __call__(self, point: Sequence[float]) -> float:
        return eval_poly(self, point)

    def eval_exact(self, point: Sequence) -> Fraction:
        if len(point) != self._dim:
            raise DimensionMismatchError(
                f"point has {len(point)} coordinates, expected {self._dim}")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for a, c in self._terms.items():
            v = c
            for x, k in zip(pt, a):
                if k:
                    v *= x ** k
            total += v
        return total

    def evaluate(self, points) -> np.ndarray:
        """Vectorised float evaluation at an ``(m, n)`` array of points."""
        x = np.asarray(points, dtype=float)
        if x.ndim == 1:
            x = x.reshape(-1, self._dim) if self._dim == 1 else x[None, :]
        if x.shape[-1] != self._dim:
            raise DimensionMismatchError(
                f"points have {x.shape[-1]} coordinates, expected {self._dim}")
        out = np.zeros(x.shape[:-1])
        if not self._terms:
            return out
        maxpow = [max(a[i] for a in self._terms) for i in range(self._dim)]
        powers = []
        for i in range(self._dim):
            col = x[..., i]
            tab = [np.ones_like(col)]
            for _ in range(maxpow[i]):
                tab.append(tab[-1] * col)
            powers.append(tab)
        for a, c in self._terms.items():
            term = np.full(x.shape[:-1], float(c))
            for i, k in enumerate(a):
                if k:
                    term = term * powers[i][k]
            out += term
        return out

    def abs_bound_gradient(self, radius: float) -> float:
        """Upper bound for ``|grad p|`` on the cube ``[-radius, radius]^n``."""
        comps = []
        for i in range(self._dim):
            s = 0.0
            for a, c in self._terms.items():
                if a[i]:
                    s += abs(float(c)) * a[i] * radius ** (sum(a) - 1)
            comps.append(s)
        return float(np.sqrt(sum(v * v for v in comps)))

    def __repr__(self):
        return f"MultiPoly({self._dim}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# module-level operations


def eval_poly(p: MultiPoly, point: Sequence[float]) -> float:
    if len(point) != p.dimension:
        raise DimensionMismatchError(
            f"point has {len(point)} coordinates, expected {p.dimension}")
    total = 0.0
    for a, c in p.terms.items():
        v = float(c)
        for x, k in zip(point, a):
            if k:
                v *= float(x) ** k
        total += v
    return total


def partial_derivative(p: MultiPoly, axis: int) -> MultiPoly:
    return p.partial(axis)


def support(p: MultiPoly) -> frozenset:
    return p.support()


def validate_surface(p: MultiPoly, max_degree: int = MAX_DEGREE) -> MultiPoly:
    """Check that ``p`` is admissible as the graphing function S.

    S must be nonzero, vanish at the origin together with its gradient, and
    stay under the degree cap.  Nothing is re-normalised.
    """
    if p.is_zero():
        raise InputError("S must not be identically zero")
    bad = sorted(a for a in p.terms if sum(a) <= 1)
    if bad:
        raise InputError(
            "S must satisfy S(0) = 0 and grad S(0) = 0; found constant or linear "
            f"terms with exponents {bad}")
    if p.degree > max_degree:
        raise InputError(f"total degree {p.degree} exceeds the cap {max_degree}")
    return p


# ---------------------------------------------------------------------------
# text grammar

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?|\.\d+)
  | (?P<var>t\d*)
  | (?P<op>[-+*/^])
""", re.VERBOSE)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, dimension: int, max_degree: int):
        self.text = text
        self.n = dimension
        self.max_degree = max_degree
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(msg, tok[2], self.text)

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        terms: dict[tuple[int, ...], Fraction] = {}
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        while True:
            alpha, coef = self.term()
            terms[alpha] = terms.get(alpha, Fraction(0)) + sign * coef
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                sign = -1 if tok[1] == "-" else 1
                continue
            self.error(f"expected '+', '-' or end of input, got {tok[1]!r}")
        return MultiPoly(self.n, terms)

    def number(self) -> Fraction:
        tok = self.take()
        value = Fraction(tok[1])
        if self.peek()[0] == "op" and self.peek()[1] == "/":
            self.take()
            den = self.peek()
            if den[0] != "num" or "." in den[1]:
                self.error("expected integer denominator")
            self.take()
            if int(den[1]) == 0:
                self.error("zero denominator", den)
            value /= int(den[1])
        return value

    def term(self):
        coef = Fraction(1)
        alpha = [0] * self.n
        seen_any = False
        if self.peek()[0] == "num":
            coef = self.number()
            seen_any = True
            if self.peek()[0] == "op" and self.peek()[1] == "*":
                self.take()
                if self.peek()[0] != "var":
                    self.error("expected a variable after '*'")
        while self.peek()[0] == "var":
            self.factor(alpha)
            seen_any = True
            if self.peek()[0] == "op" and self.peek()[1] == "*":
                self.take()
                if self.peek()[0] != "var":
                    self.error("expected a variable after '*'")
        if not seen_any:
            self.error(f"expected a term, got {self.peek()[1]!r}")
        if sum(alpha) > self.max_degree:
            self.error(f"term degree {sum(alpha)} exceeds the cap {self.max_degree}")
        return tuple(alpha), coef

    def factor(self, alpha):
        tok = self.take()
        name = tok[1]
        if name == "t":
            if self.n != 1:
                raise DimensionMismatchError(
                    f"bare 't' at position {tok[2]} is only allowed when dimension is 1")
            idx = 1
        else:
            idx = int(name[1:])
        if idx < 1 or idx > self.n:
            raise DimensionMismatchError(
                f"variable {name} at position {tok[2]} outside t1..t{self.n}")
        k = 1
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            exp = self.peek()
            if exp[0] != "num" or "." in exp[1]:
                self.error("expected a nonnegative integer exponent")
            self.take()
            k = int(exp[1])
            if k > self.max_degree:
                self.error(f"exponent {k} exceeds the cap {self.max_degree}", exp)
        alpha[idx - 1] += k


def parse_poly(text: str, dimension: int | None = None, max_degree: int = MAX_DEGREE) -> MultiPoly:
    """Parse the polynomial text grammar.

    Terms are joined by ``+``/``-``; a term is an optional coefficient (an
    integer, ``p/q`` or a finite decimal) followed by factors ``t<i>`` or
    ``t<i>^<k>``, optionally separated by ``*``.  Whitespace is ignored.  When
    ``dimension`` is omitted it is inferred from the largest variable index.
    """
    if dimension is None:
        dimension = infer_dimension(text)
    return _Parser(text, dimension, max_degree).parse()


def infer_dimension(text: str) -> int:
    idx = [int(m) for m in re.findall(r"t(\d+)", text)]
    return max(idx, default=1)


def _format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: MultiPoly) -> str:
    """Canonical text form; ``parse_poly(format_poly(p), n) == p``."""
    if p.is_zero():
        return "0"
    names = ["t"] if p.dimension == 1 else [f"t{i + 1}" for i in range(p.dimension)]
    order = sorted(p.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-a for a in kv[0])))
    parts = []
    for idx, (alpha, c) in enumerate(order):
        factors = [names[i] if k == 1 else f"{names[i]}^{k}"
                   for i, k in enumerate(alpha) if k]
        mag = abs(c)
        if not factors:
            body = _format_coef(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coef(mag) + "*" + "*".join(factors)
        if idx == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
