"""Univariate rational polynomials: gcd, square-free decomposition, Sturm counts.

Polynomials are lists of :class:`~fractions.Fraction` coefficients in
increasing degree order, ``[c0, c1, ..., cd]``, with no trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence


def trim(p: Sequence) -> list:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p) -> int:
    return len(p) - 1


def derivative(p) -> list:
    return trim([k * p[k] for k in range(1, len(p))])


def monic(p) -> list:
    lead = p[-1]
    return [c / lead for c in p]


def divmod_poly(a, b):
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            r[shift + i] -= f * c
        r = trim(r)
    return trim(q), r


def gcd_poly(a, b) -> list:
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a) if a else a


def evaluate(p, x):
    acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def square_free_decomposition(f) -> list:
    """Yun's algorithm: ``f = lc * prod a_i^i`` with ``a_i`` square-free, coprime.

    Returns ``[(a_i, i), ...]`` for the nonconstant factors only.
    """
    f = trim(f)
    if len(f) <= 1:
        return []
    fp = derivative(f)
    a0 = gcd_poly(f, fp)
    b, _ = divmod_poly(f, a0)
    c, _ = divmod_poly(fp, a0)
    d = trim([x - y for x, y in _zip_pad(c, derivative(b))])
    out = []
    i = 1
    while len(b) > 1:
        a = gcd_poly(b, d)
        b, _ = divmod_poly(b, a)
        c, _ = divmod_poly(d, a)
        d = trim([x - y for x, y in _zip_pad(c, derivative(b))])
        if len(a) > 1:
            out.append((monic(a), i))
        i += 1
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def sturm_sequence(p) -> list:
    p = trim(p)
    seq = [p, derivative(p)]
    while seq[-1] and len(seq[-1]) > 1:
        _, r = divmod_poly(seq[-2], seq[-1])
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at_infinity(seq, positive: bool):
    out = []
    for s in seq:
        lead = s[-1]
        if not positive and degree(s) % 2 == 1:
            lead = -lead
        out.append(lead)
    return out


def count_real_roots(p, lo=None, hi=None) -> int:
    """Number of distinct real roots in ``(lo, hi]`` (``None`` means infinite)."""
    seq = sturm_sequence(p)
    vlo = _signs_at_infinity(seq, False) if lo is None else [evaluate(s, Fraction(lo)) for s in seq]
    vhi = _signs_at_infinity(seq, True) if hi is None else [evaluate(s, Fraction(hi)) for s in seq]
    return _sign_changes(vlo) - _sign_changes(vhi)


def cauchy_bound(p) -> Fraction:
    p = trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def strip_zero_root(p):
    """Return ``(q, k)`` with ``p = u^k q`` and ``q(0) != 0``."""
    p = trim(p)
    k = 0
    while p and p[0] == 0:
        p = p[1:]
        k += 1
    return p, k


def real_root_max_multiplicity(coeffs: Sequence, exclude_zero: bool = False) -> int:
    """Largest multiplicity of a real root of the polynomial (0 if none).

    ``coeffs`` lists coefficients in increasing degree.  With
    ``exclude_zero`` the root ``u = 0`` is ignored.
    """
    p = trim(coeffs)
    if not p:
        raise ValueError("zero polynomial has no well-defined roots")
    q, k = strip_zero_root(p)
    best = 0 if exclude_zero else k
    for factor, mult in square_free_decomposition(q):
        if mult > best and count_real_roots(factor) > 0:
            best = mult
    return best


def isolate_real_roots(p, max_width=Fraction(1, 2**40)) -> list:
    """Disjoint intervals ``(lo, hi]`` each containing exactly one root of square-free ``p``."""
    p = trim(p)
    B = cauchy_bound(p)
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = count_real_roots(p, lo, hi)
        if n == 0:
            continue
        if n == 1 and hi - lo <= max_width:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if n == 1 and evaluate(p, mid) == 0:
            out.append((mid, mid))
            continue
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)


def rational_roots(p) -> list:
    """Rational roots via the rational root theorem (small integer coefficients only)."""
    p = trim(p)
    q, k = strip_zero_root(p)
    roots = [Fraction(0)] if k else []
    if len(q) <= 1:
        return roots
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in q]
    a0, an = abs(ints[0]), abs(ints[-1])
    if max(a0, an) > 10**9:
        return roots
    for num in _divisors(a0):
        for d in _divisors(an):
            for s in (1, -1):
                r = Fraction(s * num, d)
                if r not in roots and evaluate(q, r) == 0:
                    roots.append(r)
    return sorted(roots)


def _divisors(n: int) -> list:
    out = set()
    for i in range(1, isqrt(n) + 1):
        if n % i == 0:
            out.add(i)
            out.add(n // i)
    return sorted(out)
