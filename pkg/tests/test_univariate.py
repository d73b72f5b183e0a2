from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from radonsmooth.univariate import (count_real_roots, isolate_real_roots, rational_roots,
                                    real_root_max_multiplicity, square_free_decomposition)

x = sp.Symbol("x")


def to_coeffs(expr) -> list:
    return [Fraction(int(c.p), int(c.q)) for c in reversed(sp.Poly(expr, x).all_coeffs())]


def sympy_max_multiplicity(expr, exclude_zero=False) -> int:
    mults = [m for r, m in sp.roots(sp.Poly(expr, x)).items()
             if r.is_real and not (exclude_zero and r == 0)]
    return max(mults, default=0)


roots_strategy = st.lists(
    st.tuples(st.fractions(min_value=-3, max_value=3, max_denominator=4), st.integers(1, 4)),
    min_size=0, max_size=3, unique_by=lambda t: t[0])


@given(roots_strategy, st.integers(0, 2), st.booleans())
def test_max_multiplicity_matches_sympy(roots, quad_power, exclude_zero):
    expr = sp.Integer(3)
    for r, m in roots:
        expr *= (x - sp.Rational(r.numerator, r.denominator)) ** m
    expr *= (x**2 + x + 1) ** quad_power  # no real roots
    expr = sp.expand(expr)
    assert real_root_max_multiplicity(to_coeffs(expr), exclude_zero) == \
        sympy_max_multiplicity(expr, exclude_zero)


@given(roots_strategy)
def test_sturm_count_matches_distinct_real_roots(roots):
    expr = sp.Integer(1)
    for r, m in roots:
        expr *= (x - sp.Rational(r.numerator, r.denominator)) ** m
    expr = sp.expand(expr * (x**2 + 2))
    assert count_real_roots(to_coeffs(expr)) == len(roots)


def test_square_free_decomposition():
    expr = sp.expand((x - 1) * (x + 2) ** 3 * (x**2 - 2) ** 2)
    parts = {m: f for f, m in square_free_decomposition(to_coeffs(expr))}
    assert set(parts) == {1, 2, 3}
    assert parts[3] == [2, 1]
    assert parts[2] == [-2, 0, 1]


def test_irrational_roots_are_isolated():
    intervals = isolate_real_roots(to_coeffs(x**2 - 2))
    assert len(intervals) == 2
    lo, hi = intervals[1]
    assert lo < sp.sqrt(2) <= hi


def test_rational_roots():
    assert rational_roots(to_coeffs(sp.expand((2 * x - 1) * x * (x**2 + 1)))) == [0, Fraction(1, 2)]


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        real_root_max_multiplicity([0, 0])
