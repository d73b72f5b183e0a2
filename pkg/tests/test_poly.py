from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from radonsmooth import MultiPoly, format_poly, parse_poly, validate_surface
from radonsmooth.exceptions import DimensionMismatchError, InputError, PolynomialSyntaxError

exponents2 = st.tuples(st.integers(0, 4), st.integers(0, 4))
coefs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys2 = st.dictionaries(exponents2, coefs, max_size=5).map(lambda d: MultiPoly(2, d))


def test_parse_collects_terms():
    p = parse_poly("t1^2 - 2 t1 t2 + t2^2", 2)
    assert p.terms == {(2, 0): 1, (1, 1): -2, (0, 2): 1}
    assert p.degree == 2
    assert parse_poly("t^2 + t^2", 1).terms == {(2,): 2}


def test_parse_rational_coefficients_and_implicit_product():
    p = parse_poly("1/2 t^3 - t^2", 1)
    assert p.coefficient((3,)) == Fraction(1, 2)
    assert p.coefficient((2,)) == -1


@pytest.mark.parametrize("text", ["t1^^2", "t1 + ", "t1^-1", "x^2"])
def test_parse_rejects_malformed(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_poly(text, 2)


def test_parse_rejects_variable_out_of_range():
    with pytest.raises(DimensionMismatchError):
        parse_poly("t3^2", 2)


@pytest.mark.parametrize("text", ["0", "t1 + t2^2", "1 + t1^2"])
def test_validate_surface_rejects_low_order_terms(text):
    with pytest.raises(InputError):
        validate_surface(parse_poly(text, 2))


@given(polys2)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p), 2) == p


@given(polys2, polys2, st.tuples(coefs, coefs))
def test_ring_operations_agree_with_evaluation(p, q, pt):
    assert (p * q).eval_exact(pt) == p.eval_exact(pt) * q.eval_exact(pt)
    assert (p - q).eval_exact(pt) == p.eval_exact(pt) - q.eval_exact(pt)


@given(polys2)
def test_float_evaluation_matches_exact(p):
    pts = [(Fraction(1, 3), Fraction(-2, 5)), (Fraction(3, 2), Fraction(1, 7))]
    vals = p.evaluate(np.array([[float(a), float(b)] for a, b in pts]))
    exact = [float(p.eval_exact(q)) for q in pts]
    np.testing.assert_allclose(vals, exact, rtol=1e-12, atol=1e-12)


def test_partial_derivatives():
    p = parse_poly("t1^3 t2 + 4 t2^2", 2)
    assert p.partial(0) == parse_poly("3 t1^2 t2", 2)
    assert p.derivative((1, 1)) == parse_poly("3 t1^2", 2)
