from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from oracles import j_closed_form, slice_below_surface
from radonsmooth import (IndexBundle, Interval, Point3, ZeroOrderResult, classify, classify_Lp_Lps,
                         eta_combine, plane_P, plane_Q, region_B, regions_Y, regions_Y34, regions_Z,
                         slice_s0)
from radonsmooth.exceptions import HypothesisViolation, InputError

EXACT0 = ZeroOrderResult(0, "exact")
unit = st.fractions(min_value=0, max_value=1, max_denominator=64).filter(lambda v: 0 < v < 1)
heights = st.fractions(min_value=-1, max_value=1, max_denominator=64)
positive = st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=50)


def small_h(n):
    return st.fractions(min_value=Fraction(1, 60), max_value=Fraction(1, n + 1), max_denominator=60) \
        .filter(lambda h: h < Fraction(1, n + 1))


def bundle(n, h, g=None, o=EXACT0, flags=True):
    return IndexBundle(n, h, g if g is not None else h, None, o, flags, flags)


# ---------------------------------------------------------------------------
# exact regions


def test_region_B_examples():
    assert region_B(Fraction(1, 6), 2).vertices == ((0, 0), (Fraction(1, 4), Fraction(1, 6)),
                                                    (Fraction(3, 4), Fraction(1, 6)), (1, 0))
    # h at or above 1/(n+1) caps the tent at its apex
    assert region_B(Fraction(1, 2), 1).vertices == ((0, 0), (Fraction(1, 2), Fraction(1, 2)), (1, 0))
    assert region_B(Fraction(1), 2).vertices == ((0, 0), (Fraction(1, 2), Fraction(1, 3)), (1, 0))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), small_h(n))))
def test_region_B_corner_formula(nh):
    n, h = nh
    vs = region_B(h, n).vertices
    assert vs[1] == ((n + 1) * h / 2, h)
    assert vs[2] == (1 - (n + 1) * h / 2, h)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), small_h(n))))
def test_J_matches_closed_form_and_slicing_oracle(nh):
    n, h = nh
    fam = regions_Y(h, n)
    J = slice_s0(*fam)
    assert list(J.vertices) == j_closed_form(h, n)
    oracle = slice_below_surface([[v.as_tuple() for v in r.vertices] for r in fam], Fraction(0))
    assert set(oracle) == set(J.vertices)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), small_h(n))))
def test_family_mirror_symmetry(nh):
    n, h = nh
    Y, Y1, Y2 = regions_Y(h, n)
    assert Y.mirror().vertex_set() == Y.vertex_set()
    assert Y1.mirror().vertex_set() == Y2.vertex_set()
    Y3, Y4 = regions_Y34(n)
    assert Y3.mirror().vertex_set() == Y4.vertex_set()


def test_Z_family_hypothesis():
    Z, Z1, Z2 = regions_Z(Fraction(1, 3), ZeroOrderResult(2, "exact"))
    assert Z1.mirror().vertex_set() == Z2.vertex_set()
    with pytest.raises(HypothesisViolation):
        regions_Z(Fraction(1, 2), 2)
    with pytest.raises(HypothesisViolation):
        regions_Y(Fraction(1, 3), 2)


@given(positive, unit)
def test_plane_P_identities(g, x):
    P = plane_P(g)
    assert P.contains((1, 0, -1))
    assert P.contains((x, x, g))
    assert P.same_plane(plane_Q(g))


@given(positive, positive)
def test_P_and_Q_differ_when_indices_differ(g, h):
    assume(g != h)
    assert not plane_P(g).same_plane(plane_Q(h))


# ---------------------------------------------------------------------------
# classifier


def test_diagonal_example():
    v = classify((Fraction(1, 2), Fraction(1, 2), Fraction(1, 8)), bundle(2, Fraction(1, 6)))
    assert v.status == "Bounded"
    v = classify((Fraction(1, 2), Fraction(1, 2), Fraction(1, 4)), bundle(2, Fraction(1, 6)))
    assert v.status == "Unbounded"


def test_Lp_Lps_boundary_and_trivial_range():
    b = bundle(1, Fraction(1, 2))
    assert classify_Lp_Lps(Fraction(1, 4), Fraction(1, 4), b).status == "Unknown"   # on the edge of B
    assert classify_Lp_Lps(Fraction(1, 4), Fraction(1, 5), b).status == "Bounded"
    assert classify_Lp_Lps(Fraction(1, 4), 0, b).tags == ("trivial-Lp",)


def test_rejects_endpoint_exponents():
    with pytest.raises(InputError):
        classify((0, Fraction(1, 2), 0), bundle(1, Fraction(1, 2)))
    with pytest.raises(InputError):
        IndexBundle(2, Fraction(1, 2), Fraction(1, 3))


triples = st.tuples(unit, unit, heights)
diag_triples = st.tuples(unit, heights).map(lambda t: (t[0], t[0], t[1]))
any_triple = st.one_of(triples, diag_triples)
bundles = st.sampled_from([
    bundle(1, Fraction(1, 2)),
    bundle(1, Fraction(1, 3)),
    bundle(2, Fraction(3, 5), o=ZeroOrderResult(1, "exact")),
    bundle(2, Fraction(1, 6), Fraction(1, 4)),
    bundle(3, Fraction(1, 2)),
    bundle(2, Fraction(1, 6), Fraction(1, 4), flags=False),
])


@given(any_triple, bundles)
def test_mirror_invariance_of_verdicts(t, b):
    v = classify(t, b)
    w = classify(Point3(*t).mirror(), b)
    assert v.status == w.status


@given(any_triple, st.integers(1, 3), st.data())
def test_monotone_in_h(t, n, data):
    h1 = data.draw(st.fractions(min_value=Fraction(1, 20), max_value=Fraction(1, 2), max_denominator=20))
    h2 = data.draw(st.fractions(min_value=h1, max_value=Fraction(1, 2), max_denominator=20))
    g = Fraction(1, 2)
    low, high = classify(t, bundle(n, h1, g)), classify(t, bundle(n, h2, g))
    if low.status == "Bounded":
        assert high.status == "Bounded"
    if high.status == "Unbounded":
        assert low.status == "Unbounded"


@given(any_triple, bundles)
def test_bounded_points_lie_below_P(t, b):
    v = classify(t, b)
    sharpness_applies = b.phi_bounded_below_near_0 and b.g <= Fraction(1, max(b.oS.value, 2))
    if v.status == "Bounded" and sharpness_applies:
        x, y, z = t
        assert (b.g + 1) * (x - y) + z < b.g


@given(any_triple)
def test_interval_verdicts_agree_with_every_corner(t):
    lo, hi = Fraction(1, 7), Fraction(1, 5)
    v = classify(t, IndexBundle(2, Interval(lo, hi), Interval(lo, hi), None, EXACT0, True, True))
    if v.status != "Unknown":
        for h in (lo, hi):
            for g in (lo, hi):
                if h <= g:
                    assert classify(t, bundle(2, h, g)).status == v.status


def test_eta_combine():
    assert eta_combine([Fraction(1, 2), Fraction(1, 3)]) == Fraction(1, 3)
    assert eta_combine([Interval(Fraction(1, 4), Fraction(1, 2)), Fraction(1, 3)]) == \
        Interval(Fraction(1, 4), Fraction(1, 3))
    with pytest.raises(InputError):
        eta_combine([])


def test_global_setting_uses_eta():
    b = IndexBundle(2, None, None, Fraction(1, 6), None, False, False, "global")
    assert classify((Fraction(1, 2), Fraction(1, 2), Fraction(1, 8)), b).tags == ("D-region",)
    assert classify((Fraction(1, 2), Fraction(1, 2), Fraction(1, 4)), b).status == "Unbounded"
