from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import catalog
from oracles import compact_edges_2d, minimal_exponents, newton_distance_oracle
from radonsmooth import MultiPoly, face_polynomial, newton_distance, newton_of, parse_poly, star_polynomial

CATALOG = catalog()

# hand-derived distances: diagonal meets the relevant edge or vertex
KNOWN_DISTANCE = {
    "t^2": Fraction(2),
    "t^3": Fraction(3),
    "t^5": Fraction(5),
    "t1^2 + t2^2": Fraction(1),
    "t1^2 - 2 t1 t2 + t2^2": Fraction(1),
    "t1^2 t2 + t1 t2^3": Fraction(5, 3),
    "t1^2 - 2 t1 t2 + t2^2 + t2^4": Fraction(1),
    "t1 t2": Fraction(1),
    "t1^3 + t2^5": Fraction(15, 8),
}


@pytest.mark.parametrize("name,S", CATALOG, ids=[c[0] for c in CATALOG])
def test_distance_matches_enumeration_oracle(name, S):
    assert newton_distance(newton_of(S)) == newton_distance_oracle(S.support())


@pytest.mark.parametrize("name", sorted(KNOWN_DISTANCE))
def test_known_distances(name):
    S = dict(CATALOG)[name]
    assert newton_distance(newton_of(S)) == KNOWN_DISTANCE[name]


@pytest.mark.parametrize("name,S", [c for c in CATALOG if c[1].dimension == 2],
                         ids=[c[0] for c in CATALOG if c[1].dimension == 2])
def test_compact_edges_match_pairwise_oracle(name, S):
    N = newton_of(S)
    edges = sorted(F.members for F in N.compact_faces if F.dim == 1)
    assert edges == compact_edges_2d(S.support())


@pytest.mark.parametrize("name,S", CATALOG, ids=[c[0] for c in CATALOG])
def test_vertices_are_certified_minimal_points(name, S):
    N = newton_of(S)
    mins = set(minimal_exponents(S.support()))
    assert set(N.vertices) <= mins
    assert all(N.certify_vertex(v) for v in N.vertices)


def test_face_polynomial_and_star():
    S = parse_poly("t1^2 t2 + t1 t2^3 + 7 t1^3 t2^3", 2)
    N = newton_of(S)
    edge = next(F for F in N.compact_faces if F.dim == 1)
    assert face_polynomial(S, edge) == parse_poly("t1^2 t2 + t1 t2^3", 2)
    assert star_polynomial(N).as_poly() == parse_poly("t1^2 t2 + t1 t2^3", 2)
    assert star_polynomial(N)((-0.5, 0.5)) == pytest.approx(0.25 * 0.5 + 0.5 * 0.125)


exps3 = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)).filter(lambda a: sum(a) >= 2)
supports3 = st.sets(exps3, min_size=1, max_size=5)


@given(supports3)
def test_distance_oracle_property_n3(supp):
    S = MultiPoly(3, {a: 1 for a in supp})
    assert newton_distance(newton_of(S)) == newton_distance_oracle(supp)


@given(supports3, st.integers(-3, 3).filter(bool), st.permutations([0, 1, 2]))
def test_distance_invariant_under_scaling_and_permutation(supp, c, perm):
    S = MultiPoly(3, {a: 1 for a in supp})
    T = MultiPoly(3, {tuple(a[i] for i in perm): c for a in supp})
    assert newton_distance(newton_of(S)) == newton_distance(newton_of(T))


@given(supports3, exps3)
def test_adding_dominated_monomial_keeps_polyhedron(supp, extra):
    base = MultiPoly(3, {a: 1 for a in supp})
    anchor = min(supp)
    shifted = tuple(x + y for x, y in zip(anchor, extra))
    more = MultiPoly(3, {**{a: 1 for a in supp}, shifted: 1})
    assert newton_distance(newton_of(base)) == newton_distance(newton_of(more))
    assert newton_of(base).vertices == newton_of(more).vertices
