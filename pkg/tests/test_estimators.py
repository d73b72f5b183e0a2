from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone

from radonsmooth import (DecayEstimator, NewtonIndexTransformer, SmoothingRegionClassifier,
                         SublevelGrowthEstimator, parse_poly)
from radonsmooth.exceptions import InputError

T2 = parse_poly("t^2", 1)


def test_transformer_rows():
    X = [T2, parse_poly("t1^2 t2 + t1 t2^3", 2), parse_poly("t1^2 - 2 t1 t2 + t2^2", 2)]
    out = NewtonIndexTransformer().fit_transform(X)
    np.testing.assert_allclose(out[0], [2, 0, 0.5])
    np.testing.assert_allclose(out[1], [5 / 3, 1, 0.6])
    assert out[2][:2].tolist() == [1, 2] and np.isnan(out[2][2])


def test_params_round_trip():
    est = SublevelGrowthEstimator(samples=2**15, seed=4)
    assert est.get_params()["samples"] == 2**15
    cloned = clone(est.set_params(seed=9))
    assert cloned.seed == 9


def test_sublevel_estimator():
    est = SublevelGrowthEstimator(radii=(1,), ks=range(6, 15), samples=2**16).fit(T2)
    assert est.exponent_ == pytest.approx(0.5, abs=0.03)
    assert est.log_power_ == 0
    assert est.predict([1e-3])[0] == pytest.approx(2 * 1e-3**0.5, rel=0.1)


def test_star_estimator():
    est = SublevelGrowthEstimator(star=True, ks=range(6, 21), samples=2**16).fit(parse_poly("t1 t2", 2))
    assert est.exponent_ == pytest.approx(1.0, abs=0.1)
    assert est.log_power_ == 1


def test_decay_estimator_defaults():
    est = DecayEstimator(ladder=range(4, 12)).fit(T2)
    assert est.exponent_ == pytest.approx(0.5, abs=0.02)


def test_classifier_predicts_labels():
    clf = SmoothingRegionClassifier().fit(parse_poly("t^3", 1))
    assert clf.bundle_.h == Fraction(1, 3)
    labels = clf.predict([("1/2", "1/2", "1/8"), ("1/2", "1/2", "1/2"), ("2/3", "1/3", "9/10")])
    assert labels.tolist() == ["Bounded", "Unbounded", "Unbounded"]
    # h = 1 switches off the necessity rule and g = 1 the sharpness plane
    clf = SmoothingRegionClassifier().fit(parse_poly("t1 t2", 2))
    assert clf.predict([("1/2", "1/2", "1/2")]).tolist() == ["Unknown"]


def test_classifier_needs_licensed_h():
    with pytest.raises(InputError):
        SmoothingRegionClassifier().fit(parse_poly("t1^2 - 2 t1 t2 + t2^2", 2))
    clf = SmoothingRegionClassifier(h=Fraction(1, 2), g=(Fraction(1, 2), Fraction(2, 3)))
    clf.fit(parse_poly("t1^2 - 2 t1 t2 + t2^2", 2))
    assert clf.predict([(Fraction(1, 2), Fraction(1, 2), Fraction(1, 8))]).tolist() == ["Bounded"]
