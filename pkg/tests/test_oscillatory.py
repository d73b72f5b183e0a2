import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from radonsmooth import CutoffSpec, check_L2_exponent, decay_exponent, parse_poly, surface_fourier
from radonsmooth.exceptions import InputError
from radonsmooth.oscillatory import default_decay_settings

T2 = parse_poly("t^2", 1)
T3 = parse_poly("t^3", 1)
BUMP = CutoffSpec(1.0, True)


def quad_transform(S, cutoff, xi):
    """Adaptive 1-D reference for the n = 1 transform."""
    r = float(cutoff.radius)
    phase = lambda t: xi[0] * t + xi[1] * float(S.evaluate([t])[0])  # noqa: E731
    w = lambda t: cutoff(np.array([[t]]))[0]  # noqa: E731
    re = quad(lambda t: math.cos(phase(t)) * w(t), -r, r, limit=400, epsabs=1e-11)[0]
    im = quad(lambda t: -math.sin(phase(t)) * w(t), -r, r, limit=400, epsabs=1e-11)[0]
    return complex(re, im)


def test_zero_frequency_is_cutoff_integral():
    ref = quad(lambda t: BUMP(np.array([[t]]))[0], -1, 1)[0]
    assert surface_fourier(T2, BUMP, [0.0, 0.0]).real == pytest.approx(ref, rel=1e-6)
    sharp = CutoffSpec(0.5, False)
    S = parse_poly("t1^2 + t2^2", 2)
    assert surface_fourier(S, sharp, [0.0, 0.0, 0.0]).real == pytest.approx(math.pi / 4, rel=2e-3)


@pytest.mark.parametrize("xi", [(3.0, 5.0), (-7.5, 20.0), (0.0, 64.0)])
def test_matches_adaptive_quadrature(xi):
    for S in (T2, T3):
        assert surface_fourier(S, BUMP, xi) == pytest.approx(quad_transform(S, BUMP, xi), abs=1e-7)


def test_stationary_phase_leading_term():
    lam = 2.0**10
    val = abs(surface_fourier(T2, BUMP, [0.0, lam]))
    assert val == pytest.approx(math.sqrt(math.pi / lam), rel=0.01)


@settings(max_examples=25)
@given(st.floats(-50, 50), st.floats(-50, 50))
def test_conjugate_symmetry_and_bound(a, b):
    S = parse_poly("t1 t2 + t2^3", 2)
    cut = CutoffSpec(0.5, True)
    xi = np.array([a, 0.3 * a, b])
    v = surface_fourier(S, cut, xi)
    w = surface_fourier(S, cut, -xi)
    assert v == pytest.approx(w.conjugate(), abs=1e-8)
    assert abs(v) <= surface_fourier(S, cut, np.zeros(3)).real + 1e-8


def test_decay_fit_on_square():
    fit = decay_exponent(T2, BUMP, (0.0, 1.0), range(4, 12))
    assert fit.exponent_est == pytest.approx(0.5, abs=0.02)
    assert fit.to_csv().splitlines()[0] == "j,xi_norm,magnitude,used"


def test_decay_input_checks():
    with pytest.raises(InputError):
        decay_exponent(T2, BUMP, (0.0, 1.0), range(4, 8))
    with pytest.raises(InputError):
        decay_exponent(T2, BUMP, (0.0, 0.0, 1.0), range(4, 12))
    with pytest.raises(InputError):
        CutoffSpec(0.0)


@pytest.mark.parametrize("s,bounded", [(0.45, True), (0.6, False)])
def test_L2_exponent_check(s, bounded):
    assert check_L2_exponent(T2, BUMP, s).bounded is bounded


def test_default_settings_shrink_with_dimension():
    radii = [default_decay_settings(n)[0] for n in (1, 2, 3)]
    assert radii == sorted(radii, reverse=True)
