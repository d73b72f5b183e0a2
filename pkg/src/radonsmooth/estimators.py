"""scikit-learn style wrappers around the index computations."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin

from .exceptions import InputError
from .newton import newton_distance, newton_of
from .oscillatory import CutoffSpec, decay_exponent, default_decay_settings
from .regions import BOUNDED, UNBOUNDED, UNKNOWN, IndexBundle, Interval, classify, frac
from .sublevel import DEFAULT_KS, DEFAULT_RADII, DEFAULT_SAMPLES, estimate_g, estimate_h, predicted_h
from .validation import check_direction, check_seed, check_surface, check_triples
from .zero_order import oscillation_order


class NewtonIndexTransformer(BaseEstimator, TransformerMixin):
    """Maps polynomials to rows ``[d(S), o(S), predicted h]`` (NaN when not licensed)."""

    def __init__(self, dimension=None, seed=0):
        self.dimension = dimension
        self.seed = seed

    def fit(self, X=None, y=None):
        return self

    def transform(self, X):
        rows = []
        for S in X:
            S = check_surface(S, self.dimension)
            N = newton_of(S)
            d = newton_distance(N)
            o = oscillation_order(S, seed=self.seed, newton=N)
            ph = predicted_h(S, order=o, distance=d, newton=N)
            rows.append([float(d), float(o.value), float(ph) if ph is not None else np.nan])
        return np.array(rows, dtype=float).reshape(-1, 3)


class SublevelGrowthEstimator(BaseEstimator):
    """Fits the sublevel growth exponent of ``|S|`` (or of the star polynomial with ``star=True``)."""

    def __init__(self, radii=DEFAULT_RADII, ks=DEFAULT_KS, samples=DEFAULT_SAMPLES, seed=0,
                 star=False, star_radius=Fraction(1, 2), workers=1):
        self.radii = radii
        self.ks = ks
        self.samples = samples
        self.seed = seed
        self.star = star
        self.star_radius = star_radius
        self.workers = workers

    def fit(self, S, y=None):
        S = check_surface(S)
        seed = check_seed(self.seed)
        if self.star:
            self.sweep_ = None
            self.fit_ = estimate_g(S, self.star_radius, ks=self.ks, samples=self.samples,
                                   seed=seed, workers=self.workers)
        else:
            self.sweep_ = estimate_h(S, self.radii, ks=self.ks, samples=self.samples,
                                     seed=seed, workers=self.workers)
            self.fit_ = self.sweep_.fit
        self.exponent_ = self.fit_.h_est
        self.log_power_ = self.fit_.d_est
        self.interval_ = self.fit_.confidence_interval
        return self

    def predict(self, eps):
        return self.fit_.predict(eps)


class DecayEstimator(BaseEstimator):
    """Decay exponent of the surface-measure Fourier transform along one direction."""

    def __init__(self, direction=None, ladder=None, radius=None, smooth=True):
        self.direction = direction
        self.ladder = ladder
        self.radius = radius
        self.smooth = smooth

    def fit(self, S, y=None):
        S = check_surface(S)
        direction = self.direction
        if direction is None:
            direction = (0.0,) * S.dimension + (1.0,)
        direction = check_direction(direction, S.dimension)
        radius, j_max = default_decay_settings(S.dimension)
        radius = radius if self.radius is None else float(self.radius)
        ladder = tuple(range(4, j_max + 1)) if self.ladder is None else self.ladder
        self.fit_ = decay_exponent(S, CutoffSpec(radius, self.smooth), direction, ladder)
        self.exponent_ = self.fit_.exponent_est
        return self


class SmoothingRegionClassifier(BaseEstimator, ClassifierMixin):
    """Labels ``(1/p, 1/q, s)`` triples as Bounded, Unbounded or Unknown for a surface.

    ``h`` and ``g`` default to the exact prediction ``1/d(S)`` when it is
    licensed.  Otherwise pass them explicitly, or set ``estimate=True`` to
    use the confidence intervals of sublevel fits.
    """

    def __init__(self, h=None, g=None, eta=None, setting="local", phi_nonneg_positive_at_0=True,
                 phi_bounded_below_near_0=True, estimate=False, samples=DEFAULT_SAMPLES, seed=0):
        self.h = h
        self.g = g
        self.eta = eta
        self.setting = setting
        self.phi_nonneg_positive_at_0 = phi_nonneg_positive_at_0
        self.phi_bounded_below_near_0 = phi_bounded_below_near_0
        self.estimate = estimate
        self.samples = samples
        self.seed = seed

    def fit(self, S, y=None):
        S = check_surface(S)
        N = newton_of(S)
        self.order_ = oscillation_order(S, seed=check_seed(self.seed), newton=N)
        self.distance_ = newton_distance(N)
        ph = predicted_h(S, order=self.order_, distance=self.distance_, newton=N)
        h, g = self._coerce(self.h), self._coerce(self.g)
        if h is None and ph is not None:
            h = ph
        if g is None and ph is not None:
            g = ph
        if (h is None or g is None) and self.estimate:
            if h is None:
                lo, hi = SublevelGrowthEstimator(samples=self.samples, seed=self.seed).fit(S).interval_
                h = Interval(Fraction(lo).limit_denominator(10**6), Fraction(hi).limit_denominator(10**6))
            if g is None:
                lo, hi = SublevelGrowthEstimator(samples=self.samples, seed=self.seed, star=True).fit(S).interval_
                g = Interval(Fraction(lo).limit_denominator(10**6), Fraction(hi).limit_denominator(10**6))
        if h is None and self.setting == "local":
            raise InputError("h is not licensed by the Newton data; pass h or set estimate=True")
        self.bundle_ = IndexBundle(S.dimension, h, g, self._coerce(self.eta), self.order_,
                                   self.phi_nonneg_positive_at_0, self.phi_bounded_below_near_0,
                                   self.setting)
        self.classes_ = np.array([BOUNDED, UNBOUNDED, UNKNOWN])
        return self

    @staticmethod
    def _coerce(v):
        if v is None or isinstance(v, Interval):
            return v
        if isinstance(v, (tuple, list)) and len(v) == 2:
            return Interval(frac(v[0]), frac(v[1]))
        return frac(v)

    def predict_verdicts(self, X):
        return [classify(pt, self.bundle_) for pt in check_triples(X)]

    def predict(self, X):
        return np.array([v.status for v in self.predict_verdicts(X)], dtype=object)
