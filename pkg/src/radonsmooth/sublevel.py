"""Monte Carlo sublevel-set measures and growth-exponent fits.

Near the origin the measure of ``{|f| < eps}`` behaves like
``eps^h |ln eps|^d``.  Sampling is stratified over dyadic shells around the
origin so that small sublevel sets are resolved without wasting samples:
every shell is a union of boxes and each box is one stratum.  The same
stratified point set is reused for every ``eps`` of a curve.
"""

from __future__ import annotations

import csv
import io
import itertools
import logging
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from scipy import stats
from scipy.stats import qmc

from .exceptions import InputError, InsufficientDataError
from .newton import newton_distance, newton_of, star_polynomial
from .poly import MultiPoly, validate_surface
from .zero_order import oscillation_order

logger = logging.getLogger(__name__)

DEFAULT_KS = tuple(range(6, 21))
DEFAULT_RADII = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))
DEFAULT_SAMPLES = 10**6
MIN_SAMPLES = 10**4


@dataclass(frozen=True)
class Region:
    """``ball``: open Euclidean ball; ``cube``: (-r, r)^n; ``positive_cube``: (0, r)^n."""

    kind: str
    radius: float
    dimension: int

    def __post_init__(self):
        if self.kind not in ("ball", "cube", "positive_cube"):
            raise InputError(f"unknown region kind {self.kind!r}")
        if not self.radius > 0 or self.dimension < 1:
            raise InputError("region needs a positive radius and dimension")

    @property
    def volume(self) -> float:
        r, n = float(self.radius), self.dimension
        if self.kind == "ball":
            return math.pi ** (n / 2) / math.gamma(n / 2 + 1) * r**n
        if self.kind == "cube":
            return (2 * r) ** n
        return r**n

    def indicator(self, x: np.ndarray) -> np.ndarray:
        if self.kind == "ball":
            return np.einsum("ij,ij->i", x, x) < float(self.radius) ** 2
        return np.ones(len(x), dtype=bool)

    def strata(self, levels: int) -> list:
        """Boxes ``(lo, hi)`` partitioning the bounding box into dyadic shells."""
        n = self.dimension
        r = float(self.radius)
        boxes = []
        for j in range(levels):
            s = r * 2.0**-j
            if self.kind == "positive_cube":
                pieces = [(0.0, s / 2), (s / 2, s)]
                inner = 0
            else:
                pieces = [(-s, -s / 2), (-s / 2, s / 2), (s / 2, s)]
                inner = 1
            for combo in itertools.product(range(len(pieces)), repeat=n):
                if all(c == inner for c in combo):
                    continue
                lo = np.array([pieces[c][0] for c in combo])
                hi = np.array([pieces[c][1] for c in combo])
                boxes.append((lo, hi))
        s = r * 2.0**-levels
        if self.kind == "positive_cube":
            boxes.append((np.zeros(n), np.full(n, s)))
        else:
            boxes.append((np.full(n, -s), np.full(n, s)))
        return boxes

    def describe(self) -> dict:
        return {"kind": self.kind, "radius": str(self.radius), "dimension": self.dimension}


@dataclass(frozen=True)
class SublevelCurve:
    epsilons: tuple
    measures: tuple
    standard_errors: tuple
    control_measures: tuple
    control_standard_errors: tuple
    region: Region
    sample_count: int
    rng_seed: int
    levels: int

    @property
    def ks(self) -> tuple:
        return tuple(-math.log2(e) for e in self.epsilons)

    def to_csv(self, fh=None) -> str:
        buf = io.StringIO() if fh is None else fh
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "epsilon", "measure", "stderr", "samples", "seed"])
        for k, e, m, s in zip(self.ks, self.epsilons, self.measures, self.standard_errors):
            kk = int(k) if float(k).is_integer() else k
            w.writerow([kk, repr(e), repr(m), repr(s), self.sample_count, self.rng_seed])
        return buf.getvalue() if fh is None else ""


@dataclass(frozen=True)
class GrowthFit:
    h_est: float
    d_est: int
    residual: float
    confidence_interval: tuple
    slope_stderr: float
    points_used: int
    intercept: float = 0.0
    residuals_by_d: dict = field(default_factory=dict)
    dropped: tuple = ()

    @property
    def interval(self) -> tuple:
        return self.confidence_interval

    def predict(self, eps) -> np.ndarray:
        """Fitted model ``exp(intercept) * eps^h * |ln eps|^d``."""
        e = np.asarray(eps, dtype=float)
        return np.exp(self.intercept) * e**self.h_est * np.abs(np.log(e)) ** self.d_est


@dataclass(frozen=True)
class RadiusSweep:
    radii: tuple
    fits: tuple
    stabilized: bool
    chosen_radius: object
    fit: GrowthFit
    curves: tuple = ()

    @property
    def curve(self) -> SublevelCurve:
        return self.curves[self.radii.index(self.chosen_radius)]

    @property
    def h_est(self) -> float:
        return self.fit.h_est

    @property
    def d_est(self) -> int:
        return self.fit.d_est


# ---------------------------------------------------------------------------
# sampling


def _as_callable(f) -> Callable[[np.ndarray], np.ndarray]:
    if hasattr(f, "evaluate"):
        return f.evaluate
    return f


def _default_levels(epsilons) -> int:
    kmax = max(-math.log2(e) for e in epsilons)
    return int(math.ceil(kmax / 2)) + 8


def _stratum_counts(func, region, box, n_pts, eps_sorted, seed, qmc_points: bool):
    lo, hi = box
    n = region.dimension
    if qmc_points:
        u = qmc.Sobol(n, scramble=True, seed=np.random.default_rng(seed)).random_base2(int(math.log2(n_pts)))
    else:
        u = np.random.default_rng(seed).random((n_pts, n))
    x = lo + u * (hi - lo)
    vals = np.abs(func(x))
    vals = np.where(region.indicator(x), vals, np.inf)
    vals.sort()
    return np.searchsorted(vals, eps_sorted, side="left")


def sublevel_curve(f, region: Region, epsilons: Sequence[float] | None = None, *,
                   ks: Sequence[int] | None = None, samples: int = DEFAULT_SAMPLES,
                   seed: int = 0, levels: int | None = None, workers: int = 1,
                   control: bool = True) -> SublevelCurve:
    """Estimate ``m({x in region : |f(x)| < eps})`` for each eps.

    ``samples`` is the budget per eps; it is rounded up so that every stratum
    receives a power of two of scrambled Sobol points.  A pseudo-random
    estimate on an equally sized independent point set is recorded as a
    control.  Results depend only on ``seed``, never on ``workers``.
    """
    if epsilons is None:
        epsilons = [2.0**-k for k in (ks if ks is not None else DEFAULT_KS)]
    eps = np.array([float(e) for e in epsilons])
    if np.any(eps <= 0):
        raise InputError("epsilons must be positive")
    if samples < MIN_SAMPLES:
        raise InputError(f"at least {MIN_SAMPLES} samples are required, got {samples}")
    func = _as_callable(f)
    levels = levels if levels is not None else _default_levels(eps)
    boxes = region.strata(levels)
    per = max(64, 1 << math.ceil(math.log2(samples / len(boxes))))
    vols = np.array([float(np.prod(hi - lo)) for lo, hi in boxes])
    order = np.argsort(eps)
    eps_sorted = eps[order]
    ss = np.random.SeedSequence(seed)
    qseeds = ss.spawn(len(boxes))
    cseeds = ss.spawn(len(boxes))

    def run(qmc_points, seeds):
        jobs = [(box, sd) for box, sd in zip(boxes, seeds)]
        call = lambda job: _stratum_counts(func, region, job[0], per, eps_sorted, job[1], qmc_points)  # noqa: E731
        if workers > 1:
            with ThreadPoolExecutor(workers) as ex:
                counts = list(ex.map(call, jobs))
        else:
            counts = [call(j) for j in jobs]
        p = np.array(counts, dtype=float) / per           # strata x eps
        meas = vols @ p
        var = (vols**2) @ (p * (1 - p) / per)
        out_m = np.empty_like(meas)
        out_s = np.empty_like(meas)
        out_m[order] = meas
        out_s[order] = np.sqrt(var)
        return out_m, out_s

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", category=UserWarning)
        m, s = run(True, qseeds)
        cm, cs = run(False, cseeds) if control else (np.full_like(m, np.nan), np.full_like(m, np.nan))
    return SublevelCurve(
        epsilons=tuple(float(e) for e in eps),
        measures=tuple(float(v) for v in m),
        standard_errors=tuple(float(v) for v in s),
        control_measures=tuple(float(v) for v in cm),
        control_standard_errors=tuple(float(v) for v in cs),
        region=region,
        sample_count=per * len(boxes),
        rng_seed=seed,
        levels=levels,
    )


def sublevel_measure(f, region: Region, eps: float, samples: int = DEFAULT_SAMPLES,
                     seed: int = 0, **kw) -> tuple:
    """Estimate and standard error of the measure of ``{|f| < eps}`` in ``region``."""
    c = sublevel_curve(f, region, [eps], samples=samples, seed=seed, control=False, **kw)
    return c.measures[0], c.standard_errors[0]


# ---------------------------------------------------------------------------
# fitting


def _wls(x, y, w):
    """Weighted least-squares line; returns slope, intercept, slope se, weighted rss."""
    W = w**2
    X = np.column_stack([x, np.ones_like(x)])
    A = X.T @ (X * W[:, None])
    coef = np.linalg.solve(A, X.T @ (W * y))
    resid = y - X @ coef
    rss = float(np.sum(W * resid**2))
    dof = max(len(x) - 2, 1)
    cov = np.linalg.inv(A) * (rss / dof)
    return float(coef[0]), float(coef[1]), float(math.sqrt(max(cov[0, 0], 0.0))), rss


def fit_growth(curve: SublevelCurve, n: int, *, min_points: int = 8,
               max_rel_se: float = 0.10, saturation: float = 1 / 3,
               confidence: float = 0.95, max_chi2: float = 2.0) -> GrowthFit:
    """Fit ``m(eps) ~ C eps^h |ln eps|^d`` with ``d`` restricted to ``0..n-1``.

    Leading points whose measure exceeds ``saturation`` times the region
    volume are dropped, as are points with zero measure or a relative
    standard error of ``max_rel_se`` or more.

    Each model is a weighted least-squares line in log-log coordinates.
    Leading points are trimmed one at a time (keeping ``min_points``) until
    some model has reduced chi-square at most ``max_chi2``; the smallest
    such ``d`` wins.  The chosen model is thus the one that describes the
    longest tail of the curve within its sampling noise.  When no model fits
    any tail, the ``d`` with the smallest residual on all usable points is
    returned.
    """
    eps = np.array(curve.epsilons)
    m = np.array(curve.measures)
    se = np.array(curve.standard_errors)
    order = np.argsort(-eps)               # eps decreasing == k increasing
    eps, m, se = eps[order], m[order], se[order]
    if not np.any(m > 0):
        raise InsufficientDataError("all sublevel measures are zero")
    dropped = []
    keep = np.ones(len(eps), dtype=bool)
    vol = curve.region.volume
    for i in range(len(eps)):
        if m[i] > saturation * vol:
            keep[i] = False
            dropped.append((float(eps[i]), "saturated"))
        else:
            break
    for i in range(len(eps)):
        if not keep[i]:
            continue
        if m[i] <= 0:
            keep[i] = False
            dropped.append((float(eps[i]), "zero measure"))
            logger.warning("sublevel measure is zero at eps=%g; point dropped", eps[i])
        elif se[i] / m[i] >= max_rel_se:
            keep[i] = False
            dropped.append((float(eps[i]), "relative standard error too large"))
    if keep.sum() < min_points:
        raise InsufficientDataError(
            f"only {int(keep.sum())} usable points, need {min_points}")
    e, mm, ss = eps[keep], m[keep], se[keep]
    x = np.log(e)
    y = np.log(mm)
    w = mm / np.maximum(ss, 1e-300 + 1e-12 * mm)   # 1 / sd of log(measure)
    loglog = np.log(np.abs(x))

    def model(d, start):
        slope, icpt, sse, rss = _wls(x[start:], y[start:] - d * loglog[start:], w[start:])
        return slope, icpt, sse, rss, rss / max(len(x) - start - 2, 1)

    residuals = {d: model(d, 0)[3] for d in range(n)}
    chosen = None
    for start in range(len(x) - min_points + 1):
        for d in range(n):
            fit = model(d, start)
            if fit[4] <= max_chi2:
                chosen = (d, start) + fit
                break
        if chosen is not None:
            break
    if chosen is None:
        d = min(residuals, key=residuals.get)
        chosen = (d, 0) + model(d, 0)
    d, start, slope, icpt, sse, rss, _ = chosen
    dropped.extend((float(v), "pre-asymptotic") for v in e[:start])
    used = len(x) - start
    tq = stats.t.ppf(0.5 + confidence / 2, max(used - 2, 1))
    return GrowthFit(
        h_est=slope,
        d_est=d,
        residual=rss,
        confidence_interval=(slope - tq * sse, slope + tq * sse),
        slope_stderr=sse,
        points_used=used,
        intercept=icpt,
        residuals_by_d=residuals,
        dropped=tuple(dropped),
    )


def estimate_h(S: MultiPoly, radii: Sequence = DEFAULT_RADII, *, ks=DEFAULT_KS,
               samples: int = DEFAULT_SAMPLES, seed: int = 0, tol: float = 0.05,
               region_kind: str = "ball", workers: int = 1) -> RadiusSweep:
    """Fit the sublevel exponent of ``|S|`` on shrinking balls around the origin.

    A radius is stabilized when the fit at the next smaller radius agrees
    with it to within ``tol``.  The reported fit comes from the smallest
    stabilized radius, or from the smallest usable radius if none
    stabilized.  Radii whose curve has too few usable points are kept in the
    sweep with a ``None`` fit.
    """
    validate_surface(S)
    radii = sorted(radii, key=lambda r: -float(r))
    fits, curves = [], []
    for i, r in enumerate(radii):
        region = Region(region_kind, r, S.dimension)
        curve = sublevel_curve(S, region, ks=ks, samples=samples, seed=seed + i, workers=workers)
        curves.append(curve)
        try:
            fits.append(fit_growth(curve, S.dimension))
        except InsufficientDataError as exc:
            logger.info("radius %s skipped: %s", r, exc)
            fits.append(None)
    usable = [i for i, f in enumerate(fits) if f is not None]
    if not usable:
        raise InsufficientDataError("no radius in the sweep produced a usable curve")
    stable = [i for i, j in zip(usable, usable[1:])
              if abs(fits[i].h_est - fits[j].h_est) < tol]
    idx = stable[-1] if stable else usable[-1]
    return RadiusSweep(tuple(radii), tuple(fits), bool(stable), radii[idx], fits[idx], tuple(curves))


def estimate_g(S: MultiPoly, radius=Fraction(1, 2), *, ks=DEFAULT_KS,
               samples: int = DEFAULT_SAMPLES, seed: int = 0, workers: int = 1,
               newton=None) -> GrowthFit:
    """Fit the sublevel exponent of the star polynomial on ``(0, r)^n``."""
    validate_surface(S)
    N = newton if newton is not None else newton_of(S)
    star = star_polynomial(N)
    region = Region("positive_cube", radius, S.dimension)
    curve = sublevel_curve(star, region, ks=ks, samples=samples, seed=seed, workers=workers)
    return fit_growth(curve, S.dimension)


def predicted_h(S: MultiPoly, *, order=None, distance=None, newton=None) -> Fraction | None:
    """``1/d(S)`` when ``o(S) <= d(S)`` is certified, otherwise ``None``.

    A lower-bound zero order cannot certify the inequality, so it never
    licenses a prediction.
    """
    N = newton if newton is not None else newton_of(S)
    d = distance if distance is not None else newton_distance(N)
    o = order if order is not None else oscillation_order(S, newton=N)
    if o.is_exact and o.value <= d:
        return 1 / Fraction(d)
    return None
