"""Fourier transform of the cutoff surface measure on a graph, and its decay.

``rho_hat(xi) = int exp(-i (xi' . t + xi_last * S(t))) phi(t) dt`` is computed
with tensor Gauss-Legendre panels whose width never exceeds one local
wavelength of the phase.  Decay exponents are log-log slopes of the upper
envelope of ``|rho_hat|`` along a geometric frequency ladder.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.stats import qmc

from .exceptions import InputError, InsufficientDataError, QuadratureError
from .poly import MultiPoly

NODES_PER_PANEL = 10
MIN_PANELS = 8
MAX_REFINEMENTS = 3
CHUNK = 1 << 21
SHARP_RTOL = 1e-3
BRACKET = (0.9, 0.95, 1.0, 1.05, 1.1)

_GL_X, _GL_W = np.polynomial.legendre.leggauss(NODES_PER_PANEL)


@dataclass(frozen=True)
class CutoffSpec:
    """Radial cutoff supported in the ball of the given radius.

    The smooth template is ``exp(1 - 1/(1 - |t/r|^2))``, equal to 1 at the
    origin; ``smooth=False`` gives the indicator of the ball.
    """

    radius: float = 1.0
    smooth: bool = True

    def __post_init__(self):
        if not self.radius > 0:
            raise InputError("cutoff radius must be positive")

    @property
    def nonnegative(self) -> bool:
        return True

    @property
    def value_at_origin(self) -> float:
        return 1.0

    def __call__(self, t: np.ndarray) -> np.ndarray:
        t = np.atleast_2d(np.asarray(t, dtype=float))
        s = np.einsum("ij,ij->i", t, t) / float(self.radius) ** 2
        inside = s < 1.0
        out = np.zeros(len(t))
        if self.smooth:
            out[inside] = np.exp(1.0 - 1.0 / (1.0 - s[inside]))
        else:
            out[inside] = 1.0
        return out

    def support_volume(self, n: int) -> float:
        return math.pi ** (n / 2) / math.gamma(n / 2 + 1) * float(self.radius) ** n


@dataclass(frozen=True)
class DecayFit:
    direction: tuple
    exponent_est: float
    magnitudes: tuple          # (|xi|, envelope) for every ladder rung
    residual: float
    ladder: tuple              # the j of each rung, |xi| = 2^j
    used: tuple                # rungs entering the slope fit
    noise_floor: tuple        # per rung

    def to_csv(self, fh=None) -> str:
        buf = io.StringIO() if fh is None else fh
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["j", "xi_norm", "magnitude", "used"])
        for j, (r, m), u in zip(self.ladder, self.magnitudes, self.used):
            w.writerow([j, repr(r), repr(m), int(u)])
        return buf.getvalue() if fh is None else ""


@dataclass(frozen=True)
class L2Check:
    s: float
    bounded: bool
    worst_direction: tuple
    worst_slope: float
    slopes: tuple              # (direction, slope, max ratio) per direction


# ---------------------------------------------------------------------------
# quadrature


def _axis_phase_bounds(S: MultiPoly, r: float) -> np.ndarray:
    """Per-axis bound of ``|d S / d t_i|`` on ``[-r, r]^n``."""
    out = np.zeros(S.dimension)
    for a, c in S.terms.items():
        for i, k in enumerate(a):
            if k:
                out[i] += abs(float(c)) * k * r ** (sum(a) - 1)
    return out


def _panel_counts(S, r, xis: np.ndarray) -> list:
    n = S.dimension
    grad = _axis_phase_bounds(S, r)
    counts = []
    for i in range(n):
        rate = np.max(np.abs(xis[:, i]) + np.abs(xis[:, n]) * grad[i])
        wavelengths = 2 * r * rate / (2 * math.pi)
        counts.append(max(MIN_PANELS, int(math.ceil(wavelengths))))
    return counts


def _axis_rule(r: float, panels: int):
    edges = np.linspace(-r, r, panels + 1)
    half = (edges[1:] - edges[:-1]) / 2
    mid = (edges[1:] + edges[:-1]) / 2
    x = (mid[:, None] + half[:, None] * _GL_X[None, :]).ravel()
    w = (half[:, None] * _GL_W[None, :]).ravel()
    return x, w


def _tensor_sum(S, cutoff, xis, panels):
    """Integrals for all rows of ``xis`` on one tensor grid."""
    n = S.dimension
    r = float(cutoff.radius)
    rules = [_axis_rule(r, p) for p in panels]
    total = np.zeros(len(xis), dtype=complex)
    # iterate over the first axis in blocks; the rest is a full tensor grid
    rest_x = np.array(np.meshgrid(*[x for x, _ in rules[1:]], indexing="ij")).reshape(n - 1, -1).T \
        if n > 1 else np.zeros((1, 0))
    rest_w = np.prod(np.array(np.meshgrid(*[w for _, w in rules[1:]], indexing="ij")).reshape(n - 1, -1), axis=0) \
        if n > 1 else np.ones(1)
    x0, w0 = rules[0]
    block = max(1, CHUNK // len(rest_w))
    for start in range(0, len(x0), block):
        xb, wb = x0[start:start + block], w0[start:start + block]
        t = np.concatenate([np.repeat(xb, len(rest_w))[:, None], np.tile(rest_x, (len(xb), 1))], axis=1)
        wt = np.repeat(wb, len(rest_w)) * np.tile(rest_w, len(xb))
        phi = cutoff(t)
        keep = phi > 0
        if not np.any(keep):
            continue
        t, wt = t[keep], wt[keep] * phi[keep]
        sv = S.evaluate(t)
        for k, xi in enumerate(xis):
            phase = t @ xi[:n] + xi[n] * sv
            total[k] += np.sum(wt * np.exp(-1j * phase))
    return total


def surface_fourier_many(S: MultiPoly, cutoff: CutoffSpec, xis, *, rtol: float = 1e-4):
    """``(values, error_estimates)`` for every frequency vector in ``xis``.

    The error estimate compares against the same rule on half as many
    panels; the grid is doubled until it drops below ``rtol`` times the
    support volume.  Sharp cutoffs in two or more variables are held to
    ``SHARP_RTOL`` at best.
    """
    xis = np.atleast_2d(np.asarray(xis, dtype=float))
    n = S.dimension
    if xis.shape[1] != n + 1:
        raise InputError(f"frequency vectors must have length {n + 1}")
    if n > 3:
        raise InputError("tensor quadrature supports n <= 3")
    if not cutoff.smooth and n >= 2:
        # the ball's edge cuts through panels, so the error only decays algebraically
        rtol = max(rtol, SHARP_RTOL)
    tol = rtol * cutoff.support_volume(n)
    panels = _panel_counts(S, float(cutoff.radius), xis)
    coarse = _tensor_sum(S, cutoff, xis, [max(MIN_PANELS // 2, p // 2) for p in panels])
    for _ in range(MAX_REFINEMENTS + 1):
        fine = _tensor_sum(S, cutoff, xis, panels)
        err = np.abs(fine - coarse)
        if np.all(err <= tol):
            return fine, err
        coarse = fine
        panels = [2 * p for p in panels]
    raise QuadratureError(
        f"quadrature did not reach tolerance {tol:.3g}", achieved_error=float(err.max()))


def surface_fourier(S: MultiPoly, cutoff: CutoffSpec, xi: Sequence[float], *,
                    rtol: float = 1e-4, return_error: bool = False):
    vals, errs = surface_fourier_many(S, cutoff, [xi], rtol=rtol)
    return (complex(vals[0]), float(errs[0])) if return_error else complex(vals[0])


# ---------------------------------------------------------------------------
# decay fits


def _unit(direction) -> np.ndarray:
    d = np.asarray(direction, dtype=float)
    norm = np.linalg.norm(d)
    if norm == 0:
        raise InputError("direction must be nonzero")
    return d / norm


def default_decay_settings(n: int) -> tuple:
    """Cutoff radius and top ladder rung used when none are given.

    Quadrature cost grows like ``|xi|^n``, so higher dimensions use a smaller
    patch and a shorter ladder.
    """
    if n == 1:
        return 1.0, 14
    if n == 2:
        return 0.5, 11
    return 0.25, 12


def envelope(S, cutoff, direction, radius_xi: float, *, rtol=1e-4):
    """Max of ``|rho_hat|`` over the bracket ``[0.9, 1.1] * radius_xi`` along ``direction``."""
    u = _unit(direction)
    xis = np.array([f * radius_xi * u for f in BRACKET])
    vals, errs = surface_fourier_many(S, cutoff, xis, rtol=rtol)
    return float(np.max(np.abs(vals))), float(np.max(errs))


def decay_exponent(S: MultiPoly, cutoff: CutoffSpec, direction: Sequence[float],
                   ladder: Sequence[int] = tuple(range(4, 15)), *, discard: int = 2,
                   rtol: float = 1e-4) -> DecayFit:
    """Decay exponent of ``|rho_hat|`` along ``direction`` over ``|xi| = 2^j``.

    The lowest ``discard`` rungs are left out of the fit, as is any rung
    whose envelope sits below the noise floor ``max(10 * quadrature error,
    1e-12 * rho_hat(0))``.
    """
    ladder = tuple(int(j) for j in ladder)
    if len(ladder) < 8:
        raise InputError("the frequency ladder needs at least 8 rungs")
    u = _unit(direction)
    if len(u) != S.dimension + 1:
        raise InputError(f"direction must have length {S.dimension + 1}")
    zero = abs(surface_fourier(S, cutoff, np.zeros(S.dimension + 1), rtol=rtol))
    mags, errs = [], []
    for j in ladder:
        m, e = envelope(S, cutoff, u, 2.0**j, rtol=rtol)
        mags.append(m)
        errs.append(e)
    floors = [max(10 * e, 1e-12 * zero) for e in errs]
    used = [i >= discard and mags[i] > floors[i] for i in range(len(ladder))]
    idx = [i for i, ok in enumerate(used) if ok]
    if len(idx) < 2:
        raise InsufficientDataError("all magnitudes on the ladder are below the noise floor")
    x = np.array([ladder[i] * math.log(2) for i in idx])
    y = np.log([mags[i] for i in idx])
    coef, res, *_ = np.polyfit(x, y, 1, full=True)
    return DecayFit(
        direction=tuple(float(v) for v in u),
        exponent_est=float(-coef[0]),
        magnitudes=tuple((2.0**j, m) for j, m in zip(ladder, mags)),
        residual=float(res[0]) if len(res) else 0.0,
        ladder=ladder,
        used=tuple(used),
        noise_floor=tuple(floors),
    )


def sphere_directions(dim: int, count: int, seed: int = 0) -> np.ndarray:
    """Quasi-random unit vectors in ``R^dim``."""
    from scipy.stats import norm

    u = qmc.Sobol(dim, scramble=True, seed=np.random.default_rng(seed)).random(count)
    g = norm.ppf(np.clip(u, 1e-12, 1 - 1e-12))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def check_L2_exponent(S: MultiPoly, cutoff: CutoffSpec, s: float,
                      ladder: Sequence[int] = tuple(range(4, 12)), *, extra_directions: int = 4,
                      seed: int = 0, slope_tol: float = 0.02, discard: int = 2,
                      rtol: float = 1e-4) -> L2Check:
    """Check that ``|rho_hat(xi)| (1 + |xi|^2)^(s/2)`` stays bounded along sampled directions.

    A direction is flagged when the log-log slope of that ratio over the
    ladder exceeds ``slope_tol``.
    """
    dim = S.dimension + 1
    dirs = list(np.eye(dim)) + list(sphere_directions(dim, extra_directions, seed))
    zero = abs(surface_fourier(S, cutoff, np.zeros(dim), rtol=rtol))
    rows = []
    for d in dirs:
        mags, errs = [], []
        for j in ladder:
            m, e = envelope(S, cutoff, d, 2.0**j, rtol=rtol)
            mags.append(m)
            errs.append(e)
        pts = [(j, m) for k, (j, m, e) in enumerate(zip(ladder, mags, errs))
               if k >= discard and m > max(10 * e, 1e-12 * zero)]
        ratios = [m * (1 + 4.0**j) ** (s / 2) for j, m in pts]
        if len(pts) >= 2:
            slope = float(np.polyfit([j * math.log(2) for j, _ in pts], np.log(ratios), 1)[0])
        else:
            slope = -math.inf   # decays into the noise floor
        rows.append((tuple(float(v) for v in d), slope, max(ratios, default=0.0)))
    worst = max(rows, key=lambda r: r[1])
    return L2Check(s=float(s), bounded=all(r[1] <= slope_tol for r in rows),
                   worst_direction=worst[0], worst_slope=worst[1], slopes=tuple(rows))
