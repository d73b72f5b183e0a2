"""Assemble the full analysis of one surface into a JSON-ready report."""

from __future__ import annotations

import copy
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import HypothesisViolation, InputError, RadonSmoothError
from .newton import newton_distance, newton_of, star_polynomial
from .oscillatory import CutoffSpec, decay_exponent, default_decay_settings
from .poly import MultiPoly, format_poly
from .regions import (IndexBundle, classify, fstr, plane_P, plane_Q, region_B, regions_Y,
                      regions_Y34, regions_Z, slice_s0, frac)
from .sublevel import estimate_g, estimate_h, predicted_h
from .validation import reciprocal
from .zero_order import oscillation_order

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    "seed": 0,
    "sublevel": {
        "enabled": False,
        "samples": 1_000_000,
        "k_min": 6,
        "k_max": 20,
        "radii": ["1/2", "1/4", "1/8"],
        "star_radius": "1/2",
        "tolerance": 0.05,
    },
    "decay": {
        "enabled": False,
        "directions": None,
        "j_min": 4,
        "j_max": None,
        "radius": None,
        "smooth": True,
    },
    "flags": {
        "phi_nonneg_positive_at_0": True,
        "phi_bounded_below_near_0": True,
    },
    "classify": [],
    "agreement_tolerance": 0.07,
}


def merge_config(overrides: dict | None) -> dict:
    """Deep-merge ``overrides`` into the defaults; unknown keys are rejected."""
    cfg = copy.deepcopy(DEFAULT_CONFIG)

    def merge(base, new, path):
        for k, v in new.items():
            if k not in base:
                raise InputError(f"unknown config key {path + k!r}")
            if isinstance(base[k], dict) and isinstance(v, dict):
                merge(base[k], v, path + k + ".")
            else:
                base[k] = v

    merge(cfg, overrides or {}, "")
    return cfg


def load_config(path) -> dict:
    if path is None:
        return merge_config({})
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("config must be a JSON object")
    return merge_config(data)


def exact(v: Fraction) -> dict:
    return {"value": fstr(v), "provenance": "exact"}


def fitted(value: float, ci) -> dict:
    return {"value": value, "provenance": "fitted", "ci": [ci[0], ci[1]]}


def _face_json(F) -> dict:
    return {"members": [list(m) for m in F.members], "exposing_weight": list(F.exposing_weight),
            "dim": F.dim}


@dataclass
class SmoothingReport:
    sections: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)   # (stage, exception)

    @property
    def exit_code(self) -> int:
        return self.errors[0][1].exit_code if self.errors else 0

    def to_json(self) -> str:
        return json.dumps(self.sections, indent=2) + "\n"


def _stage(report: SmoothingReport, name: str, fn):
    try:
        out = fn()
    except RadonSmoothError as exc:
        report.errors.append((name, exc))
        report.sections.setdefault("stage_errors", []).append(
            {"stage": name, "error": f"{type(exc).__name__}: {exc}"})
        return None
    return out


def build_report(S: MultiPoly, config: dict | None = None) -> SmoothingReport:
    cfg = merge_config(config)
    rep = SmoothingReport()
    sec = rep.sections
    warnings = []
    n = S.dimension
    seed = int(cfg["seed"])
    sec["input"] = {"polynomial": format_poly(S), "n": n}

    N = _stage(rep, "newton", lambda: newton_of(S))
    if N is None:
        sec["warnings"] = warnings
        return rep
    d = newton_distance(N)
    sec["newton"] = {
        "vertices": [list(v) for v in N.vertices],
        "faces": [_face_json(F) for F in N.faces],
        "distance": exact(d),
        "star_polynomial": " + ".join(
            "*".join(f"|t{i + 1 if n > 1 else ''}|" + (f"^{k}" if k > 1 else "") for i, k in enumerate(v) if k) for v in star_polynomial(N).vertex_exponents),
    }

    o = oscillation_order(S, seed=seed, newton=N)
    sec["zero_order"] = {
        "value": o.value,
        "exactness": o.exactness,
        "witnesses": [{"face": w.face, "order": w.order,
                       "point": [fstr(v) if isinstance(v, Fraction) else v for v in w.point] if w.point else None,
                       "ray": w.ray, "certificate": w.certificate} for w in o.witnesses],
    }
    if not o.is_exact:
        warnings.append("zero order is a numerical lower bound; it cannot certify sharpness hypotheses")

    ph = predicted_h(S, order=o, distance=d, newton=N)
    idx = {"predicted_h": exact(ph) if ph is not None else
           {"value": None, "provenance": "not licensed", "reason": f"o(S) = {o.value} exceeds d(S) = {d}"
            if o.value > d else "zero order is only a lower bound"}}
    tol = float(cfg["agreement_tolerance"])

    sub = cfg["sublevel"]
    ks = range(int(sub["k_min"]), int(sub["k_max"]) + 1)
    hfit = gfit = None
    if sub["enabled"]:
        sweep = _stage(rep, "sublevel_h", lambda: estimate_h(
            S, [frac(r) for r in sub["radii"]], ks=ks, samples=int(sub["samples"]), seed=seed,
            tol=float(sub["tolerance"])))
        if sweep is not None:
            hfit = sweep.fit
            idx["h_fit"] = dict(fitted(hfit.h_est, hfit.confidence_interval), log_power=hfit.d_est,
                                radius=fstr(frac(sweep.chosen_radius)), stabilized=sweep.stabilized,
                                per_radius=[None if f is None else {"h": f.h_est, "d": f.d_est}
                                            for f in sweep.fits])
            if not sweep.stabilized:
                warnings.append("sublevel fit did not stabilize across the radius sweep")
        gf = _stage(rep, "sublevel_g", lambda: estimate_g(
            S, frac(sub["star_radius"]), ks=ks, samples=int(sub["samples"]), seed=seed, newton=N))
        if gf is not None:
            gfit = gf
            idx["g_fit"] = dict(fitted(gf.h_est, gf.confidence_interval), log_power=gf.d_est)
    else:
        idx["h_fit"] = idx["g_fit"] = {"status": "skipped"}

    dec = cfg["decay"]
    decay_section = {"status": "skipped"}
    decay_last = None
    if dec["enabled"]:
        radius0, j_max0 = default_decay_settings(n)
        radius = float(dec["radius"]) if dec["radius"] is not None else radius0
        j_max = int(dec["j_max"]) if dec["j_max"] is not None else j_max0
        ladder = tuple(range(int(dec["j_min"]), j_max + 1))
        dirs = dec["directions"] or [[0.0] * n + [1.0]]
        fits = []
        for dvec in dirs:
            fit = _stage(rep, "decay", lambda dvec=dvec: decay_exponent(
                S, CutoffSpec(radius, bool(dec["smooth"])), dvec, ladder))
            if fit is None:
                continue
            fits.append({"direction": list(fit.direction), "exponent": fit.exponent_est,
                         "provenance": "fitted", "residual": fit.residual,
                         "rungs_used": [j for j, u in zip(fit.ladder, fit.used) if u],
                         "magnitudes": [[r, m] for r, m in fit.magnitudes]})
            if list(dvec)[:-1] == [0.0] * n:
                decay_last = fit.exponent_est
        decay_section = {"cutoff_radius": radius, "ladder": list(ladder), "fits": fits}

    comps = {}
    if ph is not None:
        if hfit is not None:
            comps["h_fit_vs_predicted"] = _agree(hfit.h_est, float(ph), tol)
        if gfit is not None:
            comps["g_fit_vs_predicted"] = _agree(gfit.h_est, float(ph), tol)
        if decay_last is not None:
            comps["decay_vs_predicted"] = _agree(decay_last, float(ph), tol)
    if hfit is not None and decay_last is not None:
        comps["decay_vs_h_fit"] = _agree(decay_last, hfit.h_est, tol)
    if hfit is not None and gfit is not None:
        comps["h_le_g"] = {"h": hfit.h_est, "g": gfit.h_est, "holds": hfit.h_est <= gfit.h_est + tol}
    idx["comparisons"] = comps
    sec["indices"] = idx

    regions, bundle = _regions(S, n, ph, o, cfg, warnings)
    sec["regions"] = regions

    cls = []
    for triple in cfg["classify"]:
        p, q, s = triple
        v = _stage(rep, "classify", lambda: classify((reciprocal(p), reciprocal(q), frac(s)), bundle)
                   if bundle is not None else _no_bundle())
        if v is None:
            continue
        if v.qualifier == "interval":
            warnings.append(f"verdict for (p, q, s) = ({p}, {q}, {s}) rests on interval indices")
        cls.append({"p": str(p), "q": str(q), "s": str(s), "verdict": v.status, "tags": list(v.tags),
                    "qualifier": v.qualifier,
                    "bounded_below": fstr(v.bounded_below) if v.bounded_below is not None else None,
                    "unbounded_above": fstr(v.unbounded_above) if v.unbounded_above is not None else None})
    sec["classifications"] = cls
    sec["decay"] = decay_section
    sec["warnings"] = warnings
    return rep


def _no_bundle():
    raise InputError("no exact index is available for classification")


def _agree(a: float, b: float, tol: float) -> dict:
    return {"a": a, "b": b, "difference": abs(a - b), "tolerance": tol, "agree": abs(a - b) < tol}


def _regions(S, n, ph, o, cfg, warnings):
    out = {}
    if ph is None:
        out["status"] = "skipped"
        out["reason"] = "regions need an exact index; 1/d(S) is not licensed here"
        return out, None
    flags = cfg["flags"]
    bundle = IndexBundle(n, ph, ph, None, o, bool(flags["phi_nonneg_positive_at_0"]),
                         bool(flags["phi_bounded_below_near_0"]))
    out["index_used"] = {"h": exact(ph), "g": exact(ph), "source": "1/d(S)"}
    out["B"] = region_B(ph, n).to_json()
    if ph < Fraction(1, n + 1):
        fam = regions_Y(ph, n)
        out["family"] = [r.to_json() for r in fam]
        out["J"] = slice_s0(*fam).to_json()
    else:
        out["family"] = [r.to_json() for r in regions_Y34(n)]
    try:
        out["Z_family"] = [r.to_json() for r in regions_Z(ph, o)] if o.is_exact else \
            {"status": "skipped", "reason": "zero order is only a lower bound"}
    except HypothesisViolation as exc:
        out["Z_family"] = {"status": "skipped", "reason": str(exc)}
        warnings.append(f"Z family not licensed: {exc}")
    out["P"] = plane_P(ph).to_json()
    out["Q"] = plane_Q(ph).to_json()
    m = max(o.value, 2)
    sharp = o.is_exact and ph <= Fraction(1, m)
    out["P_sharpness_licensed"] = sharp
    if not sharp:
        warnings.append("plane P sharpness hypotheses are not certified")
    return out, bundle
