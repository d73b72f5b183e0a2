"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 hypothesis violation, 4 numerical
failure.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import sys
from fractions import Fraction

from .exceptions import InputError, RadonSmoothError
from .newton import newton_of, star_polynomial
from .oscillatory import CutoffSpec, decay_exponent, default_decay_settings
from .poly import parse_poly
from .regions import (IndexBundle, Interval, classify, fstr, frac, plane_P, plane_Q, region_B,
                      region_D, regions_Y, regions_Y34, regions_Z, section, slice_s0)
from .report import build_report, load_config
from .sublevel import Region, estimate_h, fit_growth, predicted_h, sublevel_curve
from .validation import check_direction, check_surface, reciprocal
from .zero_order import oscillation_order

log = logging.getLogger("radonsmooth")


def _write(path, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_surface(args, required: bool = True):
    if args.expr is not None and args.poly_file is not None:
        raise InputError("give either a polynomial file or --expr, not both")
    if args.expr is not None:
        text = args.expr
    elif args.poly_file is not None:
        try:
            with open(args.poly_file) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.poly_file}: {exc}") from exc
    elif required:
        raise InputError("a polynomial is required (file argument or --expr)")
    else:
        return None
    return check_surface(parse_poly(text.strip(), args.dim))


def _ratlist(text: str) -> list:
    return [frac(t) for t in text.split(",") if t.strip()]


def _floatlist(text: str) -> list:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(f"malformed list {text!r}") from exc


def _config(args) -> dict:
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg["seed"] = args.seed
    return cfg


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> int:
    S = _load_surface(args)
    cfg = _config(args)
    if args.sublevel:
        cfg["sublevel"]["enabled"] = True
    if args.decay:
        cfg["decay"]["enabled"] = True
    if args.samples is not None:
        cfg["sublevel"]["samples"] = args.samples
    for triple in args.classify or []:
        parts = triple.split(",")
        if len(parts) != 3:
            raise InputError(f"--classify expects p,q,s; got {triple!r}")
        cfg["classify"].append(parts)
    rep = build_report(S, cfg)
    _write(args.output, rep.to_json())
    for stage, exc in rep.errors:
        print(f"error in stage {stage}: {exc}", file=sys.stderr)
    return rep.exit_code


def _bundle_for(S, args, cfg) -> IndexBundle:
    n = S.dimension
    N = newton_of(S)
    o = oscillation_order(S, seed=int(cfg["seed"]), newton=N)
    ph = predicted_h(S, order=o, newton=N)

    def pick(text, default):
        if text is None:
            return default
        if ":" in text:
            lo, hi = text.split(":")
            return Interval(frac(lo), frac(hi))
        return frac(text)

    h = pick(args.h, ph)
    g = pick(args.g, ph)
    eta = pick(args.eta, None)
    if args.setting == "local" and h is None:
        raise InputError("h is not licensed by the Newton data (o(S) > d(S) or inexact); pass --h")
    flags = cfg["flags"]
    on = not args.no_phi_flags
    return IndexBundle(n, h, g, eta, o, on and bool(flags["phi_nonneg_positive_at_0"]),
                       on and bool(flags["phi_bounded_below_near_0"]), args.setting)


def cmd_classify(args) -> int:
    S = _load_surface(args)
    cfg = _config(args)
    bundle = _bundle_for(S, args, cfg)
    v = classify((reciprocal(args.p), reciprocal(args.q), frac(args.s)), bundle)
    line = v.status + " " + ("[" + ", ".join(v.tags) + "]") + " " + v.qualifier
    if v.status == "Unknown":
        if v.bounded_below is not None:
            line += f"; bounded for s < {fstr(v.bounded_below)}"
        if v.unbounded_above is not None:
            line += f"; unbounded for s > {fstr(v.unbounded_above)}"
    _write(args.output, line + "\n")
    return 0


def cmd_sublevel(args) -> int:
    S = _load_surface(args)
    cfg = _config(args)
    sub = cfg["sublevel"]
    ks = range(args.k_min if args.k_min is not None else int(sub["k_min"]),
               (args.k_max if args.k_max is not None else int(sub["k_max"])) + 1)
    samples = args.samples if args.samples is not None else int(sub["samples"])
    seed = int(cfg["seed"])
    if args.star:
        r = frac(args.radius) if args.radius else frac(sub["star_radius"])
        region = Region("positive_cube", r, S.dimension)
        curve = sublevel_curve(star_polynomial(newton_of(S)), region, ks=ks, samples=samples, seed=seed)
        fit = fit_growth(curve, S.dimension)
        summary = {"quantity": "g", "radius": fstr(r)}
    else:
        radii = _ratlist(args.radii) if args.radii else [frac(r) for r in sub["radii"]]
        sweep = estimate_h(S, radii, ks=ks, samples=samples, seed=seed, tol=float(sub["tolerance"]))
        curve, fit = sweep.curve, sweep.fit
        summary = {"quantity": "h", "radius": fstr(frac(sweep.chosen_radius)),
                   "stabilized": sweep.stabilized,
                   "per_radius": [None if f is None else {"h": f.h_est, "d": f.d_est} for f in sweep.fits]}
    summary.update({"estimate": fit.h_est, "log_power": fit.d_est, "ci": list(fit.confidence_interval),
                    "residual": fit.residual, "points_used": fit.points_used, "seed": seed,
                    "samples_per_eps": curve.sample_count,
                    "control_measures": list(curve.control_measures)})
    ph = predicted_h(S)
    summary["predicted"] = fstr(ph) if ph is not None else None
    _write(args.output, curve.to_csv())
    _write_summary(args, summary)
    return 0


def _write_summary(args, summary: dict):
    text = json.dumps(summary, indent=2) + "\n"
    if args.summary:
        _write(args.summary, text)
    else:
        sys.stderr.write(text)


def cmd_decay(args) -> int:
    S = _load_surface(args)
    cfg = _config(args)
    dec = cfg["decay"]
    n = S.dimension
    direction = check_direction(_floatlist(args.direction), n) if args.direction else (0.0,) * n + (1.0,)
    radius0, j_max0 = default_decay_settings(n)
    radius = args.radius if args.radius is not None else (
        float(dec["radius"]) if dec["radius"] is not None else radius0)
    j_min = args.j_min if args.j_min is not None else int(dec["j_min"])
    j_max = args.j_max if args.j_max is not None else (
        int(dec["j_max"]) if dec["j_max"] is not None else j_max0)
    smooth = not args.sharp and bool(dec["smooth"])
    fit = decay_exponent(S, CutoffSpec(radius, smooth), direction, range(j_min, j_max + 1))
    _write(args.output, fit.to_csv())
    _write_summary(args, {"direction": list(fit.direction), "exponent": fit.exponent_est,
                          "residual": fit.residual, "cutoff_radius": radius, "smooth": smooth,
                          "rungs_used": [j for j, u in zip(fit.ladder, fit.used) if u]})
    return 0


def cmd_region(args) -> int:
    S = _load_surface(args, required=False)
    n = args.n
    h = frac(args.h) if args.h else None
    g = frac(args.g) if args.g else None
    eta = frac(args.eta) if args.eta else None
    order = args.order
    if S is not None:
        n = S.dimension
        N = newton_of(S)
        o = oscillation_order(S, newton=N)
        ph = predicted_h(S, order=o, newton=N)
        h = h if h is not None else ph
        g = g if g is not None else ph
        if order is None:
            order = o.value if o.is_exact else None
    if n is None:
        raise InputError("--n is required without a polynomial")
    fams = {"B", "D", "Y", "Y34", "Z", "J", "P", "Q"} if args.family == "all" else {args.family}
    out = []

    def need(v, name):
        if v is None:
            raise InputError(f"region {args.family} needs {name}")
        return v

    if "B" in fams and (h is not None or args.family == "B"):
        out.append(region_B(need(h, "h"), n).to_json())
    if "D" in fams and (eta is not None or args.family == "D"):
        out.append(region_D(need(eta, "eta"), n).to_json())
    if ("Y" in fams or "J" in fams) and (h is not None or args.family in ("Y", "J")):
        need(h, "h")
        if h < Fraction(1, n + 1):
            fam = regions_Y(h, n)
            if "Y" in fams:
                out.extend(r.to_json() for r in fam)
            if "J" in fams:
                out.append(slice_s0(*fam).to_json())
        elif args.family in ("Y", "J"):
            regions_Y(h, n)   # raises the hypothesis violation
    if "Y34" in fams and (args.family == "Y34" or (h is not None and h >= Fraction(1, n + 1))):
        out.extend(r.to_json() for r in regions_Y34(n))
    if "Z" in fams and (args.family == "Z" or (g is not None and order is not None)):
        try:
            out.extend(r.to_json() for r in regions_Z(need(g, "g"), need(order, "--order")))
        except RadonSmoothError:
            if args.family == "Z":
                raise
    if "P" in fams and (g is not None or args.family == "P"):
        out.append(plane_P(need(g, "g")).to_json())
    if "Q" in fams and (h is not None or args.family == "Q"):
        out.append(plane_Q(need(h, "h")).to_json())
    doc = {"n": n, "h": fstr(h) if h is not None else None, "g": fstr(g) if g is not None else None,
           "eta": fstr(eta) if eta is not None else None, "regions": out}
    _write(args.output, json.dumps(doc, indent=2) + "\n")
    return 0


def _collect_regions(doc) -> list:
    found = []

    def walk(x):
        if isinstance(x, dict):
            if x.get("kind") in ("polygon2", "triangle3") and "vertices" in x:
                found.append(x)
                return
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(doc)
    return found


def render_svg(regions: list, select: str | None, slice_spec: str | None) -> str:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "radonsmooth"
    matplotlib.rcParams["svg.fonttype"] = "none"
    from .regions import ConvexRegion3

    fig, ax = plt.subplots(figsize=(5, 5))
    drawn = 0
    if slice_spec is None:
        polys = [r for r in regions if r["kind"] == "polygon2" and (select is None or r["name"] == select)]
        for r in polys:
            vs = [tuple(Fraction(c) for c in v) for v in r["vertices"]]
            xs = [float(v[0]) for v in vs] + [float(vs[0][0])]
            ys = [float(v[1]) for v in vs] + [float(vs[0][1])]
            ax.fill(xs, ys, alpha=0.25, label=r["name"])
            ax.plot(xs, ys, "--" if r.get("open", True) else "-", lw=1)
            for v in vs:
                ax.annotate(f"({fstr(v[0])}, {fstr(v[1])})", (float(v[0]), float(v[1])), fontsize=7)
            drawn += 1
        ax.set_xlabel("1/p")
        ax.set_ylabel("s" if polys and polys[0]["name"] in ("B", "D", "A") else "1/q")
    else:
        try:
            axis_name, value = slice_spec.split("=")
            axis = {"x": 0, "y": 1, "z": 2}[axis_name.strip()]
            c = frac(value)
        except (ValueError, KeyError) as exc:
            raise InputError(f"slice must look like z=1/6 or x=1/2, got {slice_spec!r}") from exc
        tris = [r for r in regions if r["kind"] == "triangle3" and (select is None or r["name"] == select)]
        keep = [i for i in range(3) if i != axis]
        for r in tris:
            reg = ConvexRegion3(r["name"], tuple(tuple(Fraction(c) for c in v) for v in r["vertices"]), r["tag"])
            pts = section(reg, axis, c)
            if not pts:
                continue
            xs = [float(p[0]) for p in pts] + ([float(pts[0][0])] if len(pts) > 2 else [])
            ys = [float(p[1]) for p in pts] + ([float(pts[0][1])] if len(pts) > 2 else [])
            ax.plot(xs, ys, "-o", ms=3, label=r["name"])
            for p in pts:
                ax.annotate(f"({fstr(p[0])}, {fstr(p[1])})", (float(p[0]), float(p[1])), fontsize=7)
            drawn += 1
        names = ["1/p", "1/q", "s"]
        ax.set_xlabel(names[keep[0]])
        ax.set_ylabel(names[keep[1]])
        ax.set_title(f"{names[axis]} = {fstr(c)}")
    if not drawn:
        plt.close(fig)
        raise InputError("nothing to draw: the selection or slice is empty")
    ax.legend(loc="best", fontsize=8)
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def cmd_plot(args) -> int:
    try:
        with open(args.regions_json) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {args.regions_json}: {exc}") from exc
    regions = _collect_regions(doc)
    if not regions:
        raise InputError("no regions found in the JSON document")
    _write(args.output, render_svg(regions, args.select, args.slice))
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file; flags override its values")
    common.add_argument("--seed", type=int, help="random seed (default from config, 0)")
    common.add_argument("--output", "-o", help="output path (default stdout)")
    common.add_argument("--verbose", "-v", action="store_true")

    poly = argparse.ArgumentParser(add_help=False)
    poly.add_argument("poly_file", nargs="?", help="file holding the polynomial S(t)")
    poly.add_argument("--expr", "-e", help="polynomial text, e.g. 't1^2 + t2^2'")
    poly.add_argument("--dim", type=int, help="dimension n (inferred from the variables if omitted)")

    p = argparse.ArgumentParser(prog="radonsmooth",
                                description="Newton-polyhedron indices and Sobolev smoothing regions for graph surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common, poly], help="full report as JSON")
    a.add_argument("--sublevel", action="store_true", help="run the sublevel fits")
    a.add_argument("--decay", action="store_true", help="run the Fourier decay fits")
    a.add_argument("--samples", type=int)
    a.add_argument("--classify", action="append", metavar="P,Q,S", help="exponents to classify (repeatable)")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", parents=[common, poly], help="classify one (p, q, s)")
    c.add_argument("--p", required=True)
    c.add_argument("--q", required=True)
    c.add_argument("--s", required=True)
    c.add_argument("--h", help="override h (rational, or lo:hi interval)")
    c.add_argument("--g", help="override g (rational, or lo:hi interval)")
    c.add_argument("--eta", help="global index (rational, or lo:hi interval)")
    c.add_argument("--setting", choices=("local", "global"), default="local")
    c.add_argument("--no-phi-flags", action="store_true", help="do not assume the cutoff positivity hypotheses")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("sublevel", parents=[common, poly], help="sublevel curve CSV and growth fit")
    s.add_argument("--radii", help="comma-separated radius sweep, e.g. 1/2,1/4,1/8")
    s.add_argument("--k-min", type=int)
    s.add_argument("--k-max", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--star", action="store_true", help="fit g from the star polynomial on (0, r)^n")
    s.add_argument("--radius", help="cube side for --star")
    s.add_argument("--summary", help="where to write the JSON fit summary (default stderr)")
    s.set_defaults(func=cmd_sublevel)

    d = sub.add_parser("decay", parents=[common, poly], help="Fourier decay CSV and exponent")
    d.add_argument("--direction", help="comma-separated direction in R^(n+1) (default last axis)")
    d.add_argument("--j-min", type=int)
    d.add_argument("--j-max", type=int)
    d.add_argument("--radius", type=float, help="cutoff radius")
    d.add_argument("--sharp", action="store_true", help="use the ball indicator instead of the smooth bump")
    d.add_argument("--summary", help="where to write the JSON fit summary (default stderr)")
    d.set_defaults(func=cmd_decay)

    r = sub.add_parser("region", parents=[common, poly], help="exact regions as JSON")
    r.add_argument("--family", default="all", choices=("all", "B", "D", "Y", "Y34", "Z", "J", "P", "Q"))
    r.add_argument("--n", type=int)
    r.add_argument("--h")
    r.add_argument("--g")
    r.add_argument("--eta")
    r.add_argument("--order", type=int, help="zero order o(S) for the Z family")
    r.set_defaults(func=cmd_region)

    pl = sub.add_parser("plot", parents=[common], help="SVG of a region or a slice")
    pl.add_argument("regions_json", help="output of 'region' or 'analyze'")
    pl.add_argument("--select", help="region name to draw (default all)")
    pl.add_argument("--slice", help="slice of the 3-D families, e.g. z=1/6 or x=1/2")
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except RadonSmoothError as exc:
        print(f"error ({args.command}): {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
