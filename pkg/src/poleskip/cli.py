"""Command-line driver: catalogs, scans, skip location, slope probes,
cutoff experiments and holography checks, with JSON/CSV emission.

Subcommands: catalog, scan, locate, slope, cutoff, holo.  Complex numbers
are accepted as ``a+bi`` (or ``a+bj``) literals and serialized as
``{"re": ..., "im": ...}``.  Exit codes: 0 ok, 2 config error, 3 numeric
non-convergence, 4 degenerate fit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .errors import (
    FitDegenerate,
    IndeterminateRatio,
    NoConvergence,
    PoleHit,
    PoleSkipError,
)
from .holography import MetricModel, effective_potential
from .locator import find_skip, slope_probe, winding_number
from .models import (
    CoshSq,
    Coulomb,
    OnePole,
    SinhSq,
    coulomb_jost_plus,
    coulomb_s_nu_kappa,
    one_pole_s,
    pole_skip_catalog,
    pt1_jost_plus,
    pt1_jost_solutions,
    pt1_s,
    pt2_jost_plus,
    pt2_jost_solutions,
    pt2_s,
)
from .solver import CutoffSpec, NumericalPotential, ir_cutoff_jost, jost_functions, uv_cutoff_jost

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NOCONV = 3
EXIT_DEGENERATE = 4


class ConfigError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' / 'a-bi' / 'a' / 'bi' literals ('j' also accepted)."""
    s = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    if s.endswith("j") and s[:-1] in ("", "+", "-"):
        s = s[:-1] + "1j"
    try:
        return complex(s)
    except ValueError as exc:
        raise ConfigError(f"bad complex literal {text!r}") from exc


def c_json(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def parse_params(items) -> dict[str, complex]:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise ConfigError(f"--param expects key=value, got {item!r}")
        key, _, val = item.partition("=")
        out[key.strip()] = parse_complex(val)
    return out


def parse_point(text: str) -> dict[str, complex]:
    out = {}
    for piece in text.split(","):
        if "=" not in piece:
            raise ConfigError(f"expected key=value pairs, got {text!r}")
        key, _, val = piece.partition("=")
        out[key.strip()] = parse_complex(val)
    return out


_MODELS = ("onepole", "coulomb", "pt1", "pt2")


def make_model(name: str, params: dict[str, complex]):
    if name == "onepole":
        return OnePole(c=params.get("c", 0.0))
    if name == "coulomb":
        return Coulomb(e2=params.get("e2", 1.0), nu=params.get("nu", 0.5))
    if name == "pt1":
        return SinhSq(nu=params.get("nu", 1.0))
    if name == "pt2":
        return CoshSq(kappa=params.get("kappa", 1.0))
    raise ConfigError(f"unknown model {name!r}; choose from {_MODELS}")


def s_function(name: str):
    """(s(param, k2), axes) in the model's natural skip plane."""
    if name == "onepole":
        return (lambda c, k: one_pole_s(k, c)), ("c", "k")
    if name == "coulomb":
        return (lambda nu, kap: coulomb_s_nu_kappa(nu, kap, k=1.0)), ("nu", "kappa")
    if name == "pt1":
        return (lambda nu, k: pt1_s(k, nu)), ("nu", "k")
    if name == "pt2":
        return (lambda kap, k: pt2_s(k, kap)), ("kappa", "k")
    raise ConfigError(f"unknown model {name!r}")


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload) -> int:
    _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def cmd_catalog(args) -> int:
    model = make_model(args.model, parse_params(args.param))
    points = pole_skip_catalog(model, args.n_max)
    payload = {
        "model": args.model,
        "points": [
            {
                "n": p.n,
                "axes": list(p.axes),
                "param": c_json(p.param),
                "k": c_json(p.k),
                "class": p.pole_kind or "",
                "redundant": p.redundant,
                "series_invisible": p.series_invisible,
                "pole_family": p.pole_family,
                "zero_family": p.zero_family,
            }
            for p in points
        ],
    }
    return _emit_json(args, payload)


def _grid_nodes(spec: str):
    parts = spec.split(":")
    if len(parts) != 4:
        raise ConfigError("--grid expects axis:min:max:count")
    axis, lo, hi, count = parts
    lo, hi, count = parse_complex(lo), parse_complex(hi), int(count)
    if not 1 <= count <= 10**6:
        raise ConfigError("grid count must be within [1, 1e6]")
    if count == 1:
        return axis, [lo]
    step = (hi - lo) / (count - 1)
    return axis, [lo + step * j for j in range(count)]


def _scan_row(name: str, model, axis: str, val: complex, numeric: bool):
    params = {}
    s = float("nan") + 0j
    fplus = fminus = None
    status = "ok"
    try:
        if numeric:
            if axis != "k":
                raise ConfigError("--numeric scans support only the k axis")
            pot = NumericalPotential.from_model(model)
            pair = jost_functions(pot, val, recheck=False)
            fplus, fminus = pair.f_plus, pair.f_minus
            s = pair.s
        elif name == "onepole":
            c = val if axis == "c" else model.c
            k = val if axis == "k" else 1.0
            s = one_pole_s(k, c)
        elif name == "coulomb":
            nu = val if axis == "nu" else model.nu
            e2 = val if axis == "e2" else model.e2
            k = val if axis == "k" else 1.0
            s = coulomb_s_nu_kappa(nu, e2 / (2 * k), k)
            fplus = coulomb_jost_plus(k, nu, e2)
            fminus = s * fplus
        elif name == "pt1":
            nu = val if axis == "nu" else model.nu
            k = val if axis == "k" else 1.0
            s = pt1_s(k, nu)
            fplus = pt1_jost_plus(k, nu)
            fminus = s * fplus
        elif name == "pt2":
            kap = val if axis == "kappa" else model.kappa
            k = val if axis == "k" else 1.0
            s = pt2_s(k, kap)
            fplus = pt2_jost_plus(k, kap)
            fminus = s * fplus
        else:
            raise ConfigError(f"unknown model {name!r}")
    except IndeterminateRatio:
        status = "indeterminate"
    except PoleHit:
        status = "pole"
    except ConfigError:
        raise
    except PoleSkipError as exc:
        status = f"error:{type(exc).__name__}"
    return {
        "axis_re": val.real, "axis_im": val.imag,
        "s_re": s.real if status == "ok" else "",
        "s_im": s.imag if status == "ok" else "",
        "abs_f_plus": abs(fplus) if (fplus is not None and status == "ok") else "",
        "abs_f_minus": abs(fminus) if (fminus is not None and status == "ok") else "",
        "status": status,
    }


def cmd_scan(args) -> int:
    model = make_model(args.model, parse_params(args.param))
    axis, nodes = _grid_nodes(args.grid)
    rows = [_scan_row(args.model, model, axis, v, args.numeric) for v in nodes]
    fields = ["axis_re", "axis_im", "s_re", "s_im", "abs_f_plus", "abs_f_minus", "status"]
    if args.format == "json":
        return _emit_json(args, {"model": args.model, "axis": axis, "rows": rows})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields)
    writer.writeheader()
    writer.writerows(rows)
    _emit(args, buf.getvalue())
    return EXIT_OK


def cmd_locate(args) -> int:
    sfunc, axes = s_function(args.model)
    seed = parse_point(args.seed)
    try:
        p0 = seed[axes[0]]
        k0 = seed[axes[1]]
    except KeyError as exc:
        raise ConfigError(f"--seed must set {axes[0]} and {axes[1]}") from exc
    point = find_skip(sfunc, (p0, k0), tol=args.tol, axes=axes)
    return _emit_json(args, {
        "model": args.model,
        "axes": list(point.axes),
        "param": c_json(point.param),
        "k": c_json(point.k),
        "source": point.source,
    })


_SLOPE_ORDER = {
    # displacement order (d1, d2) used for the Mobius fit, matching the
    # closed-form slope expressions for each model
    "onepole": ("k", "c"),
    "coulomb": ("nu", "kappa"),
    "pt1": ("k", "nu"),
    "pt2": ("k", "kappa"),
}


def cmd_slope(args) -> int:
    sfunc, axes = s_function(args.model)
    at = parse_point(args.at)
    try:
        p0 = at[axes[0]]
        k0 = at[axes[1]]
    except KeyError as exc:
        raise ConfigError(f"--at must set {axes[0]} and {axes[1]}") from exc
    order = _SLOPE_ORDER[args.model]

    def s_local(d1, d2):
        # map displacement order onto (param, k2) order
        dp = d1 if order[0] == axes[0] else d2
        dk = d2 if order[1] == axes[1] else d1
        return sfunc(p0 + dp, k0 + dk)

    fit = slope_probe(s_local, radius=args.radius, n_angles=args.angles)
    ratios = fit.ratios
    return _emit_json(args, {
        "model": args.model,
        "at": {"param": c_json(p0), "k": c_json(k0)},
        "displacements": list(order),
        "coefficients": {k: c_json(v) for k, v in
                         {"a": fit.a, "b": fit.b, "c": fit.c, "d": fit.d}.items()},
        "ratios": {k: (c_json(v) if v is not None else None) for k, v in ratios.items()},
        "residual": fit.residual,
        "radius": fit.radius,
    })


def cmd_cutoff(args) -> int:
    params = parse_params(args.param)
    if args.nu is not None:
        params["nu"] = parse_complex(args.nu)
    model = make_model(args.model, params)
    if args.model not in ("pt1", "pt2"):
        raise ConfigError("cutoff experiments support pt1 and pt2")
    pot = NumericalPotential.from_model(model)
    probe = parse_point(args.probe)["k"]
    if args.ir is not None:
        cutoff = CutoffSpec(ir_radius=args.ir)

        def fplus_r(k):
            return ir_cutoff_jost(pot, cutoff, k).f_plus

        count = winding_number(fplus_r, probe, args.radius, samples=args.samples)
        return _emit_json(args, {
            "model": args.model, "mode": "ir", "radius_R": args.ir,
            "probe": c_json(probe), "contour_radius": args.radius,
            "pole_count": count,
            "note": "poles of the truncated S inside the contour (zeros of F+^r)",
        })
    if args.uv is not None:
        a = args.uv
        if args.model == "pt1":
            fplus_at, _ = pt1_jost_solutions(probe, model.nu)
            analytic = pt1_jost_plus(probe, abs(complex(model.nu).real))
        else:
            fplus_at, _ = pt2_jost_solutions(probe, model.kappa)
            analytic = pt2_jost_plus(probe, model.kappa)
        vals = {}
        for aa in (a, a / 2.0):
            fr = uv_cutoff_jost(pot, CutoffSpec(uv_radius=aa), probe, f_plus_at=fplus_at)
            vals[aa] = fr
        return _emit_json(args, {
            "model": args.model, "mode": "uv",
            "probe": c_json(probe),
            "f_plus_r": {str(aa): c_json(v) for aa, v in vals.items()},
            "halving_ratio": c_json(vals[a] / vals[a / 2.0]),
            "analytic_f_plus_abs_nu": c_json(analytic),
        })
    raise ConfigError("cutoff needs --ir R or --uv a")


_METRICS = {
    "btz-like": (lambda r: r * r - 1.0, 1.0 / (2.0 * math.pi)),
    "rindler": (None, None),  # built from T below
}


def cmd_holo(args) -> int:
    omega = parse_complex(args.omega)
    T = args.T
    if args.metric == "btz-like":
        F = lambda r: r * r - 1.0
        T_required = 1.0 / (2.0 * math.pi)
        if abs(T - T_required) > 1e-9:
            raise ConfigError(f"btz-like metric fixes T = 1/(2 pi) = {T_required:.9f}")
    elif args.metric == "rindler":
        F = lambda r, T=T: 4.0 * math.pi * T * (r - 1.0)
    else:
        raise ConfigError(f"unknown metric {args.metric!r}")
    metric = MetricModel(F=F, T=T, mass2=args.mass2)
    problem = effective_potential(metric, omega)
    coeff = problem.leading_coefficient()
    expected = problem.nu**2 - 0.25
    rel = abs(coeff - expected) / max(abs(expected), 1e-12)
    return _emit_json(args, {
        "metric": args.metric, "T": T,
        "omega": c_json(omega), "nu": c_json(problem.nu),
        "coefficient": c_json(coeff),
        "expected": c_json(expected),
        "rel_error": rel,
        "incoming_exponent": c_json(0.5 + problem.nu),
    })


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="poleskip",
                                 description="pole-skipping toolkit for half-line scattering")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--tol", type=float, default=1e-12)
        p.add_argument("--param", action="append", metavar="KEY=VAL",
                       help="model parameter, repeatable")

    p = sub.add_parser("catalog", help="pole-skipping catalog of an analytic model")
    common(p)
    p.add_argument("--model", required=True, choices=_MODELS)
    p.add_argument("--n-max", type=int, default=3)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("scan", help="grid scan of S and |F+-|")
    common(p)
    p.add_argument("--model", required=True, choices=_MODELS)
    p.add_argument("--grid", required=True, metavar="AXIS:MIN:MAX:COUNT")
    p.add_argument("--numeric", action="store_true", help="use the ODE solver")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("locate", help="locate a pole-skip point from a seed")
    common(p)
    p.add_argument("--model", required=True, choices=_MODELS)
    p.add_argument("--seed", required=True, help="e.g. nu=-1.05,k=0+0.48i")
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("slope", help="Mobius slope fit at a pole-skip point")
    common(p)
    p.add_argument("--model", required=True, choices=_MODELS)
    p.add_argument("--at", required=True, help="e.g. nu=-1,k=0+0.5i")
    p.add_argument("--radius", type=float, default=1e-3)
    p.add_argument("--angles", type=int, default=16)
    p.set_defaults(func=cmd_slope)

    p = sub.add_parser("cutoff", help="IR/UV cutoff experiments")
    common(p)
    p.add_argument("--model", required=True, choices=("pt1", "pt2"))
    p.add_argument("--nu", help="PT1 strength parameter")
    p.add_argument("--ir", type=float, help="IR truncation radius R")
    p.add_argument("--uv", type=float, help="UV flattening radius a")
    p.add_argument("--probe", required=True, help="e.g. k=0+1i")
    p.add_argument("--radius", type=float, default=0.2, help="contour radius for --ir")
    p.add_argument("--samples", type=int, default=128)
    p.set_defaults(func=cmd_cutoff)

    p = sub.add_parser("holo", help="metric -> effective potential check")
    common(p)
    p.add_argument("--metric", required=True, choices=("btz-like", "rindler"))
    p.add_argument("--omega", required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--mass2", type=float, default=0.0)
    p.set_defaults(func=cmd_holo)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NoConvergence as exc:
        print(f"error: no convergence: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except FitDegenerate as exc:
        print(f"error: degenerate fit: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
