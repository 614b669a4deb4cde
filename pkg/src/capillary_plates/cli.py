"""Command-line front end writing CSV or JSON datasets.

Exit status: 0 on success, 2 on invalid data, 1 on numerical failure and
64 on a usage error.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from . import barriers, classify, estimates, forces, profile
from .curve import ProfileCurve
from .errors import CapillaryError, DomainError

EXIT_OK, EXIT_NUMERIC, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2, 64
FIGURES = ("2", "3b", "4", "5a", "5b", "6", "7", "8", "9", "A-3")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def schema(command: str) -> dict:
    """The JSON schema shipped for ``command``'s ``--json`` output."""
    text = resources.files(__package__).joinpath("schemas", f"{command}.schema.json").read_text()
    return json.loads(text)


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _curve_json(curve: ProfileCurve, **extra) -> dict:
    out = {
        "B": curve.B,
        "C": curve.C,
        "status": curve.status,
        "crossing": None if curve.crossing is None else list(map(float, curve.crossing)),
        "samples": curve.samples.tolist(),
    }
    out.update(extra)
    return out


def _finite(obj):
    # strict JSON has no inf/nan; unbounded estimates are written as null
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    return obj


def _dump(obj) -> str:
    return json.dumps(_finite(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def _angle(args, name):
    v = getattr(args, name)
    if v is None:
        raise DomainError(f"--{name.replace('_', '-')} is required")
    return math.radians(v) if args.degrees else v


def _require(args, name):
    v = getattr(args, name.replace("-", "_"))
    if v is None:
        raise DomainError(f"--{name} is required")
    return v


def cmd_critical(args) -> str:
    g2 = _angle(args, "gamma2")
    B0, B00 = barriers.critical_separations(g2)
    printed = barriers.b00_printed(g2)
    data = {
        "gamma2": g2,
        "B0": B0,
        "B00": B00,
        "B00_printed_constant": printed,
        "discrepancy_factor": printed / B00 if B00 > 0 else None,
        "thresholds": {"wide_above": B0, "narrow_at_or_below": B00},
    }
    # a record rather than a table, so JSON is the default here
    return _dump(data)


def cmd_barrier(args) -> str:
    g2 = _angle(args, "gamma2")
    B = _require(args, "B")
    curve = barriers.barrier(args.kind, B, g2, args.samples)
    if args.json:
        return _dump(_curve_json(curve, kind=args.kind, gamma2=g2, reaches=curve.status == "complete"))
    return barriers.barrier_csv(curve, args.kind, g2)


def cmd_profile(args) -> str:
    config = profile.PlateConfig(_angle(args, "gamma1"), _angle(args, "gamma2"), _require(args, "B"))
    curve = profile.solve_join(config, args.samples)
    if args.json:
        return _dump(_curve_json(curve, gamma1=config.gamma1, gamma2=config.gamma2, case=curve.meta["case"]))
    return curve.to_csv()


def cmd_sweep(args) -> str:
    config = profile.PlateConfig(_angle(args, "gamma1"), _angle(args, "gamma2"), _require(args, "B-max"))
    sweep = forces.sweep_force(config, _require(args, "B-max"), _require(args, "B-min"), args.steps,
                               refine_tol=args.tol or 1e-8)
    if args.json:
        return _dump(_sweep_json(sweep))
    return sweep.to_csv()


def _sweep_json(sweep: forces.ForceSweep) -> dict:
    ext = sweep.extremum
    return {
        "gamma1": sweep.config.gamma1,
        "gamma2": sweep.config.gamma2,
        "classification": sweep.classification.value,
        "truncated": sweep.truncated,
        "points": [[b, f] for b, f in sweep.points],
        "extremum": None if ext is None else {"B_star": ext.B_star, "F_star": ext.F_star, "xi_star": ext.xi_star},
    }


_REPORT_COLUMNS = ("gamma1", "gamma2", "B", "region", "regime", "force", "force_sign", "menisci",
                   "crossing", "components")


def cmd_classify(args) -> str:
    rep = classify.classify_solution(_angle(args, "gamma1"), _angle(args, "gamma2"), _require(args, "B"))
    d = rep.as_dict()
    if args.json:
        return _dump(d)
    row = [(_fmt(d[k]) if isinstance(d[k], float) else str(d[k])) for k in _REPORT_COLUMNS]
    return ",".join(_REPORT_COLUMNS) + "\n" + ",".join(row) + "\n"


def cmd_map(args) -> str:
    g2 = _angle(args, "gamma2")
    m = args.steps
    if args.B_min is not None or args.B_max is not None:
        lo = _require(args, "B-min")
        hi = _require(args, "B-max")
        grid = np.geomspace(lo, hi, m)
    else:
        grid = classify.default_B_grid(g2, m)
    rmap = classify.region_map(g2, m, grid)
    if args.json:
        return _dump({"gamma2": g2, "cells": [r.as_dict() for row in rmap.reports for r in row],
                      "components_per_row": rmap.attracting_components()})
    return rmap.to_csv()


def cmd_estimate(args) -> str:
    g1, g2, B = _angle(args, "gamma1"), _angle(args, "gamma2"), _require(args, "B")
    if abs(g1 + g2 - math.pi) < 1e-12:
        checks = estimates.symmetric_chain(B, g2)
        extra = {"symmetric_height_bound": estimates.symmetric_height_bound(B, g2)}
    else:
        checks = estimates.check_height_bounds(B, g1, g2)
        extra = {"attraction_threshold": estimates.attraction_threshold(g1, g2)
                 if estimates.datum_mismatch(g1, g2) >= 0 else None}
    extra["height_jump"] = estimates.height_jump(g2)
    if args.json:
        return _dump({"gamma1": g1, "gamma2": g2, "B": B, "checks": [c._asdict() for c in checks], **extra})
    buf = io.StringIO()
    buf.write("name,bound,attained,margin,holds,applicable\n")
    for c in checks:
        buf.write(f"{c.name},{_fmt(c.bound)},{_fmt(c.attained)},{_fmt(c.margin)},{c.holds},{c.applicable}\n")
    for k, v in extra.items():
        buf.write(f"# {k}={'none' if v is None else _fmt(v)}\n")
    return buf.getvalue()


def cmd_force(args) -> str:
    if args.psi0 is not None:
        psi0 = math.radians(args.psi0) if args.degrees else args.psi0
        F = forces.force_crossing(psi0)
        data = {"psi0": psi0, "F": F}
    else:
        config = profile.PlateConfig(_angle(args, "gamma1"), _angle(args, "gamma2"), _require(args, "B"))
        sol = profile._join(config)
        F = sol.force
        data = {"gamma1": config.gamma1, "gamma2": config.gamma2, "B": config.B, "F": F,
                "F_right_height": forces.force_from_right_height(config.B, sol.U2, config.gamma2)}
    if args.json:
        return _dump(data)
    return _fmt(F) + "\n"


# figure presets ------------------------------------------------------------

def _figure_files(fig: str, args) -> tuple[dict, dict]:
    """Return ``(parameters, {filename: (text, description)})``."""
    files: dict[str, tuple[str, str]] = {}
    g2_default = {"2": math.pi / 4, "3b": math.pi / 6, "4": math.pi / 6, "5a": math.pi / 6,
                  "5b": math.pi / 6, "9": math.pi / 6, "A-3": math.pi / 4}
    g2 = _angle(args, "gamma2") if args.gamma2 is not None else g2_default.get(fig)
    n = args.samples
    params: dict = {"gamma2": g2}
    if fig == "2":
        B0, B00 = barriers.critical_separations(g2)
        for name, B in (("wide", 4.0 * B0), ("intermediate", math.sqrt(B0 * B00)), ("narrow", 0.5 * B00)):
            for kind in barriers.BarrierKind:
                c = barriers.barrier(kind, B, g2, n)
                files[f"{name}_{kind.value}.csv"] = (barriers.barrier_csv(c, kind, g2), f"barrier {kind.value}, {name}")
            params[f"B_{name}"] = B
    elif fig == "3b":
        B = args.B or 0.3
        params["B"] = B
        ranges = forces.admissible_ranges(B, g2)
        psi2 = math.pi / 2 - g2
        for kind in (barriers.BarrierKind.II, barriers.BarrierKind.III):
            c = barriers.barrier(kind, B, g2, n)
            files[f"barrier_{kind.value}.csv"] = (barriers.barrier_csv(c, kind, g2), f"barrier {kind.value}")
        for label, iv in (("upper", ranges.upper), ("lower", ranges.lower)):
            for k, x in enumerate(np.linspace(iv.lo, iv.hi, 6)[1:-1]):
                c = profile.solve_join(profile.PlateConfig.from_inclinations(float(x), psi2, B), n)
                files[f"{label}_{k}.csv"] = (c.to_csv(comment=f"psi1={_fmt(x)}"), f"{label}-class neighbor psi1={x:.6g}")
    elif fig == "4":
        B_grid = np.geomspace(args.B_min or 1e-3, args.B_max or 10.0, args.steps)
        buf = io.StringIO()
        buf.write("B,upper_lo,upper_hi,lower_lo,lower_hi,lower_hi_closed\n")
        for B in B_grid:
            r = forces.admissible_ranges(float(B), g2)
            buf.write(",".join(_fmt(v) for v in (B, r.upper.lo, r.upper.hi, r.lower.lo, r.lower.hi))
                      + f",{r.lower.hi_closed}\n")
        files["ranges.csv"] = (buf.getvalue(), "admissible neighbor ranges")
    elif fig in ("5a", "5b"):
        B_hi, B_lo = args.B_max or 0.3, args.B_min or 1e-4
        params.update(B_max=B_hi, B_min=B_lo, steps=args.steps)
        psi2 = math.pi / 2 - g2
        ranges = forces.admissible_ranges(B_hi, g2)
        iv = ranges.upper if fig == "5a" else ranges.lower
        for k, x in enumerate(np.linspace(iv.lo, iv.hi, 7)[1:-1]):
            cfg = profile.PlateConfig.from_inclinations(float(x), psi2, B_hi)
            s = forces.sweep_force(cfg, B_hi, B_lo, args.steps)
            files[f"sweep_{k}.csv"] = (s.to_csv(), f"psi1={x:.17g}")
        sym = forces.sweep_force(profile.PlateConfig(math.pi - g2, g2, B_hi), B_hi, B_lo, args.steps)
        files["symmetric.csv"] = (sym.to_csv(), "symmetric configuration")
    elif fig == "6":
        grid = np.linspace(0.0, math.pi / 2, args.steps + 1)[:-1]
        buf = io.StringIO()
        buf.write("gamma2,B0,B00\n")
        for g in grid:
            B0, B00 = barriers.critical_separations(float(g))
            buf.write(f"{_fmt(g)},{_fmt(B0)},{_fmt(B00)}\n")
        files["critical.csv"] = (buf.getvalue(), "critical separations")
        params = {"gamma2": "grid"}
    elif fig in ("7", "8"):
        params = {"psi2": [math.pi / 12 * k for k in (2, 3, 4, 5)]}
        for psi2 in params["psi2"]:
            g = math.pi / 2 - psi2
            B_hi = args.B_max or (barriers.critical_separations(g)[0] if fig == "8" else 10.0)
            B_grid = np.geomspace(args.B_min or 1e-4, B_hi, args.steps)
            buf = io.StringIO()
            col = "psi1_zero" if fig == "7" else "psi10"
            buf.write(f"B,{col}\n")
            for B in B_grid:
                v = barriers.psi1_zero(float(B), g) if fig == "7" else barriers.psi10(float(B), g).value
                buf.write(f"{_fmt(B)},{_fmt(v)}\n")
            files[f"psi2_{psi2:.6f}.csv"] = (buf.getvalue(), f"{col} for psi2={psi2:.17g}")
    elif fig == "9":
        psi2 = math.pi / 2 - g2
        for B in (args.B or 0.3, 0.1, 0.03):
            r = forces.admissible_ranges(B, g2)
            buf = io.StringIO()
            buf.write("psi1,class,delta_xi\n")
            for kind, iv in ((forces.NeighborKind.UPPER, r.upper), (forces.NeighborKind.LOWER, r.lower)):
                for x in np.linspace(iv.lo, iv.hi, args.steps + 2)[1:-1]:
                    d = forces.extremal_position(forces.NeighborClass(kind, float(x)), g2, B)
                    buf.write(f"{_fmt(x)},{kind.value},{_fmt(d)}\n")
            files[f"B_{B:.6g}.csv"] = (buf.getvalue(), f"extremal positions, B_start={B:.17g}, psi2={psi2:.17g}")
    elif fig == "A-3":
        grid = classify.default_B_grid(g2, args.steps)
        rmap = classify.region_map(g2, args.steps, grid)
        files["map.csv"] = (rmap.to_csv(), "region map")
        B0, B00 = barriers.critical_separations(g2)
        params.update(B0=B0, B00=B00, steps=args.steps)
    return params, files


def cmd_figure(args) -> str:
    fig = args.id
    out = Path(args.out or f"figure-{fig}")
    out.mkdir(parents=True, exist_ok=True)
    params, files = _figure_files(fig, args)
    for name, (text, _) in files.items():
        (out / name).write_text(text)
    manifest = {
        "figure": fig,
        "parameters": params,
        "files": [{"name": k, "description": d} for k, (_, d) in files.items()],
    }
    (out / "manifest.json").write_text(_dump(manifest))
    args.out = None  # the directory is the output
    return _dump(manifest) if args.json else "".join(f"{out / k}\n" for k in files)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--gamma1", type=float, help="contact angle on the left plate (rad)")
    common.add_argument("--gamma2", type=float, help="contact angle on the right plate (rad)")
    common.add_argument("--B", type=float, help="separation parameter kappa a^2")
    common.add_argument("--B-min", dest="B_min", type=float)
    common.add_argument("--B-max", dest="B_max", type=float)
    common.add_argument("--steps", type=int, default=200)
    common.add_argument("--samples", type=int, default=profile.DEFAULT_SAMPLES)
    common.add_argument("--out", help="output file (directory for figure)")
    common.add_argument("--json", action="store_true", help="JSON instead of CSV")
    common.add_argument("--degrees", action="store_true", help="angles given in degrees")
    common.add_argument("--tol", type=float, help="refinement tolerance")

    parser = _Parser(prog="capillary-plates", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("critical", parents=[common], help="critical separations B0, B00")
    p.set_defaults(func=cmd_critical)
    p = sub.add_parser("barrier", parents=[common], help="one barrier curve")
    p.add_argument("--kind", required=True, choices=[k.value for k in barriers.BarrierKind])
    p.set_defaults(func=cmd_barrier)
    p = sub.add_parser("profile", parents=[common], help="curve joining the plates")
    p.set_defaults(func=cmd_profile)
    p = sub.add_parser("sweep", parents=[common], help="force against separation")
    p.set_defaults(func=cmd_sweep)
    p = sub.add_parser("classify", parents=[common], help="region of one configuration")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("map", parents=[common], help="region map over (B, gamma1)")
    p.set_defaults(func=cmd_map)
    p = sub.add_parser("estimate", parents=[common], help="height estimates with margins")
    p.set_defaults(func=cmd_estimate)
    p = sub.add_parser("force", parents=[common], help="normalized force")
    p.add_argument("--psi0", type=float, help="axis crossing inclination (rad)")
    p.set_defaults(func=cmd_force)
    p = sub.add_parser("figure", parents=[common], help="dataset behind a figure")
    p.add_argument("--id", required=True, choices=FIGURES)
    p.set_defaults(func=cmd_figure)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (CapillaryError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
