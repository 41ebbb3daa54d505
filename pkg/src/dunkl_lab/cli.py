"""Command-line front end.

Subcommands: info | transform | propagate | verify | sweep.  All commands
are deterministic given a configuration file; outputs are written
atomically with fixed 15-significant-digit formatting, so re-runs are
byte-identical.

Exit codes: 0 success, 1 check failure, 2 usage or configuration error,
3 numerical envelope (resolution) error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import io as lio
from .config import RunConfig, load_config
from .errors import ResolutionError
from .geometry import classify_pair, ExponentPair, line_lower_q, line_upper_q
from .harness import checks, families, sweeps
from .hankel import hankel_forward
from .operators import WaveState, wave_propagate, _wave_symbols
from .radial import build_grid, profile_from_function, zero_profile

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOLUTION = 3


def _out_dir(args, cfg: RunConfig) -> str:
    out = args.out or cfg.raw.get("output_dir") or "."
    os.makedirs(out, exist_ok=True)
    return out


def _builtin_profile(spec: dict, cfg: RunConfig):
    kind = spec.get("builtin")
    gp = cfg.grid_params
    if kind == "zero":
        return zero_profile(build_grid(gp["r_max"], gp["N"], gp["grading"]))
    if kind == "gaussian":
        member = families.gaussian_member(spec.get("sigma", 1.0))
    elif kind == "hermite":
        member = families.hermite_member()
    elif kind == "ball_poly":
        member = families.ball_poly_member(spec.get("power", 8))
    else:
        raise ValueError(f"unknown builtin profile {kind!r}")
    r_max = min(gp["r_max"], member.support_radius)
    n = max(64, int(gp["N"] * r_max / gp["r_max"]))
    return member.make(build_grid(r_max, n, "uniform"))


def _profile_from_spec(spec: dict, cfg: RunConfig):
    if "csv" in spec:
        return lio.read_profile_csv(spec["csv"])
    if "builtin" in spec:
        return _builtin_profile(spec, cfg)
    raise ValueError("profile spec needs 'csv' or 'builtin'")


def cmd_info(args, cfg: RunConfig) -> int:
    geom = cfg.geometry
    alpha = geom.nu + 0.5
    rows = []
    for line, fn in (("upper", line_upper_q), ("lower", line_lower_q)):
        pairs = sweeps.wave_line_pairs(line, geom, count=5)
        for p, q in pairs:
            case = classify_pair(alpha, ExponentPair(p, q), geom)
            rows.append({"n": geom.n, "gamma": geom.gamma, "p": p,
                         "q": ("inf" if q == math.inf else q),
                         "line": line, "case": case})
    print(f"geometry n={geom.n} gamma={lio.fmt(geom.gamma)} "
          f"nu={lio.fmt(geom.nu)} D={lio.fmt(geom.homogeneous_dim)}")
    print(f"admissible fixed-time lines at order alpha={lio.fmt(alpha)}:")
    if not rows:
        print("  (degenerate: no admissible pairs at this geometry)")
    for row in rows:
        qtxt = row["q"] if isinstance(row["q"], str) else lio.fmt(row["q"])
        print(f"  line={row['line']:5s} p={lio.fmt(row['p']):>18s} "
              f"q={qtxt:>18s} case={row['case']}")
    out = _out_dir(args, cfg)
    lio.write_report_json(os.path.join(out, "info.json"),
                          {"geometry": {"n": geom.n, "gamma": geom.gamma},
                           "alpha": alpha, "rows": rows})
    return EXIT_OK


def cmd_transform(args, cfg: RunConfig) -> int:
    path = args.input or cfg.section("transform").get("input")
    if not path:
        raise ValueError("transform needs an input CSV (positional argument "
                         "or transform.input in the config)")
    prof = lio.read_profile_csv(path)
    out_prof = hankel_forward(prof, cfg.geometry)
    out = _out_dir(args, cfg)
    dest = os.path.join(out, os.path.splitext(os.path.basename(path))[0]
                        + ".transform.csv")
    lio.write_profile_csv(dest, out_prof)
    print(f"wrote {dest}")
    return EXIT_OK


def cmd_propagate(args, cfg: RunConfig) -> int:
    section = cfg.section("propagate")
    if "t_list" not in section:
        raise ValueError("propagate needs propagate.t_list in the config")
    geom = cfg.geometry
    f = _profile_from_spec(section.get("f", {"builtin": "zero"}), cfg)
    g = _profile_from_spec(section.get("g", {"builtin": "zero"}), cfg)
    if f.grid.size != g.grid.size or f.grid.r_max != g.grid.r_max:
        # re-sample the smaller-support profile onto the wider grid
        wide = f.grid if f.grid.r_max >= g.grid.r_max else g.grid
        f = profile_from_function(wide, f.eval, tail=f.tail) \
            if f.grid is not wide else f
        g = profile_from_function(wide, g.eval, tail=g.tail) \
            if g.grid is not wide else g
    out = _out_dir(args, cfg)
    written = []
    for t in section["t_list"]:
        state = WaveState(velocity=f, position=g, t=float(t), geom=geom)
        u = wave_propagate(state)
        dest = os.path.join(out, f"u_t{t:.6f}.csv")
        lio.write_profile_csv(dest, u)
        written.append(dest)
        if section.get("export_symbols") or args.export_symbols:
            rho = np.linspace(0.0, f.grid.r_max, 513)
            sin_part, cos_part = _wave_symbols(float(t), rho)
            lio.write_symbol_csv(os.path.join(out, f"symbol_sin_t{t:.6f}.csv"),
                                 rho, sin_part.astype(complex))
            lio.write_symbol_csv(os.path.join(out, f"symbol_cos_t{t:.6f}.csv"),
                                 rho, cos_part.astype(complex))
    for dest in written:
        print(f"wrote {dest}")
    return EXIT_OK


SUITES = {
    "identities": lambda cfg: checks.check_transform_identities(cfg.geometry)
    + [checks.check_family_agreement(cfg.geometry),
       checks.check_dilation_pairing(cfg.geometry)],
    "bessel": lambda cfg: checks.check_bessel_suite()
    + [checks.check_sonine_integral()],
    "kernels": lambda cfg: [checks.check_ball_kernel_symbol(),
                            checks.check_weak_type_ball_half(),
                            checks.check_odd_kernel_symbol()],
    "waves": lambda cfg: checks.check_wave_oracles()
    + checks.check_support_properties()
    + [checks.check_energy_conservation()],
    "rank1": lambda cfg: checks.check_rank1_calculus()
    + checks.check_translation_bounds()
    + [checks.check_translated_odd_kernel()],
}


def _run_suite(name: str, cfg: RunConfig) -> list:
    if name == "all":
        reports = []
        for key in sorted(SUITES):
            reports.extend(_run_suite(key, cfg))
        return reports
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; registered: "
                         f"{', '.join(sorted(SUITES) + ['all'])}")
    return SUITES[name](cfg)


def cmd_verify(args, cfg: RunConfig) -> int:
    suite = args.suite or cfg.raw.get("suite")
    if not suite:
        raise ValueError("verify needs --suite or a 'suite' config entry")
    reports = _run_suite(suite, cfg)
    override = cfg.section("verify").get("tolerance_override")
    if override is not None:
        for rep in reports:
            rep.tolerance = float(override)
    payload = {"suite": suite,
               "geometry": {"n": cfg.geometry.n, "gamma": cfg.geometry.gamma},
               "checks": sorted((r.as_json() for r in reports),
                                key=lambda d: d["check"]),
               "pass": all(r.passed for r in reports)}
    out = _out_dir(args, cfg)
    dest = os.path.join(out, f"report_{suite}.json")
    lio.write_report_json(dest, payload)
    for rep in sorted(reports, key=lambda r: r.name):
        print(f"[{'PASS' if rep.passed else 'FAIL'}] {rep.name}: "
              f"residual={rep.residual:.6g} tolerance={rep.tolerance:.6g}")
    print(f"wrote {dest}")
    return EXIT_OK if payload["pass"] else EXIT_CHECK_FAILURE


def cmd_sweep(args, cfg: RunConfig) -> int:
    section = cfg.section("sweep")
    kind = section.get("kind")
    if kind is None:
        raise ValueError("sweep needs sweep.kind in the config")
    geom = cfg.geometry
    expect_growth = bool(section.get("expect_growth")) or args.expect_growth
    lo = section.get("lambda_min_exp", -8)
    hi = section.get("lambda_max_exp", 8)
    exponents = tuple(range(lo, hi + 1))
    if kind == "wave":
        line = section.get("line", "upper")
        p_list = section.get("p_list") or \
            [p for p, _ in sweeps.wave_line_pairs(line, geom)]
        result = sweeps.sweep_wave_estimate(
            p_list, line, section.get("t_list", [1.0]), geom,
            rank_one_mixed=bool(section.get("rank_one_mixed")),
            lambda_exponents=exponents)
    elif kind == "multiplier":
        alpha = section.get("alpha", geom.nu + 0.5)
        pairs = section.get("pairs")
        if pairs is None:
            pairs = sweeps.wave_line_pairs("upper", geom)
        pairs = [(float(p), math.inf if q == "inf" else float(q))
                 for p, q in pairs]
        result = sweeps.sweep_bessel_multiplier(
            alpha, pairs, geom, lambda_exponents=exponents,
            expect_growth=expect_growth)
    elif kind == "power":
        result = sweeps.sweep_power_multiplier(
            section["t_exp"], section["p"], section["q"], geom,
            lambda_exponents=exponents, expect_growth=expect_growth)
    else:
        raise ValueError(f"unknown sweep kind {kind!r}")
    out = _out_dir(args, cfg)
    csv_dest = os.path.join(out, "sweep.csv")
    lio.write_sweep_csv(csv_dest, result.rows)
    lio.write_report_json(os.path.join(out, "sweep.json"), result.as_json())
    print(f"{result.name}: verdict={result.verdict} "
          f"saturation={result.saturation:.6g} sup={result.sup_ratio:.6g}")
    print(f"wrote {csv_dest}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dunkl-lab",
        description="Weighted radial transforms, Bessel-kernel multiplier "
                    "operators, a spectral wave propagator, and the "
                    "verification harness for their norm estimates.")
    parser.add_argument("--config", metavar="PATH",
                        help="JSON configuration file")
    parser.add_argument("--out", metavar="DIR", help="output directory")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", help="print the admissible exponent lines")
    p_tr = sub.add_parser("transform", help="radial transform of a CSV profile")
    p_tr.add_argument("input", nargs="?", help="profile CSV (r,re,im)")
    p_pr = sub.add_parser("propagate", help="wave snapshots at the configured times")
    p_pr.add_argument("--export-symbols", action="store_true",
                      help="also write the propagator symbol tables")
    p_ve = sub.add_parser("verify", help="run a registered check suite")
    p_ve.add_argument("--suite", help="suite name (or 'all')")
    p_sw = sub.add_parser("sweep", help="dilation sweep per the config")
    p_sw.add_argument("--expect-growth", action="store_true",
                      help="allow a pre-registered supercritical probe")
    return parser


COMMANDS = {
    "info": cmd_info,
    "transform": cmd_transform,
    "propagate": cmd_propagate,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "input"):
        args.input = None
    if not hasattr(args, "export_symbols"):
        args.export_symbols = False
    if not hasattr(args, "suite"):
        args.suite = None
    if not hasattr(args, "expect_growth"):
        args.expect_growth = False
    try:
        cfg = load_config(args.config) if args.config else RunConfig(
            raw={"version": "1"})
        return COMMANDS[args.command](args, cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResolutionError as exc:
        print(f"resolution error: {exc}", file=sys.stderr)
        return EXIT_RESOLUTION


if __name__ == "__main__":
    sys.exit(main())
