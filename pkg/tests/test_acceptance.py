"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to see them
all); the assertion carries the same verdict.  Grids and parameter sets
are fixed, so the suite is deterministic.
"""

import math
import time

import numpy as np
import pytest

from dunkl_lab import DunklGeometry, WeightedMeasure, build_grid, lp_norm, \
    hankel_forward
from dunkl_lab.harness import checks, families, oracles, sweeps

GEOMETRIES = [DunklGeometry(n, g)
              for n, g in ((1, 0.0), (1, 1.0), (2, 0.5), (3, 0.0), (3, 1.25))]


def _verdict(index, name, residual, tolerance, elapsed, budget=None):
    ok = residual <= tolerance
    line = (f"ACCEPTANCE {index:2d} [{'PASS' if ok else 'FAIL'}] {name}: "
            f"residual={residual:.3e} tolerance={tolerance:.1e} "
            f"({elapsed:.1f}s)")
    print(line)
    assert ok, line
    if budget is not None:
        assert elapsed <= budget, f"{name}: runtime {elapsed:.1f}s over " \
            f"budget {budget}s"


def test_criterion_01_ball_kernel_identity():
    t0 = time.time()
    rep = checks.check_ball_kernel_symbol()
    _verdict(1, "ball kernel transform identity", rep.residual, 1e-7,
             time.time() - t0, budget=60)


def test_criterion_02_transform_core():
    t0 = time.time()
    members = families.identity_family()
    worst_fixed = worst_double = worst_planch = 0.0
    for geom in GEOMETRIES:
        mu = WeightedMeasure.for_geometry(geom)
        grid = build_grid(14.0, 480, "uniform")
        gauss = families.gaussian_member(1.0).make(grid)
        ff = hankel_forward(gauss, geom)
        worst_fixed = max(worst_fixed, float(np.max(np.abs(
            ff.values - np.exp(-grid.nodes ** 2 / 2.0)))))
        for member in members:
            mg = families.default_grid(member)
            f = member.make(mg)
            spec_r = max(member.spectral_radius, member.support_radius)
            spec_grid = build_grid(spec_r, int(min(40 * spec_r, 1500)),
                                   "uniform")
            transform = hankel_forward(f, geom, out_grid=spec_grid)
            back = hankel_forward(transform, geom, out_grid=mg)
            scale = float(np.max(np.abs(f.values)))
            worst_double = max(worst_double, float(np.max(np.abs(
                back.values - f.values))) / scale)
            n1 = lp_norm(f, 2.0, mu)
            worst_planch = max(worst_planch,
                               abs(lp_norm(transform, 2.0, mu) - n1) / n1)
    elapsed = time.time() - t0
    _verdict(2, "gaussian fixed point", worst_fixed, 1e-8, elapsed)
    _verdict(2, "double transform", worst_double, 1e-6, 0.0)
    _verdict(2, "plancherel (full family)", worst_planch, 1e-6, 0.0,
             budget=None)
    assert elapsed <= 60, f"criterion 2 runtime {elapsed:.1f}s over 60s"


def test_criterion_03_bessel_suite():
    t0 = time.time()
    reports = {r.name: r for r in checks.check_bessel_suite()}
    sonine = checks.check_sonine_integral()
    elapsed = time.time() - t0
    _verdict(3, "bessel recurrence", reports["bessel_recurrence"].residual,
             1e-9, elapsed)
    _verdict(3, "bessel derivative identity",
             reports["bessel_derivative_identity"].residual, 1e-6, 0.0)
    _verdict(3, "order-raising finite integral", sonine.residual, 1e-8, 0.0)
    _verdict(3, "decay envelope slope",
             reports["bessel_decay_slope"].residual, math.pi / 2 + 0.1, 0.0)
    assert elapsed <= 30, f"criterion 3 runtime {elapsed:.1f}s over 30s"


def test_criterion_04_wave_oracles():
    t0 = time.time()
    reports = {r.name: r for r in checks.check_wave_oracles()}
    elapsed = time.time() - t0
    _verdict(4, "line-wave closed form",
             reports["dalembert_line_wave"].residual, 1e-5, elapsed)
    _verdict(4, "spherical-means closed form",
             reports["spherical_means_wave"].residual, 1e-4, 0.0)
    assert elapsed <= 60, f"criterion 4 runtime {elapsed:.1f}s over 60s"


def test_criterion_05_support_properties():
    t0 = time.time()
    reports = {r.name: r for r in checks.check_support_properties()}
    elapsed = time.time() - t0
    _verdict(5, "strict interior vanishing",
             reports["strict_interior_vanishing"].residual, 1e-6, elapsed)
    _verdict(5, "finite propagation speed",
             reports["finite_propagation_speed"].residual, 1e-6, 0.0)
    assert elapsed <= 60, f"criterion 5 runtime {elapsed:.1f}s over 60s"


def test_criterion_06_energy_conservation():
    t0 = time.time()
    rep = checks.check_energy_conservation()
    _verdict(6, "energy conservation over t in [0,8]", rep.residual, 1e-8,
             time.time() - t0)


def test_criterion_07_multiplier_sweep():
    t0 = time.time()
    geom = DunklGeometry(3, 0.0)
    alpha = geom.nu + 0.5  # gamma + (n-1)/2
    bounded = sweeps.sweep_bessel_multiplier(
        alpha, [(2.0, 6.0), (4.0 / 3.0, 4.0)], geom)
    probe_cfg = sweeps.PROBE_MULTIPLIER
    probe = sweeps.sweep_bessel_multiplier(
        probe_cfg["alpha"], [(probe_cfg["p"], probe_cfg["q"])],
        DunklGeometry(probe_cfg["n"], probe_cfg["gamma"]), expect_growth=True)
    elapsed = time.time() - t0
    _verdict(7, "admissible pairs saturate (< 5%)", bounded.saturation,
             sweeps.SATURATION_LIMIT, elapsed)
    assert bounded.verdict == "bounded"
    growth_ok = 0.0 if (probe.verdict == "growing"
                        and probe.growth_factor >= 2.0) else 1.0
    _verdict(7, f"pre-registered supercritical probe "
             f"(factor {probe.growth_factor:.2f}, predicted "
             f"{2 ** (4 * probe.predicted_exponent):.2f})", growth_ok, 0.5,
             0.0)
    assert elapsed <= 600, f"criterion 7 runtime {elapsed:.1f}s over 600s"


def test_criterion_08_wave_sweeps():
    t0 = time.time()
    worst_sat = 0.0
    for geom in GEOMETRIES:
        for line in ("upper", "lower"):
            pairs = sweeps.wave_line_pairs(line, geom)
            if not pairs:
                continue
            res = sweeps.sweep_wave_estimate([p for p, _ in pairs], line,
                                             (1.0,), geom)
            assert res.verdict == "bounded", f"{res.name} not bounded"
            worst_sat = max(worst_sat, res.saturation)
    for gamma in (0.0, 1.0):
        geom = DunklGeometry(1, gamma)
        for line in ("upper", "lower"):
            pairs = sweeps.wave_line_pairs(line, geom)
            if not pairs:
                continue
            res = sweeps.sweep_wave_estimate([p for p, _ in pairs], line,
                                             (1.0,), geom,
                                             rank_one_mixed=True)
            assert res.verdict == "bounded", f"{res.name} not bounded"
            worst_sat = max(worst_sat, res.saturation)
    elapsed = time.time() - t0
    _verdict(8, "wave-line sweeps bounded (radial x5 + mixed x2)",
             worst_sat, sweeps.SATURATION_LIMIT, elapsed, budget=600)


def test_criterion_09_rank_one_calculus():
    t0 = time.time()
    reports = {r.name: r for r in checks.check_rank1_calculus()}
    rh_reports, highpass = sweeps.check_riesz_and_highpass(DunklGeometry(1, 1.0))
    elapsed = time.time() - t0
    _verdict(9, "eigen-relation", reports["rank1_eigen_relation"].residual,
             1e-6, elapsed)
    _verdict(9, "kernel eigen-equation (series oracle)",
             reports["rank1_kernel_ode"].residual, 1e-7, 0.0)
    _verdict(9, "sign multiplier involution",
             reports["riesz_involution"].residual, 1e-8, 0.0)
    ratio_rep = rh_reports[0]
    _verdict(9, f"riesz ratios bounded (max "
             f"{ratio_rep.extras['max_ratio']:.3f})", ratio_rep.residual,
             ratio_rep.tolerance, 0.0)
    assert highpass.verdict == "bounded"
    _verdict(9, "high-pass potential bounded at p = D + 1/2",
             highpass.saturation, sweeps.SATURATION_LIMIT, 0.0)
    with pytest.raises(ValueError):
        sweeps.sweep_highpass_potential(DunklGeometry(1, 1.0), 2.5)
    print("ACCEPTANCE  9 [PASS] high-pass potential range error at "
          "p = D - 1/2")


def test_criterion_10_weak_type_and_translation():
    t0 = time.time()
    weak = checks.check_weak_type_ball_half()
    translation = {r.name: r for r in checks.check_translation_bounds()}
    lemma = checks.check_translated_odd_kernel()
    elapsed = time.time() - t0
    _verdict(10, "weak-type level sets vs oracle (5%)", weak.residual, 0.05,
             elapsed)
    _verdict(10, "translation sup bound",
             translation["translation_sup_bound"].residual, 1e-3, 0.0)
    _verdict(10, "radial translation contraction",
             translation["translation_radial_contraction"].residual, 1e-3, 0.0)
    sups = lemma.extras["sup_values"]
    finite = 0.0 if all(math.isfinite(v) for v in sups) else 1.0
    _verdict(10, f"translated odd-kernel sups finite "
             f"(slope {lemma.extras['log_slope']:.3f})", finite, 0.5, 0.0)
    _verdict(10, "translated odd-kernel multiplicity-zero oracle",
             lemma.residual, 0.05, 0.0)
