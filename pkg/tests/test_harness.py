import math

import numpy as np
import pytest

from dunkl_lab import DunklGeometry, WeightedMeasure, lp_norm
from dunkl_lab.harness import checks, families, oracles, sweeps


def test_family_transforms_match_engine():
    from dunkl_lab.hankel import hankel_at
    geom = DunklGeometry(2, 0.5)
    rho = np.linspace(0.0, 6.0, 25)
    for member in (families.gaussian_member(0.6), families.hermite_member(),
                   families.ball_poly_member(8)):
        if member.transform is None:
            continue
        grid = families.default_grid(member)
        f = member.make(grid)
        engine = hankel_at(f, geom, rho)
        closed = member.transform(geom, rho)
        scale = np.max(np.abs(closed))
        assert np.max(np.abs(engine - closed)) < 1e-9 * scale


def test_gaussian_norm_oracle_consistency():
    geom = DunklGeometry(3, 1.25)
    mu = WeightedMeasure.for_geometry(geom)
    member = families.gaussian_member(1.6)
    f = member.make(families.default_grid(member))
    for p in (1.0, 2.0, 3.0):
        assert lp_norm(f, p, mu) == pytest.approx(
            oracles.gaussian_lp_norm(geom.nu, p, 1.6), rel=1e-8)


def test_scaling_oracle_zero_on_lower_line():
    # the predicted growth exponent vanishes identically on the lower line
    for n, gamma in ((3, 0.0), (1, 1.0), (3, 1.25)):
        geom = DunklGeometry(n, gamma)
        alpha = geom.nu + 0.5
        for p, q in sweeps.wave_line_pairs("lower", geom):
            e = oracles.multiplier_growth_exponent(alpha, p, q, geom)
            assert abs(e) < 1e-12


def test_scaling_oracle_negative_on_upper_line_interior():
    geom = DunklGeometry(3, 0.0)
    alpha = geom.nu + 0.5
    e = oracles.multiplier_growth_exponent(alpha, 2.0, 6.0, geom)
    assert e == pytest.approx(-2.0 / 3.0, abs=1e-12)


def test_registered_probes_predict_growth():
    pm = sweeps.PROBE_MULTIPLIER
    geom = DunklGeometry(pm["n"], pm["gamma"])
    e = oracles.multiplier_growth_exponent(pm["alpha"], pm["p"], pm["q"], geom)
    assert 2.0 ** (4.0 * e) >= sweeps.GROWTH_FACTOR
    pp = sweeps.PROBE_POWER
    geom = DunklGeometry(pp["n"], pp["gamma"])
    e = oracles.power_multiplier_growth_exponent(pp["t_exp"], pp["p"],
                                                 pp["q"], geom)
    assert 2.0 ** (4.0 * e) >= sweeps.GROWTH_FACTOR


def test_sweep_rejects_inadmissible_without_flag():
    geom = DunklGeometry(3, 0.0)
    with pytest.raises(ValueError):
        sweeps.sweep_bessel_multiplier(1.0, [(8.0 / 7.0, 8.0)], geom)
    with pytest.raises(ValueError):
        sweeps.sweep_power_multiplier(1.0, 2.0, 15.0, geom)


def test_sweep_rejects_unregisterable_probe():
    geom = DunklGeometry(3, 0.0)
    # drop below the admissible line by too little for a factor-2 probe
    with pytest.raises(ValueError):
        sweeps.sweep_bessel_multiplier(1.0, [(2.0, 6.5)], geom,
                                       expect_growth=True)


def test_sweep_monotone_consistency():
    # a bounded pair stays bounded when q shrinks toward 2 at the same p
    geom = DunklGeometry(3, 0.0)
    exps = tuple(range(-6, 7))
    res = sweeps.sweep_bessel_multiplier(1.0, [(2.0, 6.0), (2.0, 4.0)], geom,
                                         lambda_exponents=exps)
    assert res.verdict == "bounded"


def test_wave_line_pairs_degenerate_geometry():
    geom = DunklGeometry(1, 0.0)
    pairs = sweeps.wave_line_pairs("upper", geom)
    assert pairs == [(1.0, math.inf)]


def test_check_report_pass_semantics():
    rep = checks.CheckReport("x", residual=1e-9, tolerance=1e-8)
    assert rep.passed
    rep2 = checks.CheckReport("x", residual=2e-8, tolerance=1e-8)
    assert not rep2.passed
    js = rep.as_json()
    assert js["pass"] is True and js["check"] == "x"


def test_kernel_ode_oracle_multiplicity_zero():
    val = oracles.kernel_ode_series(0.7, 2.0, 0.0)
    assert abs(val - np.exp(1j * 1.4)) < 1e-12


def test_dalembert_oracle_pure_position():
    g = lambda x: math.exp(-x * x)
    u = oracles.dalembert_solution(lambda x: 0.0, g, 0.5, 1.5)
    assert u == pytest.approx(0.5 * (g(2.0) + g(-1.0)), rel=1e-12)


def test_level_measure_oracle_limits():
    nu = 0.5
    c0 = math.sqrt(2.0) / math.gamma(0.5)
    assert oracles.ball_power_half_level_measure(0.5 * c0, nu) == \
        pytest.approx(1.0 / (2 * nu + 2), rel=1e-14)
    s = 1e6
    tail = s * s * oracles.ball_power_half_level_measure(s, nu)
    assert tail == pytest.approx(oracles.ball_power_half_weak_limit(nu),
                                 rel=1e-6)
