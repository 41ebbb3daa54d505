import math

import numpy as np
import pytest

from dunkl_lab import DunklGeometry, WeightedMeasure, build_grid, dilate, \
    distribution_function, lp_norm, profile_from_function, sup_norm, \
    weak_norm, zero_profile
from dunkl_lab.operators import ball_power_profile
from dunkl_lab.harness import oracles

GEOM = DunklGeometry(3, 1.25)
MU = WeightedMeasure.for_geometry(GEOM)


def indicator_profile():
    grid = build_grid(1.0, 96, "uniform")
    return profile_from_function(
        grid, lambda r: np.where(np.asarray(r) <= 1.0, 1.0, 0.0),
        tail="compact")


def gaussian_profile(r_max=14.0, n=420):
    grid = build_grid(r_max, n, "uniform")
    return profile_from_function(
        grid, lambda r: np.exp(-np.asarray(r) ** 2 / 2.0), tail="rapid")


def test_build_grid_small_uniform():
    grid = build_grid(1.0, 16, "uniform")
    assert grid.size == 16
    assert np.allclose(np.diff(grid.nodes), 1.0 / 15.0)
    assert grid.nodes[0] == 0.0 and grid.nodes[-1] == 1.0


def test_build_grid_graded_density():
    grid = build_grid(64.0, 4096, "graded")
    first_spacing = grid.nodes[1] - grid.nodes[0]
    uniform_spacing = 64.0 / 4095.0
    assert first_spacing < uniform_spacing / 4.0


def test_build_grid_argument_errors():
    with pytest.raises(ValueError):
        build_grid(0.0, 64)
    with pytest.raises(ValueError):
        build_grid(1.0, 8)
    with pytest.raises(ValueError):
        build_grid(1.0, 64, "cubic")


def test_panel_weights_sum_to_length():
    from dunkl_lab.quadrature import panel_rule
    grid = build_grid(2.0, 64, "graded")
    nodes, weights = panel_rule(grid.panel_edges)
    assert np.all(weights > 0.0)
    assert np.sum(weights) == pytest.approx(2.0, rel=1e-14)


@pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
def test_indicator_norm_closed_form(p):
    f = indicator_profile()
    ref = (1.0 / (2.0 * GEOM.nu + 2.0)) ** (1.0 / p)
    assert lp_norm(f, p, MU) == pytest.approx(ref, rel=1e-10)


def test_gaussian_l2_closed_form():
    f = gaussian_profile()
    assert lp_norm(f, 2.0, MU) == pytest.approx(
        oracles.gaussian_l2_norm(GEOM.nu), rel=1e-10)


def test_gaussian_lp_closed_form():
    f = gaussian_profile()
    for p in (1.0, 1.5, 3.0):
        assert lp_norm(f, p, MU) == pytest.approx(
            oracles.gaussian_lp_norm(GEOM.nu, p), rel=1e-9)


def test_zero_profile_norms():
    z = zero_profile(build_grid(4.0, 64, "uniform"))
    for p in (1.0, 2.0, np.inf):
        assert lp_norm(z, p, MU) == 0.0


def test_norm_argument_error():
    with pytest.raises(ValueError):
        lp_norm(gaussian_profile(), 0.5, MU)


def test_dilate_identity_and_support():
    f = indicator_profile()
    assert dilate(f, 1.0) is f
    half = dilate(f, 2.0)
    assert half.grid.r_max == pytest.approx(0.5)
    assert np.max(np.abs(half.eval(np.array([0.2])) - 1.0)) < 1e-12
    assert abs(half.eval(np.array([0.6]))[0]) < 1e-12
    with pytest.raises(ValueError):
        dilate(f, 0.0)


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0, np.inf])
@pytest.mark.parametrize("lam", [0.25, 0.5, 2.0, 4.0])
def test_norm_homogeneity_under_dilation(p, lam):
    f = gaussian_profile()
    d = GEOM.homogeneous_dim
    expected = lam ** (-d / p) if p != np.inf else 1.0
    ratio = lp_norm(dilate(f, lam), p, MU) / lp_norm(f, p, MU)
    assert ratio == pytest.approx(expected, rel=1e-6)


def test_distribution_indicator():
    f = indicator_profile()
    ball = 1.0 / (2.0 * GEOM.nu + 2.0)
    assert distribution_function(f, 0.5, MU) == pytest.approx(ball, rel=1e-9)
    assert distribution_function(f, 2.0, MU) == 0.0
    with pytest.raises(ValueError):
        distribution_function(f, 0.0, MU)


def test_distribution_ball_power_closed_form():
    phi = ball_power_profile(0.5)
    for s in (1.0, 3.0, 30.0):
        ref = oracles.ball_power_half_level_measure(s, GEOM.nu)
        assert distribution_function(phi, s, MU) == pytest.approx(ref, rel=1e-6)


def test_distribution_nonincreasing():
    f = gaussian_profile(8.0, 200)
    values = [distribution_function(f, s, MU)
              for s in np.geomspace(1e-3, 1.0, 12)]
    assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))


def test_layer_cake_consistency():
    # int_0^inf p s^(p-1) alpha(s) ds = ||f||_p^p, evaluated in the
    # substitution s = e^-u where the level integrand is smooth.
    from dunkl_lab.quadrature import panel_rule, refine_edges
    edges = refine_edges(np.array([0.0, 2.0, 50.0]), 0.5)
    u_nodes, u_w = panel_rule(edges)
    for f in (indicator_profile(), gaussian_profile(10.0, 320)):
        for p in (1.0, 2.0):
            s_nodes = np.exp(-u_nodes)
            alpha = np.array([distribution_function(f, float(s), MU)
                              for s in s_nodes])
            integral = float(np.sum(u_w * p * np.exp(-p * u_nodes) * alpha))
            assert integral == pytest.approx(lp_norm(f, p, MU) ** p, rel=1e-6)


def test_weak_norm_indicator():
    f = indicator_profile()
    ref = (1.0 / (2.0 * GEOM.nu + 2.0)) ** 0.5
    assert weak_norm(f, 2.0, MU) == pytest.approx(ref, rel=1e-4)
    assert weak_norm(zero_profile(f.grid), 2.0, MU) == 0.0
    with pytest.raises(ValueError):
        weak_norm(f, 1.0, MU)


def test_weak_norm_ball_half_finite():
    phi = ball_power_profile(0.5)
    value = weak_norm(phi, 2.0, MU)
    assert math.isfinite(value) and value > 0.0
    # while the strong L2 norm diverges
    assert lp_norm(phi, 2.0, MU) == np.inf


def test_sup_norm_catches_interior_peak():
    grid = build_grid(4.0, 64, "uniform")
    f = profile_from_function(
        grid, lambda r: np.exp(-((np.asarray(r) - 1.03) / 0.02) ** 2))
    assert sup_norm(f) > 0.9


def test_measure_validation():
    with pytest.raises(ValueError):
        WeightedMeasure(-0.75)
