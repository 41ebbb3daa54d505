import math

import numpy as np
import pytest

from dunkl_lab import CutoffPsi, DunklGeometry, WaveState, WeightedMeasure, \
    apply_bessel_multiplier, apply_cosine_multiplier, apply_highpass_potential, \
    apply_odd_cutoff_bessel, ball_power_profile, bessel_symbol, build_grid, \
    convolve_ball_kernel, coordinate_ball_profile, dunkl_transform_rank1, \
    gamma_complex, hankel_at, lp_norm, lp_norm_rank1, profile_from_function, \
    rank1_from_parts, wave_energy, wave_propagate, zero_profile
from dunkl_lab.hankel import RadialMultiplier, apply_radial_multiplier, \
    hankel_forward
from dunkl_lab.operators import coordinate_ball_odd_symbol, propagation_grid
from dunkl_lab.radial import grid_from_nodes

GEOM = DunklGeometry(2, 0.5)


def test_cutoff_shape():
    psi = CutoffPsi()
    rho = np.array([0.2, 1.0, 1.3, 1.7, 2.0, 5.0])
    vals = psi(rho)
    assert vals[0] == 0.0 and vals[1] == 0.0
    assert vals[-1] == 1.0 and vals[-2] == 1.0
    assert 0.0 < vals[2] < vals[3] < 1.0
    with pytest.raises(ValueError):
        CutoffPsi(2.0, 1.0)


def test_ball_kernel_values():
    phi0 = ball_power_profile(0.0)
    r = np.array([0.3, 0.9])
    assert np.max(np.abs(phi0.eval(r) - 1.0)) < 1e-14
    assert abs(phi0.eval(np.array([1.2]))[0]) == 0.0
    with pytest.raises(ValueError):
        ball_power_profile(1.2)


def test_ball_kernel_imaginary_modulus():
    y = 2.0
    phi = ball_power_profile(complex(0.0, y))
    bound = 1.0 / abs(gamma_complex(complex(1.0, -y)))
    r = np.linspace(0.0, 0.999, 50)
    assert np.max(np.abs(phi.eval(r))) <= bound * (1.0 + 1e-12)


def test_bessel_symbol_closed_forms():
    geom = DunklGeometry(3, 0.0)
    rho = np.linspace(0.2, 12.0, 60)
    sin_sym = bessel_symbol(geom.nu + 0.5, geom)(rho)
    ref = math.sqrt(2.0 / math.pi) * np.sin(rho) / rho
    assert np.max(np.abs(sin_sym - ref)) < 1e-12
    cos_sym = bessel_symbol(geom.nu + 1.5, geom)(rho)
    ref = math.sqrt(2.0 / math.pi) * np.cos(rho)
    assert np.max(np.abs(cos_sym - ref)) < 1e-12


def test_bessel_symbol_origin_value():
    m = bessel_symbol(0.0, GEOM)
    ref = 2.0 ** (-GEOM.gamma - GEOM.n / 2.0) \
        / math.gamma(GEOM.gamma + GEOM.n / 2.0 + 1.0)
    assert m.origin == pytest.approx(ref, rel=1e-13)


def test_family_window_errors(unit_grid, gaussian):
    from dunkl_lab.geometry import alpha_max
    with pytest.raises(ValueError):
        apply_bessel_multiplier(alpha_max(GEOM) + 0.3, gaussian, GEOM)
    with pytest.raises(ValueError):
        convolve_ball_kernel(1.0, gaussian, GEOM)
    with pytest.raises(ValueError):
        convolve_ball_kernel(-0.1, gaussian, GEOM)


def test_quasi_eigenfunction_ratio():
    # transform-side bump at rho0: the multiplier acts like the scalar
    # m(rho0) on it, up to second order in the bump width.  The spatial
    # carrier must cover the inverse scale 1/width.
    geom = DunklGeometry(3, 0.0)
    mu = WeightedMeasure.for_geometry(geom)
    rho0, width = 2.4, 0.2
    fine = build_grid(6.0, 300, "uniform")
    bump = profile_from_function(
        fine,
        lambda r: np.exp(-((np.asarray(r) - rho0) / width) ** 2 / 2.0),
        tail="rapid")
    f = hankel_forward(bump, geom, out_grid=build_grid(24.0, 720, "uniform"))
    alpha = 1.0
    sf = apply_bessel_multiplier(alpha, f, geom)
    ratio = lp_norm(sf, 2.0, mu) / lp_norm(f, 2.0, mu)
    m_val = abs(bessel_symbol(alpha, geom)(np.array([rho0]))[0])
    assert ratio == pytest.approx(m_val, rel=0.05)


def test_top_order_equals_cosine_scalar(unit_grid, gaussian):
    # at the top of the window the symbol is sqrt(2/pi) cos(rho)
    geom = DunklGeometry(3, 0.0)
    top = geom.nu + 1.5
    lhs = apply_bessel_multiplier(top, gaussian, geom)
    cos_m = RadialMultiplier(symbol=lambda rho: np.cos(rho), origin=1.0,
                             osc_scale=1.0)
    rhs = apply_radial_multiplier(gaussian, cos_m, geom)
    diff = lhs.values - math.sqrt(2.0 / math.pi) * rhs.values
    assert np.max(np.abs(diff)) < 1e-10


def test_family_agreement_strip(unit_grid, gaussian):
    mu = WeightedMeasure.for_geometry(GEOM)
    base = lp_norm(gaussian, 2.0, mu)
    for z in (0.0, 0.3, 0.6 + 2j):
        a = convolve_ball_kernel(z, gaussian, GEOM)
        b = apply_bessel_multiplier(z, gaussian, GEOM)
        from dunkl_lab import profile_from_samples
        diff = profile_from_samples(unit_grid, a.values - b.values)
        assert lp_norm(diff, 2.0, mu) / base < 1e-5


def test_ball_convolution_lp_bound(unit_grid, gaussian):
    mu = WeightedMeasure.for_geometry(GEOM)
    phi = ball_power_profile(0.3)
    norm_phi = lp_norm(phi, 1.0, mu)
    out = convolve_ball_kernel(0.3, gaussian, GEOM)
    for p in (1.5, 2.0):
        assert lp_norm(out, p, mu) <= norm_phi * lp_norm(gaussian, p, mu) \
            * (1.0 + 1e-3)


def test_wave_time_zero_returns_position(unit_grid, gaussian):
    state = WaveState(velocity=zero_profile(unit_grid), position=gaussian,
                      t=0.0, geom=GEOM)
    u = wave_propagate(state, out_grid=unit_grid)
    assert np.max(np.abs(u.values - gaussian.values)) < 1e-10


def test_wave_initial_velocity_by_finite_difference(unit_grid, gaussian):
    dt = 1e-4
    state_p = WaveState(velocity=gaussian, position=zero_profile(unit_grid),
                        t=dt, geom=GEOM)
    state_m = WaveState(velocity=gaussian, position=zero_profile(unit_grid),
                        t=-dt, geom=GEOM)
    up = wave_propagate(state_p, out_grid=unit_grid)
    um = wave_propagate(state_m, out_grid=unit_grid)
    dudt = (up.values - um.values) / (2.0 * dt)
    assert np.max(np.abs(dudt - gaussian.values)) < 1e-7


def test_wave_small_time_linear_in_t(unit_grid, gaussian):
    t = 1e-3
    state = WaveState(velocity=gaussian, position=zero_profile(unit_grid),
                      t=t, geom=GEOM)
    u = wave_propagate(state, out_grid=unit_grid)
    assert np.max(np.abs(u.values)) < 1.5 * t


def test_energy_conservation_spot(unit_grid, gaussian):
    e0 = wave_energy(WaveState(velocity=gaussian,
                               position=zero_profile(unit_grid),
                               t=0.0, geom=GEOM))
    e1 = wave_energy(WaveState(velocity=gaussian,
                               position=zero_profile(unit_grid),
                               t=5.0, geom=GEOM))
    assert e1 == pytest.approx(e0, rel=1e-12)


def test_propagation_envelope_error():
    from dunkl_lab.errors import ResolutionError
    grid = build_grid(12.0, 360, "uniform")
    with pytest.raises(ResolutionError):
        propagation_grid(grid, 1e6)


def test_cosine_parts_additivity(unit_grid, gaussian):
    geom = DunklGeometry(3, 0.0)
    full = apply_cosine_multiplier(gaussian, "full", geom)
    low = apply_cosine_multiplier(gaussian, "low", geom)
    high = apply_cosine_multiplier(gaussian, "high", geom)
    resid = full.values - low.values - high.values
    assert np.max(np.abs(resid)) < 1e-12 * np.max(np.abs(full.values))
    with pytest.raises(ValueError):
        apply_cosine_multiplier(gaussian, "middle", geom)


def test_cosine_multiplier_kills_quarter_wave():
    # transform-side bump at pi/2: cos(rho)/rho vanishes there, so the
    # ratio collapses to the first-order width term |m'(rho0)| * width
    geom = DunklGeometry(3, 0.0)
    mu = WeightedMeasure.for_geometry(geom)
    rho0, width = math.pi / 2.0, 0.2
    fine = build_grid(6.0, 300, "uniform")
    bump = profile_from_function(
        fine, lambda r: np.exp(-((np.asarray(r) - rho0) / width) ** 2 / 2.0))
    f = hankel_forward(bump, geom, out_grid=build_grid(24.0, 720, "uniform"))
    out = apply_cosine_multiplier(f, "full", geom)
    ratio = lp_norm(out, 2.0, mu) / lp_norm(f, 2.0, mu)
    first_order = width * (2.0 / math.pi)  # |d/drho cos(rho)/rho| at pi/2
    assert ratio < 2.0 * first_order


def test_highpass_potential_transform_side_support(unit_grid, gaussian):
    # the symbol vanishes identically below the cutoff; the re-computed
    # transform of the (grid-truncated) output sees only the slowly
    # decaying spatial tail of the smooth-cutoff kernel
    from dunkl_lab.operators import highpass_potential_multiplier
    low_rho = np.linspace(0.05, 0.95, 19)
    assert np.max(np.abs(highpass_potential_multiplier()(low_rho))) == 0.0
    geom = DunklGeometry(1, 1.0)
    out = apply_highpass_potential(gaussian, geom)
    vals = hankel_at(out, geom, low_rho)
    assert np.max(np.abs(vals)) < 2e-2


def test_highpass_potential_linearity(unit_grid, gaussian):
    geom = DunklGeometry(1, 1.0)
    doubled = profile_from_function(
        unit_grid, lambda r: 2.0 * np.exp(-np.asarray(r) ** 2 / 2.0))
    a = apply_highpass_potential(doubled, geom)
    b = apply_highpass_potential(gaussian, geom)
    assert np.max(np.abs(a.values - 2.0 * b.values)) < 1e-12


def test_odd_cutoff_family_parity(unit_grid, gaussian):
    k = 1.0
    f = rank1_from_parts(gaussian, None, k)
    out = apply_odd_cutoff_bessel(0.5, f)
    assert np.max(np.abs(out.even.values)) < 1e-10 * \
        max(np.max(np.abs(out.odd.values)), 1e-300)
    with pytest.raises(ValueError):
        apply_odd_cutoff_bessel(k + 1.5, f)


def test_odd_cutoff_symbol_vanishes_below_cutoff(unit_grid, gaussian):
    from dunkl_lab.operators import odd_cutoff_bessel_factor
    q = odd_cutoff_bessel_factor(0.5, 1.0)
    rho = np.linspace(0.05, 1.0, 20)
    assert np.max(np.abs(q(rho))) == 0.0


def test_odd_cutoff_l2_growth_subexponential(unit_grid, gaussian):
    # || U_{k+1+iy} f ||_2 <= c e^{c|y|} || f ||_2: record the slope
    k = 1.0
    f = rank1_from_parts(gaussian, None, k)
    base = lp_norm_rank1(f, 2.0)
    ys = np.array([0.0, 2.0, 4.0, 6.0])
    ratios = []
    for y in ys:
        out = apply_odd_cutoff_bessel(complex(k + 1.0, y), f)
        ratios.append(lp_norm_rank1(out, 2.0) / base)
    assert all(math.isfinite(r) and r > 0 for r in ratios)
    # sub-exponential: log-ratios are (nearly) linear in y, i.e. the
    # growth is e^(c y) with a finite fitted c (no super-exponential term)
    coeffs = np.polyfit(ys, np.log(ratios), 1)
    fit = np.polyval(coeffs, ys)
    assert np.max(np.abs(fit - np.log(ratios))) < 0.5
    assert coeffs[0] < 2.5


def test_coordinate_ball_profile_shape():
    psi_fn = coordinate_ball_profile(2.0, 1.0)
    assert abs(psi_fn.eval(np.array([0.0]))[0]) == 0.0
    # odd symmetry
    x = np.array([0.4])
    assert psi_fn.eval(-x)[0] == pytest.approx(-psi_fn.eval(x)[0], rel=1e-12)


def test_coordinate_ball_transform_closed_form():
    k, y = 1.0, 2.0
    psi_fn = coordinate_ball_profile(y, k)
    rho = np.linspace(0.1, 24.0, 160)
    ft = dunkl_transform_rank1(psi_fn, out_grid=grid_from_nodes(rho))
    ref = coordinate_ball_odd_symbol(y, k)(rho)
    scale = np.max(np.abs(ref))
    assert np.max(np.abs(ft.odd.values - ref)) < 1e-8 * scale
    assert np.max(np.abs(ft.even.values)) < 1e-12
