"""The multiplier-operator family and the spectral wave propagator.

Symbols are built from the entire function k_mu(t) = t**(-mu) J_mu(t):

* truncated power kernel on the unit ball,
  Phi_z(r) = 2**z / Gamma(1-z) * (1 - r^2)**(-z) for r <= 1 (Re z < 1),
  whose radial transform is exactly k_{nu+1-z}(rho);
* the analytic family S_z = multiplier k_{nu+1-z}(rho), whose convolution
  realization for 0 <= Re z < 1 is f -> Phi_z * f;
* the wave propagator u(t) = inverse transform of
  sin(t rho)/rho * F f + cos(t rho) * F g,
  with the closed-form identities  k_{1/2}(t) = sqrt(2/pi) sin(t)/t  and
  k_{-1/2}(t) = sqrt(2/pi) cos(t)  tying S_{nu+1/2} and S_{nu+3/2} to the
  two halves of the propagator under conjugation by dilations;
* a smooth radial cutoff psi (0 below a, 1 above b) for the high-pass
  potential psi(rho)/rho and the cosine-wave multiplier pieces;
* the odd high-frequency family U_z with symbol
  psi(rho) * xi * rho**(z - k - 5/2) J_{k - 1/2 - z}(rho) in rank one,
  and the coordinate-weighted ball kernel x * Phi_{iy} whose transform is
  the closed-form odd symbol -i k_{k + 3/2 - iy}(rho).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ResolutionError
from .geometry import DunklGeometry, alpha_max
from .hankel import RadialMultiplier, _forward_values, _frequency_plan, \
    _kernel_block, apply_radial_multiplier, auto_spectral_extent, hankel_at, \
    radial_convolve
from .radial import EndpointPower, RadialGrid, RadialProfile, build_grid, \
    profile_from_function, profile_from_samples, zero_profile
from .rank1 import Rank1Function, apply_even_multiplier, apply_odd_multiplier, \
    rank1_from_parts
from .special import gamma_complex, scaled_bessel

EXP_TOL = 1e-12


@dataclass(frozen=True)
class CutoffPsi:
    """Smooth radial cutoff: 0 for rho <= a, 1 for rho >= b, monotone
    in between (bump-quotient construction, infinitely smooth)."""

    a: float = 1.0
    b: float = 2.0

    def __post_init__(self):
        if not (0.0 < self.a < self.b):
            raise ValueError("cutoff needs 0 < a < b")

    def __call__(self, rho) -> np.ndarray:
        rho = np.asarray(rho, dtype=float)
        u = (rho - self.a) / (self.b - self.a)
        with np.errstate(over="ignore", divide="ignore"):
            hu = np.where(u > 0.0, np.exp(-1.0 / np.maximum(u, 1e-300)), 0.0)
            hv = np.where(u < 1.0, np.exp(-1.0 / np.maximum(1.0 - u, 1e-300)), 0.0)
        return hu / (hu + hv)


def ball_power_profile(z: complex, grid: RadialGrid | None = None,
                       n_nodes: int = 257) -> RadialProfile:
    """The kernel 2**z/Gamma(1-z) * (1-r^2)**(-z) on the unit ball.

    Carried with its analytic evaluator and an endpoint-power record at
    r = 1 so quadratures stay spectrally accurate for any Re z < 1,
    including purely imaginary z (log-oscillatory endpoint).
    """
    z = complex(z)
    if z.real >= 1.0:
        raise ValueError(f"the ball power kernel needs Re z < 1, got {z.real}")
    coef = 2.0 ** z / gamma_complex(1.0 - z)
    grid = grid or build_grid(1.0, n_nodes, "uniform")
    if abs(grid.r_max - 1.0) > 1e-12:
        raise ValueError("the ball power kernel lives on a grid with r_max = 1")

    def evaluator(r, _c=coef, _z=z):
        r = np.asarray(r, dtype=float)
        inside = r < 1.0
        safe = np.where(inside, r, 0.0)
        vals = _c * np.exp(-_z * np.log1p(-safe * safe))
        return np.where(inside, vals, 0.0)

    singularity = None
    if z != 0.0:
        singularity = EndpointPower(
            location=1.0, exponent=z,
            regular=lambda s, _c=coef, _z=z: _c * np.exp(-_z * np.log1p(np.asarray(s))))
    return profile_from_function(grid, evaluator, tail="compact",
                                 singularity=singularity)


def bessel_symbol(z: complex, geom: DunklGeometry) -> RadialMultiplier:
    """The symbol k_{nu+1-z}(rho) = rho**(z-nu-1) J_{nu+1-z}(rho).

    This is the radial transform of the ball power kernel; its value at
    the origin is 2**(z-nu-1)/Gamma(nu+2-z).
    """
    z = complex(z)
    mu = geom.nu + 1.0 - z
    if mu.real < -1.5 - EXP_TOL:
        raise ValueError(f"Bessel symbol order Re(nu+1-z) = {mu.real} below -3/2")
    origin = complex(2.0 ** (-mu) / gamma_complex(mu + 1.0)) if mu.real > -1.0 \
        else complex(scaled_bessel(mu, 0.0))

    def symbol(rho, _mu=mu):
        return scaled_bessel(_mu, rho)
    return RadialMultiplier(symbol=symbol, origin=origin, osc_scale=1.0,
                            support_note="ball power kernel transform")


def apply_bessel_multiplier(z: complex, f: RadialProfile, geom: DunklGeometry,
                            out_grid: RadialGrid | None = None) -> RadialProfile:
    """The analytic multiplier family at parameter z (0 <= Re z <= alpha_max)."""
    z = complex(z)
    if not (-EXP_TOL <= z.real <= alpha_max(geom) + EXP_TOL):
        raise ValueError(f"Re z = {z.real} outside the family window "
                         f"[0, {alpha_max(geom)}]")
    return apply_radial_multiplier(f, bessel_symbol(z, geom), geom, out_grid)


def convolve_ball_kernel(z: complex, f: RadialProfile, geom: DunklGeometry,
                         out_grid: RadialGrid | None = None) -> RadialProfile:
    """Convolution realization of the family on the strip 0 <= Re z < 1."""
    z = complex(z)
    if not (-EXP_TOL <= z.real < 1.0):
        raise ValueError(f"the convolution realization needs 0 <= Re z < 1, "
                         f"got Re z = {z.real}")
    return radial_convolve(f, ball_power_profile(z), geom, out_grid=out_grid)


@dataclass(frozen=True)
class WaveState:
    """Initial velocity f, initial position g, time t, geometry."""

    velocity: RadialProfile
    position: RadialProfile
    t: float
    geom: DunklGeometry

    def __post_init__(self):
        if not math.isfinite(self.t):
            raise ValueError("time must be finite")
        if not np.array_equal(self.velocity.grid.nodes, self.position.grid.nodes):
            raise ValueError("velocity and position must share one grid")


def propagation_grid(data_grid: RadialGrid, t: float, pad: float = 2.0,
                     max_nodes: int = 20000) -> RadialGrid:
    """Output grid covering the light cone of the data support."""
    r_out = data_grid.r_max + abs(t) + pad
    per_unit = (data_grid.size - 1) / data_grid.r_max
    n_out = int(min(max(256, math.ceil(r_out * per_unit) + 1), max_nodes))
    if n_out == max_nodes and r_out * per_unit > max_nodes * 4:
        raise ResolutionError(
            f"propagation to t = {t} needs more than {max_nodes} output nodes "
            "at the data grid's resolution")
    return build_grid(r_out, n_out, "uniform")


def _wave_symbols(t: float, rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    sin_part = t * np.sinc(t * rho / np.pi)
    cos_part = np.cos(t * rho)
    return sin_part, cos_part


def wave_propagate(state: WaveState, out_grid: RadialGrid | None = None,
                   spectral_extent: float | None = None) -> RadialProfile:
    """u(., t): inverse transform of sin(t rho)/rho F f + cos(t rho) F g.

    At t = 0 this returns the initial position g exactly.  The frequency
    domain is auto-extended until the data transforms are resolved, so
    compactly supported data (whose transforms decay slowly) is handled
    correctly; pass ``spectral_extent`` to pin it.
    """
    geom, t = state.geom, state.t
    nu = geom.nu
    f, g = state.velocity, state.position
    out_grid = out_grid or propagation_grid(f.grid, t)
    extent = spectral_extent or auto_spectral_extent(
        (f, g), nu, max(float(f.grid.r_max), float(out_grid.r_max)))
    inv_freq = max(float(out_grid.r_max) + abs(t), 1.0)
    rho, rho_w, freq_key = _frequency_plan(f.grid, inv_freq, extent)
    h = np.zeros(rho.size, dtype=complex)
    sin_part, cos_part = _wave_symbols(t, rho)
    if np.any(f.values) or f.evaluator is not None:
        h += sin_part * _forward_values(f, nu, rho, extent, rho_key=freq_key)
    if np.any(g.values) or g.evaluator is not None:
        h += cos_part * _forward_values(g, nu, rho, extent, rho_key=freq_key)
    density = rho_w * h * rho ** (2.0 * nu + 1.0)
    kernel = _kernel_block(nu, out_grid.nodes, rho)
    return profile_from_samples(out_grid, kernel @ density, tail="rapid")


def wave_transform_channels(state: WaveState,
                            spectral_extent: float | None = None
                            ) -> tuple[np.ndarray, np.ndarray,
                                       np.ndarray, np.ndarray]:
    """(rho, weights, F u(t), F du/dt(t)) on the quadrature frequencies.

    The time derivative is formed spectrally (cos(t rho) F f
    - rho sin(t rho) F g), never by time differencing.
    """
    geom, t = state.geom, state.t
    nu = geom.nu
    f, g = state.velocity, state.position
    extent = spectral_extent or auto_spectral_extent(
        (f, g), nu, float(f.grid.r_max))
    rho, rho_w, freq_key = _frequency_plan(f.grid, max(abs(t), 1.0), extent)
    ff = _forward_values(f, nu, rho, extent, rho_key=freq_key)
    fg = _forward_values(g, nu, rho, extent, rho_key=freq_key)
    sin_part, cos_part = _wave_symbols(t, rho)
    fu = sin_part * ff + cos_part * fg
    fut = cos_part * ff - rho * np.sin(t * rho) * fg
    return rho, rho_w, fu, fut


def wave_energy(state: WaveState,
                spectral_extent: float | None = None) -> float:
    """E(t) = || rho F u ||_2^2 + || F du/dt ||_2^2 (constant in t)."""
    rho, w, fu, fut = wave_transform_channels(state, spectral_extent)
    dens = rho ** (2.0 * state.geom.nu + 1.0)
    return float(np.sum(w * dens * (rho * rho * np.abs(fu) ** 2
                                    + np.abs(fut) ** 2)))


def wave_propagate_dilated(z_order: float, t: float, f: RadialProfile,
                           geom: DunklGeometry,
                           out_grid: RadialGrid | None = None) -> RadialProfile:
    """sqrt(pi/2) * dilate(1/t) o S_{z_order} o dilate(t) applied to f.

    Under conjugation by dilations the multiplier symbol becomes
    k_{nu+1-z}(t rho); with z = nu + 1/2 this is sin(t rho)/(t rho) and
    with z = nu + 3/2 it is cos(t rho), which recombine to the propagator.
    """
    if t <= 0.0:
        raise ValueError("the dilation cross-check needs t > 0")
    mu = geom.nu + 1.0 - z_order

    def symbol(rho, _mu=mu, _t=t):
        return math.sqrt(math.pi / 2.0) * scaled_bessel(_mu, _t * rho)
    m = RadialMultiplier(symbol=symbol, origin=None, osc_scale=abs(t))
    return apply_radial_multiplier(f, m, geom, out_grid)


def cosine_multiplier(part: str, psi: CutoffPsi | None = None) -> RadialMultiplier:
    """cos(rho)/rho weighted by {1, 1-psi, psi} for part in
    {full, low, high}; full = low + high exactly."""
    psi = psi or CutoffPsi()
    if part not in ("full", "low", "high"):
        raise ValueError(f"unknown part {part!r}")

    def symbol(rho, _part=part, _psi=psi):
        rho = np.asarray(rho, dtype=float)
        base = np.cos(rho) / rho
        if _part == "low":
            return (1.0 - _psi(rho)) * base
        if _part == "high":
            return _psi(rho) * base
        return base
    return RadialMultiplier(symbol=symbol, origin=None, osc_scale=1.0,
                            support_note=f"cos(rho)/rho ({part})")


def apply_cosine_multiplier(f: RadialProfile, part: str, geom: DunklGeometry,
                            psi: CutoffPsi | None = None,
                            out_grid: RadialGrid | None = None) -> RadialProfile:
    return apply_radial_multiplier(f, cosine_multiplier(part, psi), geom, out_grid)


def highpass_potential_multiplier(psi: CutoffPsi | None = None) -> RadialMultiplier:
    """psi(rho)/rho: the high-frequency order-one smoothing symbol."""
    psi = psi or CutoffPsi()

    def symbol(rho, _psi=psi):
        rho = np.asarray(rho, dtype=float)
        return np.where(rho > _psi.a, _psi(rho) / np.maximum(rho, _psi.a), 0.0)
    return RadialMultiplier(symbol=symbol, origin=0.0,
                            support_note="high-pass 1/rho")


def apply_highpass_potential(f: RadialProfile, geom: DunklGeometry,
                             psi: CutoffPsi | None = None,
                             out_grid: RadialGrid | None = None) -> RadialProfile:
    return apply_radial_multiplier(f, highpass_potential_multiplier(psi),
                                   geom, out_grid)


def odd_cutoff_bessel_factor(z: complex, k: float,
                             psi: CutoffPsi | None = None):
    """Odd-symbol factor q with symbol xi * q(|xi|) of the high-frequency
    analytic family: q(rho) = psi(rho) rho**(-2) k_{k-1/2-z}(rho)."""
    z = complex(z)
    psi = psi or CutoffPsi()
    mu = k - 0.5 - z
    if mu.real < -1.5 - EXP_TOL:
        raise ValueError(f"odd family order Re = {mu.real} below -3/2; "
                         f"Re z must stay within [0, {k + 1.0}]")

    def q(rho, _mu=mu, _psi=psi):
        rho = np.asarray(rho, dtype=float)
        out = np.zeros(rho.shape, dtype=complex)
        live = rho > _psi.a
        if np.any(live):
            rr = rho[live]
            out[live] = _psi(rr) * rr ** (-2.0) * scaled_bessel(_mu, rr)
        return out
    return q


def apply_odd_cutoff_bessel(z: complex, f: Rank1Function,
                            psi: CutoffPsi | None = None,
                            out_grid: RadialGrid | None = None) -> Rank1Function:
    """The odd high-frequency multiplier family on rank-one functions.

    The symbol is odd in xi, so parity flips: even input gives odd output.
    """
    z = complex(z)
    if not (-EXP_TOL <= z.real <= f.k + 1.0 + EXP_TOL):
        raise ValueError(f"Re z = {z.real} outside the family window [0, {f.k + 1.0}]")
    return apply_odd_multiplier(f, odd_cutoff_bessel_factor(z, f.k, psi),
                                out_grid, osc=1.0)


def coordinate_ball_profile(y: float, k: float,
                            grid: RadialGrid | None = None) -> Rank1Function:
    """x * Phi_{iy}(x) as a rank-one function (odd; zero at the origin).

    Its transform is the closed-form odd symbol
    -i xi rho**(iy - k - 5/2) J_{k + 3/2 - iy}(rho), i.e. odd factor
    -i k_{k+3/2-iy}(rho).
    """
    phi = ball_power_profile(complex(0.0, y), grid=grid)
    return rank1_from_parts(None, phi, k)


def coordinate_ball_odd_symbol(y: float, k: float):
    """The closed-form odd transform factor of x * Phi_{iy}."""
    mu = complex(k + 1.5, -y)

    def q(rho, _mu=mu):
        return -1j * scaled_bessel(_mu, np.asarray(rho, dtype=float))
    return q
