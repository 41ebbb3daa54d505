"""The full one-dimensional reflection-group calculus (multiplicity k).

Functions on the line split as f(x) = f_e(|x|) + x * f_o(|x|) with radial
even part and radial odd factor; the pair is carried on one radial grid.
In this setting everything is computable through two weighted radial
transforms: order k - 1/2 for the even channel and k + 1/2 for the odd
one.  The transform of f is

    (F f)_e = T_{k-1/2} f_e,      (F f)_o = -i T_{k+1/2} f_o,

so F^2 is the parity map and F^(-1) = parity o F.  The difference-
differential derivative acts by

    D f = ((1 + 2k) f_o + r f_o',  f_e'/r)   (even part, odd factor),

and its joint eigenfunction of eigenvalue i*xi, normalized to 1 at the
origin, is

    E(x, i xi) = C [ k_{k-1/2}(t) + i t k_{k+1/2}(t) ],   t = x xi,
    C = 2**(k-1/2) Gamma(k+1/2),  k_nu(t) = t**(-nu) J_nu(t),

which reduces to exp(i x xi) at k = 0.  Translation is spectral
multiplication by E(x0, i xi); the Riesz transform is the odd symbol
-i sgn(xi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
import scipy.special as _sp

from .geometry import DunklGeometry
from .hankel import _fingerprint, _forward_values, _frequency_plan, _kernel, \
    _kernel_block
from .quadrature import panel_rule, refine_edges
from .radial import RadialGrid, RadialProfile, WeightedMeasure, \
    profile_from_samples, zero_profile
from .special import scaled_bessel


def order_geometry(nu: float) -> DunklGeometry:
    """A rank-one geometry whose reduced order equals ``nu``."""
    return DunklGeometry(n=1, gamma=nu + 0.5)


@dataclass(eq=False)
class Rank1Function:
    """Even/odd decomposition f(x) = even(|x|) + x * odd(|x|)."""

    even: RadialProfile
    odd: RadialProfile
    k: float

    def __post_init__(self):
        if self.k < 0.0:
            raise ValueError(f"multiplicity k must be >= 0, got {self.k}")
        if self.even.grid is not self.odd.grid:
            if not np.array_equal(self.even.grid.nodes, self.odd.grid.nodes):
                raise ValueError("even and odd parts must share one grid")

    @property
    def grid(self) -> RadialGrid:
        return self.even.grid

    @property
    def nu_even(self) -> float:
        return self.k - 0.5

    @property
    def nu_odd(self) -> float:
        return self.k + 0.5

    def eval(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        r = np.abs(x)
        return self.even.eval(r) + x * self.odd.eval(r)


def rank1_from_parts(even: RadialProfile | None, odd: RadialProfile | None,
                     k: float, grid: RadialGrid | None = None) -> Rank1Function:
    if even is None and odd is None:
        raise ValueError("at least one part must be given")
    grid = grid or (even.grid if even is not None else odd.grid)
    return Rank1Function(even=even if even is not None else zero_profile(grid),
                         odd=odd if odd is not None else zero_profile(grid),
                         k=k)


def decompose_on_grid(grid: RadialGrid, fn: Callable[[np.ndarray], np.ndarray],
                      k: float) -> Rank1Function:
    """Exact even/odd split of a sampled function on the line."""
    r = grid.nodes
    plus = np.asarray(fn(r), dtype=complex)
    minus = np.asarray(fn(-r), dtype=complex)
    even_vals = 0.5 * (plus + minus)
    with np.errstate(divide="ignore", invalid="ignore"):
        odd_vals = np.where(r > 0.0, (plus - minus) / (2.0 * r), 0.0)
    if r[0] == 0.0 and r.size > 1:
        eps = 1e-7 * grid.r_max
        odd_vals[0] = (fn(np.array([eps]))[0] - fn(np.array([-eps]))[0]) / (2.0 * eps)
    return Rank1Function(even=profile_from_samples(grid, even_vals),
                         odd=profile_from_samples(grid, odd_vals), k=k)


def dunkl_kernel_rank1(x, xi, k: float):
    """E(x, i xi): the normalized joint eigenfunction, exp(i x xi) at k=0."""
    x = np.asarray(x, dtype=float)
    t = x * float(xi)
    c = 2.0 ** (k - 0.5) * _sp.gamma(k + 0.5)
    a = c * scaled_bessel(k - 0.5, np.abs(t))
    b = c * t * scaled_bessel(k + 0.5, np.abs(t))
    out = a + 1j * b
    return complex(out) if out.shape == () else out


def dunkl_derivative_rank1(f: Rank1Function) -> Rank1Function:
    """D f = ((1+2k) f_o + r f_o', f_e'/r) in the even/odd representation."""
    r = f.grid.nodes
    even_vals = (1.0 + 2.0 * f.k) * f.odd.eval(r) + r * f.odd.eval_d(r)
    fe_d = f.even.eval_d(r)
    with np.errstate(divide="ignore", invalid="ignore"):
        odd_vals = np.where(r > 0.0, fe_d / r, 0.0)
    if r[0] == 0.0 and r.size > 1:
        eps = 1e-7 * f.grid.r_max
        odd_vals[0] = f.even.eval_d(np.array([eps]))[0] / eps
    k = f.k

    even_prof = profile_from_samples(f.grid, even_vals, tail=f.odd.tail)
    odd_prof = profile_from_samples(f.grid, odd_vals, tail=f.even.tail)
    if f.odd.evaluator is not None and f.odd.evaluator_d is not None:
        oe, oed = f.odd.evaluator, f.odd.evaluator_d
        even_prof = RadialProfile(
            grid=f.grid, values=even_vals, tail=f.odd.tail,
            evaluator=lambda rr: (1.0 + 2.0 * k) * np.asarray(oe(rr)) +
                np.asarray(rr) * np.asarray(oed(rr)))
    if f.even.evaluator_d is not None:
        ed = f.even.evaluator_d
        odd_prof = RadialProfile(
            grid=f.grid, values=odd_vals, tail=f.even.tail,
            evaluator=lambda rr: np.asarray(ed(np.maximum(rr, 1e-12))) /
                np.maximum(np.asarray(rr, dtype=float), 1e-12))
    return Rank1Function(even=even_prof, odd=odd_prof, k=f.k)


def _spectral_apply(f: Rank1Function, coeffs, out_grid: RadialGrid | None,
                    osc: float, spectral_extent: float | None = None
                    ) -> Rank1Function:
    """Apply a 2x2 spectral mixer (A_ee, A_eo, A_oe, A_oo)(rho).

    G_e, G_o are the transform channels of f; the output channels
    H_e = A_ee G_e + A_eo G_o, H_o = A_oe G_e + A_oo G_o are inverse-
    transformed onto ``out_grid``.
    """
    out_grid = out_grid or f.grid
    nu0, nu1 = f.nu_even, f.nu_odd
    extent = spectral_extent or max(float(f.grid.r_max), float(out_grid.r_max))
    inv_freq = max(float(out_grid.r_max) + osc, 1.0)
    rho, rho_w, freq_key = _frequency_plan(f.grid, inv_freq, extent)

    g_e = _forward_values(f.even, nu0, rho, extent, rho_key=freq_key)
    g_o = -1j * _forward_values(f.odd, nu1, rho, extent, rho_key=freq_key)
    a_ee, a_eo, a_oe, a_oo = coeffs(rho)
    h_e = a_ee * g_e + a_eo * g_o
    h_o = a_oe * g_e + a_oo * g_o

    out_r = out_grid.nodes
    rho_fp = _fingerprint(rho)
    k0 = _kernel(out_grid, nu0, out_r, ("nodes",), rho, rho_fp)
    k1 = _kernel(out_grid, nu1, out_r, ("nodes",), rho, rho_fp)
    dens_e = rho_w * h_e * rho ** (2.0 * nu0 + 1.0)
    dens_o = rho_w * h_o * rho ** (2.0 * nu1 + 1.0)
    even_vals = k0 @ dens_e
    odd_vals = 1j * (k1 @ dens_o)

    # Exact re-evaluation anywhere: keeps compositions of operators free
    # of interpolation error.
    def eval_even(r, _rho=rho, _d=dens_e, _nu=nu0):
        r = np.atleast_1d(np.asarray(r, dtype=float))
        return _kernel_block(_nu, r, _rho) @ _d

    def eval_odd(r, _rho=rho, _d=dens_o, _nu=nu1):
        r = np.atleast_1d(np.asarray(r, dtype=float))
        return 1j * (_kernel_block(_nu, r, _rho) @ _d)

    even_prof = RadialProfile(grid=out_grid, values=even_vals, tail="rapid",
                              evaluator=eval_even)
    odd_prof = RadialProfile(grid=out_grid, values=odd_vals, tail="rapid",
                             evaluator=eval_odd)
    return Rank1Function(even=even_prof, odd=odd_prof, k=f.k)


def dunkl_transform_rank1(f: Rank1Function,
                          out_grid: RadialGrid | None = None) -> Rank1Function:
    """Even channel to order k-1/2, odd channel to -i times order k+1/2.

    Outputs carry exact evaluators (the same quadrature at arbitrary
    frequencies), keeping compositions interpolation-free.
    """
    out_grid = out_grid or f.grid
    rho = out_grid.nodes
    freq = max(float(rho[-1]), 1.0)
    even_vals = _forward_values(f.even, f.nu_even, rho, freq)
    odd_vals = -1j * _forward_values(f.odd, f.nu_odd, rho, freq)

    def eval_even(r, _p=f.even, _nu=f.nu_even, _freq=freq):
        return _forward_values(_p, _nu, np.atleast_1d(np.asarray(r, float)), _freq)

    def eval_odd(r, _p=f.odd, _nu=f.nu_odd, _freq=freq):
        return -1j * _forward_values(_p, _nu,
                                     np.atleast_1d(np.asarray(r, float)), _freq)
    return Rank1Function(
        even=RadialProfile(grid=out_grid, values=even_vals, tail="rapid",
                           evaluator=eval_even),
        odd=RadialProfile(grid=out_grid, values=odd_vals, tail="rapid",
                          evaluator=eval_odd),
        k=f.k)


def dunkl_inverse_rank1(f: Rank1Function,
                        out_grid: RadialGrid | None = None) -> Rank1Function:
    """Parity composed with the forward transform."""
    out = dunkl_transform_rank1(f, out_grid)
    odd_eval = None if out.odd.evaluator is None else \
        (lambda r, _e=out.odd.evaluator: -np.asarray(_e(r)))
    neg = RadialProfile(grid=out.grid, values=-out.odd.values, tail="rapid",
                        evaluator=odd_eval)
    return Rank1Function(even=out.even, odd=neg, k=f.k)


def apply_even_multiplier(f: Rank1Function, symbol, out_grid=None,
                          osc: float = 0.0,
                          spectral_extent: float | None = None) -> Rank1Function:
    """Radial symbol m(|xi|): multiplies both channels."""
    def coeffs(rho):
        m = np.asarray(symbol(rho), dtype=complex)
        zero = np.zeros_like(m)
        return m, zero, zero, m
    return _spectral_apply(f, coeffs, out_grid, osc, spectral_extent)


def apply_odd_multiplier(f: Rank1Function, odd_factor, out_grid=None,
                         osc: float = 0.0,
                         spectral_extent: float | None = None) -> Rank1Function:
    """Odd symbol xi * q(|xi|): swaps parity channels."""
    def coeffs(rho):
        q = np.asarray(odd_factor(rho), dtype=complex)
        zero = np.zeros_like(q)
        return zero, rho * rho * q, q, zero
    return _spectral_apply(f, coeffs, out_grid, osc, spectral_extent)


def dunkl_translate_rank1(f: Rank1Function, x0: float,
                          out_grid: RadialGrid | None = None,
                          spectral_extent: float | None = None) -> Rank1Function:
    """Spectral translation: multiply the transform by E(x0, i xi).

    At k = 0 this is the ordinary shift y -> f(y + x0).
    """
    k = f.k
    c = 2.0 ** (k - 0.5) * _sp.gamma(k + 0.5)
    ax = abs(x0)

    def coeffs(rho):
        a = c * scaled_bessel(k - 0.5, ax * rho).astype(complex)
        b = 1j * c * x0 * scaled_bessel(k + 0.5, ax * rho).astype(complex)
        return a, rho * rho * b, b, a
    return _spectral_apply(f, coeffs, out_grid, osc=ax,
                           spectral_extent=spectral_extent)


def riesz_rank1(f: Rank1Function, out_grid=None) -> Rank1Function:
    """The -i sgn(xi) multiplier; squares to minus the identity."""
    def odd_factor(rho):
        return -1j / rho
    return apply_odd_multiplier(f, odd_factor, out_grid)


def lp_norm_rank1(f: Rank1Function, p: float) -> float:
    """Lebesgue norm against |x|^(2k) dx over the whole line."""
    if p != np.inf and p < 1.0:
        raise ValueError(f"exponent p must be >= 1 or inf, got {p}")
    grid = f.grid
    width = grid.r_max / max(96.0, grid.panel_edges.size - 1.0)
    edges = refine_edges(grid.panel_edges, width)
    nodes, weights = panel_rule(edges)
    fe = f.even.eval(nodes)
    fo = nodes * f.odd.eval(nodes)
    plus = np.abs(fe + fo)
    minus = np.abs(fe - fo)
    if p == np.inf:
        edge_val = np.abs(f.even.values) + grid.nodes * np.abs(f.odd.values)
        return float(max(np.max(plus), np.max(minus), np.max(edge_val)))
    w = weights * nodes ** (2.0 * f.k)
    return float(np.sum(w * (plus ** p + minus ** p))) ** (1.0 / p)


def transform_l1_norm(f: Rank1Function) -> float:
    """L1 norm (weighted) of the transform of f."""
    return lp_norm_rank1(dunkl_transform_rank1(f), 1.0)


def wave_propagate_rank1(velocity: Rank1Function, position: Rank1Function,
                         t: float, out_grid: RadialGrid | None = None,
                         spectral_extent: float | None = None
                         ) -> Rank1Function:
    """Solution at time t with initial position g and initial velocity f:
    inverse transform of sin(t rho)/rho * F f + cos(t rho) * F g."""
    if velocity.k != position.k:
        raise ValueError("velocity and position must share the multiplicity")
    combined_grid = out_grid or velocity.grid

    def coeffs_f(rho):
        m = t * np.sinc(t * rho / np.pi).astype(complex)
        zero = np.zeros_like(m)
        return m, zero, zero, m

    def coeffs_g(rho):
        m = np.cos(t * rho).astype(complex)
        zero = np.zeros_like(m)
        return m, zero, zero, m

    uf = _spectral_apply(velocity, coeffs_f, combined_grid, osc=abs(t),
                         spectral_extent=spectral_extent)
    ug = _spectral_apply(position, coeffs_g, combined_grid, osc=abs(t),
                         spectral_extent=spectral_extent)
    return Rank1Function(
        even=profile_from_samples(combined_grid, uf.even.values + ug.even.values,
                                  tail="rapid"),
        odd=profile_from_samples(combined_grid, uf.odd.values + ug.odd.values,
                                 tail="rapid"),
        k=velocity.k)
