"""The self-reciprocal weighted radial transform and multiplier calculus.

For reduced order nu the transform of a radial profile is

    (T f)(rho) = int_0^infty f(s) * k_nu(s * rho) * s^(2 nu + 1) ds,
    k_nu(t) = t^(-nu) J_nu(t),

which is an L^2(r^(2 nu + 1) dr) isometry equal to its own inverse; the
Gaussian exp(-r^2/2) is a fixed point.  Both facts are enforced by the
verification suite, which pins the normalization.

Quadrature: panelized Gauss-Legendre over the profile's support with
panels no wider than half an oscillation period of the kernel at the
largest requested frequency (plus any declared symbol oscillation), and
the exact moment rule on the final panel of profiles carrying an
algebraic endpoint factor.  Exceeding the node budget raises
``ResolutionError`` instead of returning an under-resolved result.

Multiplier application is a double quadrature: the forward transform is
evaluated directly at the frequency nodes of the inverse integral, so no
intermediate interpolation enters.  The frequency domain [0, extent] is
independent of the data support; compactly supported data has slowly
decaying transforms, and ``auto_spectral_extent`` grows the domain until
the sampled transform tail is negligible.  Kernel matrices are cached per
(grid, order, resolution) while they stay small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import ResolutionError
from .geometry import DunklGeometry
from .quadrature import MAX_QUAD_NODES, gauss_legendre, panel_rule, \
    refine_edges, power_moments
from .radial import RadialGrid, RadialProfile, profile_from_samples
from .special import scaled_bessel

_KERNEL_CACHE_LIMIT = 30_000_000  # entries; ~240 MB of float64
_EXTENT_CAP = 2048.0


@dataclass
class RadialMultiplier:
    """A scalar symbol rho -> m(rho) acting on the transform side.

    ``origin`` is the declared finite limit at rho = 0, or ``None`` for an
    integrable singularity.  ``osc_scale`` is the phase slope of the
    symbol (e.g. |t| for exp(i t rho)): quadrature panels resolve it.
    """

    symbol: Callable[[np.ndarray], np.ndarray]
    origin: Optional[complex] = None
    osc_scale: float = 0.0
    support_note: str = ""

    def __call__(self, rho: np.ndarray) -> np.ndarray:
        return np.asarray(self.symbol(np.asarray(rho, dtype=float)), dtype=complex)


def _kernel_block(nu: float, rows: np.ndarray, cols: np.ndarray,
                  block: int = 512) -> np.ndarray:
    """Matrix k_nu(rows_i * cols_j), evaluated in row blocks."""
    out = np.empty((rows.size, cols.size))
    for start in range(0, rows.size, block):
        stop = min(start + block, rows.size)
        out[start:stop] = scaled_bessel(nu, np.outer(rows[start:stop], cols))
    return out


def _grid_cache(grid: RadialGrid) -> dict:
    cache = getattr(grid, "_quad_cache", None)
    if cache is None:
        cache = {}
        object.__setattr__(grid, "_quad_cache", cache)
    return cache


def _support_edges(grid: RadialGrid, freq: float,
                   extra_break: float | None = None) -> tuple[np.ndarray, tuple]:
    """Refined panel edges over the profile support [0, r_max]."""
    width = np.pi / max(freq, 1.0 / grid.r_max)
    key = ("support", round(width, 14), extra_break)
    cache = _grid_cache(grid)
    if key not in cache:
        edges = grid.panel_edges
        if extra_break is not None and edges[0] < extra_break < edges[-1]:
            edges = np.unique(np.concatenate([edges, [extra_break]]))
        cache[key] = refine_edges(edges, width, MAX_QUAD_NODES)
    return cache[key], key


def _frequency_plan(grid: RadialGrid, freq: float, extent: float
                    ) -> tuple[np.ndarray, np.ndarray, tuple]:
    """Nodes/weights of the transform-side quadrature on [0, extent]."""
    width = np.pi / max(freq, 1.0 / grid.r_max)
    key = ("freq", round(width, 14), round(extent, 12))
    cache = _grid_cache(grid)
    if key not in cache:
        edges = grid.panel_edges
        if extent > grid.r_max * (1.0 + 1e-12):
            step = max(grid.r_max / max(grid.panel_edges.size - 1, 1), width)
            n_ext = int(math.ceil((extent - grid.r_max) / step))
            ext = np.linspace(grid.r_max, extent, n_ext + 1)[1:]
            edges = np.concatenate([edges, ext])
        edges = refine_edges(edges, width, MAX_QUAD_NODES)
        cache[key] = panel_rule(edges)
    nodes, weights = cache[key]
    return nodes, weights, key


def _fingerprint(arr: np.ndarray) -> tuple:
    """Content key for a quadrature node set (size + endpoints)."""
    return ("fp", arr.size, round(float(arr[0]), 12), round(float(arr[-1]), 12))


def _kernel(grid: RadialGrid, nu: float, rows: np.ndarray, rows_key,
            cols: np.ndarray, cols_key) -> np.ndarray:
    key = ("kernel", round(float(nu), 12), rows_key, cols_key,
           rows.size, cols.size)
    cache = _grid_cache(grid)
    if key in cache:
        return cache[key]
    mat = _kernel_block(nu, rows, cols)
    if mat.size <= _KERNEL_CACHE_LIMIT:
        cache[key] = mat
    return mat


def _forward_values(f: RadialProfile, nu: float, rho: np.ndarray,
                    freq: float, rho_key=None) -> np.ndarray:
    """Transform values of f at the frequencies ``rho``.

    ``rho_key``, when given, makes the kernel matrix cacheable.  Profiles
    with an endpoint power vanish beyond it; the final panel [a, b] goes
    through the exact moment rule.
    """
    sing = f.singularity
    extra = float(sing.location) if sing is not None else None
    edges, edges_key = _support_edges(f.grid, freq, extra)
    if sing is not None:
        idx = int(np.searchsorted(edges, sing.location - 1e-13)) - 1
        a, b = float(edges[idx]), float(sing.location)
        s_nodes, s_weights = panel_rule(edges[:idx + 1])
    else:
        cache = _grid_cache(f.grid)
        rule_key = ("rule", edges_key)
        if rule_key not in cache:
            cache[rule_key] = panel_rule(edges)
        s_nodes, s_weights = cache[rule_key]
    fvals = f.eval(s_nodes)
    density = s_weights * fvals * s_nodes ** (2.0 * nu + 1.0)
    if rho_key is not None and sing is None:
        kernel = _kernel(f.grid, nu, rho, rho_key, s_nodes, edges_key)
    else:
        kernel = _kernel_block(nu, rho, s_nodes)
    out = kernel @ density
    if sing is not None:
        out = out + _endpoint_moment_transform(sing, nu, rho, a, b)
    return out


def _endpoint_moment_transform(sing, nu: float, rho: np.ndarray,
                               a: float, b: float) -> np.ndarray:
    """Exact-moment contribution of int_a^b (b-s)^(-z) g(s) k_nu(s rho) ds."""
    degree = 12
    x, _ = gauss_legendre(degree + 1)
    u = 0.5 * (x + 1.0)
    s = b - (b - a) * u
    g = np.asarray(sing.regular(s), dtype=complex) * s ** (2.0 * nu + 1.0)
    kern = _kernel_block(nu, rho, s)                      # (n_rho, deg+1)
    vander = np.vander(u, degree + 1, increasing=True)
    coeffs = np.linalg.solve(vander, (kern * g[None, :]).T)  # (deg+1, n_rho)
    moments = power_moments(sing.exponent, degree)
    return (b - a) ** (1.0 - sing.exponent) * (moments @ coeffs)


def hankel_forward(f: RadialProfile, geom: DunklGeometry,
                   out_grid: RadialGrid | None = None) -> RadialProfile:
    """The radial transform of ``f`` sampled on ``out_grid`` (default: the
    grid of ``f``).  Self-inverse: applying it twice returns ``f``.

    The result carries an exact evaluator (the same quadrature at
    arbitrary frequencies up to the output radius), so compositions do
    not accumulate interpolation error.
    """
    out_grid = out_grid or f.grid
    rho = out_grid.nodes
    freq = max(float(rho[-1]), 1.0)
    vals = _forward_values(f, geom.nu, rho, freq, rho_key="self")

    def evaluator(r, _f=f, _nu=geom.nu, _freq=freq):
        r = np.atleast_1d(np.asarray(r, dtype=float))
        return _forward_values(_f, _nu, r, _freq)
    return RadialProfile(grid=out_grid, values=vals, tail="rapid",
                         evaluator=evaluator)


def hankel_at(f: RadialProfile, geom: DunklGeometry, rho) -> np.ndarray:
    """Transform values at an arbitrary frequency array."""
    rho = np.atleast_1d(np.asarray(rho, dtype=float))
    freq = max(float(np.max(rho)), 1.0)
    return _forward_values(f, geom.nu, rho, freq)


def auto_spectral_extent(profiles, nu: float, start: float,
                         rel_tol: float = 1e-9) -> float:
    """Smallest dyadic extent whose sampled transform tail is negligible.

    Doubles the frequency domain until max |F p| near the edge falls
    below ``rel_tol`` times the low-frequency peak, for every profile.
    """
    live = [p for p in profiles
            if p is not None and (np.any(p.values) or p.evaluator is not None)]
    if not live:
        return start
    peak = max(float(np.max(np.abs(
        _forward_values(p, nu, np.linspace(0.0, 2.0, 9), max(start, 1.0)))))
        for p in live)
    if peak == 0.0:
        return start
    extent = max(start, 8.0)
    while True:
        probe = np.linspace(0.9 * extent, extent, 5)
        worst = max(float(np.max(np.abs(
            _forward_values(p, nu, probe, extent)))) for p in live)
        if worst <= rel_tol * peak:
            return extent
        extent *= 2.0
        if extent > _EXTENT_CAP:
            raise ResolutionError(
                "transform tail does not decay below the tolerance before "
                f"the extent cap {_EXTENT_CAP}; the data is too rough for "
                "the requested accuracy")


def apply_radial_multiplier(f: RadialProfile, m: RadialMultiplier,
                            geom: DunklGeometry,
                            out_grid: RadialGrid | None = None,
                            spectral_extent: float | None = None
                            ) -> RadialProfile:
    """T_m f = inverse transform of m * (transform of f); linear in f.

    The symbol is sampled at the quadrature frequencies of the inverse
    integral; the forward transform is evaluated exactly there.
    ``spectral_extent`` widens the frequency domain beyond the default
    max(r_max of f, r_max of the output grid).
    """
    out_grid = out_grid or f.grid
    nu = geom.nu
    out_r = out_grid.nodes
    extent = spectral_extent or max(float(f.grid.r_max), float(out_grid.r_max))
    # Panel widths: the inverse integrand oscillates at r_out + osc in rho,
    # the forward integrand at the largest frequency (the extent) in s.
    inv_freq = max(float(out_r[-1]) + m.osc_scale, 1.0)
    rho, rho_w, freq_key = _frequency_plan(f.grid, inv_freq, extent)
    g_vals = _forward_values(f, nu, rho, extent, rho_key=freq_key)
    h_vals = m(rho) * g_vals
    density = rho_w * h_vals * rho ** (2.0 * nu + 1.0)
    kernel = _kernel(out_grid, nu, out_r, ("nodes",), rho, _fingerprint(rho))

    def evaluator(r, _rho=rho, _d=density, _nu=nu):
        r = np.atleast_1d(np.asarray(r, dtype=float))
        return _kernel_block(_nu, r, _rho) @ _d
    return RadialProfile(grid=out_grid, values=kernel @ density, tail="rapid",
                         evaluator=evaluator)


def multiplier_from_transform(g: RadialProfile, geom: DunklGeometry
                              ) -> RadialMultiplier:
    """The transform of ``g`` packaged as a multiplier symbol."""
    def symbol(rho, _g=g, _geom=geom):
        return hankel_at(_g, _geom, rho)
    origin_val = complex(hankel_at(g, geom, np.array([0.0]))[0])
    return RadialMultiplier(symbol=symbol, origin=origin_val,
                            osc_scale=float(g.grid.r_max),
                            support_note="transform of a profile")


def radial_convolve(f: RadialProfile, g: RadialProfile, geom: DunklGeometry,
                    out_grid: RadialGrid | None = None,
                    spectral_extent: float | None = None) -> RadialProfile:
    """Weighted radial convolution via the transform product rule:
    the transform of the convolution is the product of the transforms."""
    return apply_radial_multiplier(f, multiplier_from_transform(g, geom),
                                   geom, out_grid=out_grid,
                                   spectral_extent=spectral_extent)
