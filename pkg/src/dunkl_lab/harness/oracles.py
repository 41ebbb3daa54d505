"""Independent oracles for the verification suite.

Everything here is implemented without touching the transform engine or
the library's Bessel evaluators: high-precision series and quadrature via
mpmath, closed-form solution formulas, exact level-set algebra, and the
dilation-scaling exponents that pre-register sweep expectations.
"""

from __future__ import annotations

import math

import mpmath
import numpy as np
from scipy.integrate import quad as _quad

from ..geometry import DunklGeometry, conjugate_exponent


def bessel_series(nu, t, dps: int = 30) -> complex:
    """J_nu(t) by direct high-precision summation of the power series."""
    with mpmath.workdps(dps):
        nu_m = mpmath.mpc(nu) if (isinstance(nu, complex) or
                                  np.iscomplexobj(nu)) else mpmath.mpf(nu)
        t_m = mpmath.mpf(t)
        half = t_m / 2
        total = mpmath.mpc(0)
        term_base = mpmath.power(half, nu_m)
        for m in range(0, 400):
            term = ((-1) ** m * mpmath.power(half, 2 * m) * term_base /
                    (mpmath.factorial(m) * mpmath.gamma(m + nu_m + 1)))
            total += term
            if m > 4 and abs(term) < mpmath.mpf(10) ** (-dps - 5) * max(abs(total), 1):
                break
        return complex(total)


def scaled_bessel_ref(nu, t, dps: int = 30) -> complex:
    """t**(-nu) J_nu(t) at high precision (limit value at t = 0)."""
    with mpmath.workdps(dps):
        nu_m = mpmath.mpc(nu)
        if t == 0.0:
            return complex(mpmath.power(2, -nu_m) * mpmath.rgamma(nu_m + 1))
        val = mpmath.besselj(nu_m, mpmath.mpf(t)) * mpmath.power(mpmath.mpf(t), -nu_m)
        return complex(val)


def gaussian_transform_spot(nu: float, rho: float, dps: int = 25) -> float:
    """High-precision quadrature of the transform of exp(-r^2/2) at rho.

    Independent of the engine: mpmath adaptive quadrature against the
    mpmath Bessel function.  The exact answer is exp(-rho^2/2).
    """
    with mpmath.workdps(dps):
        nu_m = mpmath.mpf(nu)
        rho_m = mpmath.mpf(rho)

        def integrand(s):
            t = s * rho_m
            kern = mpmath.power(2, -nu_m) * mpmath.rgamma(nu_m + 1) if t == 0 \
                else mpmath.besselj(nu_m, t) * mpmath.power(t, -nu_m)
            return mpmath.exp(-s * s / 2) * kern * mpmath.power(s, 2 * nu_m + 1)
        val = mpmath.quad(integrand, [0, 2, 4, 8, 16, 32])
        return float(val)


def dalembert_solution(f_eval, g_eval, x: float, t: float) -> float:
    """Classical line-wave solution
    u = (g(x+t) + g(x-t))/2 + (1/2) int_{x-t}^{x+t} f."""
    pos = 0.5 * (g_eval(x + t) + g_eval(x - t))
    vel, _ = _quad(f_eval, x - t, x + t, limit=200, epsabs=1e-12, epsrel=1e-12)
    return pos + 0.5 * vel


def spherical_means_solution(phi_eval, r: float, t: float) -> float:
    """Radial three-dimensional wave from position data phi (f = 0):
    u(r,t) = ((r+t) phi(r+t) + (r-t) phi(|r-t|) sgn(r-t)) / (2r)."""
    if r <= 0.0:
        raise ValueError("evaluate away from the origin")
    a = (r + t) * phi_eval(r + t)
    b = (r - t) * phi_eval(abs(r - t))
    return (a + b) / (2.0 * r)


def ball_power_half_level_measure(s: float, nu: float) -> float:
    """Closed-form weighted measure of {|Phi_{1/2}| > s}.

    Phi_{1/2}(r) = c0 (1-r^2)^{-1/2} with c0 = sqrt(2/pi) is increasing on
    [0, 1): the level set is an annulus r* < r < 1 with
    r* = sqrt(1 - (c0/s)^2) for s > c0, the whole ball for s <= c0.
    """
    c0 = math.sqrt(2.0) / math.gamma(0.5)
    d = 2.0 * nu + 2.0
    if s <= c0:
        return 1.0 / d
    # 1 - r*^d without cancellation: r* = (1 - (c0/s)^2)^(1/2)
    log_r_star = 0.5 * math.log1p(-((c0 / s) ** 2))
    return -math.expm1(d * log_r_star) / d


def ball_power_half_weak_limit(nu: float) -> float:
    """lim_{s->inf} s^2 * alpha(s) = c0^2 / 2 for the half-power kernel."""
    c0 = math.sqrt(2.0) / math.gamma(0.5)
    return c0 * c0 / 2.0


def indicator_level_measure(s: float, nu: float) -> float:
    """alpha(s) of the unit-ball indicator: ball measure for s < 1, else 0."""
    return 1.0 / (2.0 * nu + 2.0) if s < 1.0 else 0.0


def gaussian_l2_norm(nu: float) -> float:
    """||exp(-r^2/2)||_2 against r^(2 nu + 1) dr: (Gamma(nu+1)/2)^(1/2)."""
    return math.sqrt(math.gamma(nu + 1.0) / 2.0)


def gaussian_lp_norm(nu: float, p: float, sigma: float = 1.0) -> float:
    """||exp(-(r/sigma)^2/2)||_p: closed Gamma-integral form."""
    d = 2.0 * nu + 2.0
    return (sigma ** d * math.gamma(nu + 1.0) * (2.0 / p) ** (nu + 1.0) / 2.0) \
        ** (1.0 / p)


def kernel_ode_series(x: float, xi: float, k: float, terms: int = 300) -> complex:
    """Power-series solution of the eigenfunction problem D u = i xi u,
    u(0) = 1: the coefficient recursion c_j a_j = i xi a_{j-1} with
    c_j = j + 2k for odd j and c_j = j for even j."""
    a = complex(1.0)
    total = complex(1.0)
    xp = 1.0
    for m in range(1, terms):
        cj = m + 2.0 * k if m % 2 == 1 else float(m)
        a = a * (1j * xi) / cj
        xp *= x
        total += a * xp
        if abs(a * xp) < 1e-20 * max(abs(total), 1.0) and m > 8:
            break
    return total


def multiplier_growth_exponent(alpha: float, p: float, q: float,
                               geom: DunklGeometry) -> float:
    """Predicted large-dilation growth exponent of the Bessel-multiplier
    ratio for radial focusing data: alpha - D/p' - 1/q.

    Zero exactly on the lower-p admissible line (where radial dilates
    saturate the estimate); positive means the ratio grows like
    lambda**E and the pair is supercritical for radial data.
    """
    d = geom.homogeneous_dim
    pc = conjugate_exponent(p)
    inv_q = 0.0 if q == math.inf else 1.0 / q
    inv_pc = 0.0 if pc == math.inf else 1.0 / pc
    return alpha - d * inv_pc - inv_q


def power_multiplier_growth_exponent(t_exp: float, p: float, q: float,
                                     geom: DunklGeometry) -> float:
    """Growth exponent D(1/p - 1/q) - t of the power-decay multiplier
    min(1, rho^{-t}) under dilation; zero exactly on the admissible
    relation 1/p - 1/q = t/D."""
    d = geom.homogeneous_dim
    inv_p = 0.0 if p == math.inf else 1.0 / p
    inv_q = 0.0 if q == math.inf else 1.0 / q
    return d * (inv_p - inv_q) - t_exp


def wave_growth_exponent(p: float, q: float, geom: DunklGeometry) -> float:
    """Growth exponent of the fixed-time wave ratio for radial dilates:
    the multiplier exponent at order nu + 1/2 (both halves of the
    propagator scale identically once the gradient norm is included)."""
    return multiplier_growth_exponent(geom.nu + 0.5, p, q, geom)
