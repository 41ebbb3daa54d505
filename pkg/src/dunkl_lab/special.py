"""Gamma at complex arguments and Bessel J of real and complex order.

Real orders are delegated to scipy's C implementation.  Complex orders use
two analytic routes with a documented split:

* power series of ``t**(-nu) * J_nu(t)`` (an entire, even function of t)
  for ``t <= 12``, where float cancellation stays below ``2e-11``;
* the Poisson integral representation

      J_nu(t) = (t/2)**nu / (sqrt(pi) Gamma(nu+1/2))
                * int_{-1}^{1} (1-u^2)**(nu-1/2) e^{itu} du

  for larger ``t``, on oscillation-resolving panels with an exact moment
  rule for the algebraic (and, for complex order, log-oscillatory)
  endpoint factor.

Orders with ``Re nu`` at or below ``-1/2`` (reached by the high-frequency
odd multiplier family at the top of its parameter strip) are lifted into
the integrable range with the three-term recurrence

    t**(-nu) J_nu(t) = 2(nu+1) s(nu+1, t) - t^2 s(nu+2, t),

which is stable in the increasing-order direction.

Evaluation envelope for complex orders: ``|Re nu| <= 40``, ``|Im nu| <= 64``
and ``t <= 200``.  Outside it, calls fail loudly with ``EnvelopeError``.
Real-order calls have no upper ``t`` cap (scipy is uniformly accurate).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.special as _sp

from .errors import EnvelopeError
from .quadrature import gauss_legendre, power_moments

# Documented complex-order evaluation envelope.
MAX_IM_ORDER = 64.0
MAX_RE_ORDER = 40.0
MAX_COMPLEX_ARG = 200.0
# Series/integral split point in t.
SERIES_SPLIT = 12.0

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ComplexOrder:
    """A Bessel order eta + i*zeta inside the evaluation envelope."""

    eta: float
    zeta: float

    def __post_init__(self):
        if self.eta < -1.5:
            raise ValueError(f"order real part {self.eta} below -3/2 is not supported")
        if abs(self.zeta) > MAX_IM_ORDER:
            raise EnvelopeError(
                f"|Im nu| = {abs(self.zeta)} exceeds the envelope {MAX_IM_ORDER}")
        if abs(self.eta) > MAX_RE_ORDER:
            raise EnvelopeError(
                f"|Re nu| = {abs(self.eta)} exceeds the envelope {MAX_RE_ORDER}")

    @property
    def value(self) -> complex:
        return complex(self.eta, self.zeta)


def _as_order(nu) -> complex:
    if isinstance(nu, ComplexOrder):
        return nu.value
    return complex(nu)


def gamma_complex(z):
    """Gamma at complex arguments on |Re z| <= 40, |Im z| <= 64.

    Poles (nonpositive integers) raise ``ValueError``.
    """
    zc = np.asarray(z, dtype=complex)
    if np.any(np.abs(zc.real) > MAX_RE_ORDER) or np.any(np.abs(zc.imag) > MAX_IM_ORDER):
        raise EnvelopeError(f"gamma argument {z} outside the evaluation envelope "
                            f"|Re| <= {MAX_RE_ORDER}, |Im| <= {MAX_IM_ORDER}")
    on_axis = np.abs(zc.imag) == 0.0
    near_int = np.abs(zc.real - np.round(zc.real)) < 1e-300
    if np.any(on_axis & near_int & (np.round(zc.real) <= 0)):
        bad = zc[on_axis & near_int & (np.round(zc.real) <= 0)].flat[0]
        raise ValueError(f"gamma pole at z = {int(bad.real)}")
    out = _sp.gamma(zc)
    return out if out.shape else complex(out)


def bessel_j(nu: float, t):
    """J_nu(t) for real order nu >= -1/2 and t >= 0."""
    if np.iscomplexobj(nu) or isinstance(nu, ComplexOrder):
        raise ValueError("bessel_j takes a real order; use scaled_bessel for "
                         "complex orders")
    if nu < -0.5:
        raise ValueError(f"order nu = {nu} < -1/2 is outside the library's range")
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0.0):
        raise ValueError("bessel_j requires t >= 0")
    out = _sp.jv(nu, t_arr)
    return out if out.shape else float(out)


def _series_scaled(nu: complex, t: np.ndarray) -> np.ndarray:
    """t**(-nu) J_nu(t) by the defining power series (entire in t)."""
    quarter_t2 = 0.25 * t.astype(complex) ** 2
    term = np.full(t.shape, 0.5 ** nu * complex(_sp.rgamma(nu + 1.0)), dtype=complex)
    acc = term.copy()
    for m in range(1, 200):
        term = term * (-quarter_t2) / (m * (nu + m))
        acc += term
        if m > 4 and np.max(np.abs(term)) <= 1e-18 * max(np.max(np.abs(acc)), 1e-300):
            break
    return acc


def _poisson_panel_edges(t_max: float, zeta: float) -> tuple[np.ndarray, float]:
    """Panel edges on [0, 1-d] plus the endpoint-panel width d.

    The local phase slope of (1-u^2)**(i*zeta) * e^{itu} is
    t + 2|zeta| u/(1-u^2); panels keep the phase advance below ~pi/2.
    """
    t_max = max(t_max, 1.0)
    az = abs(zeta)
    d = min(0.2, 0.5 * math.pi / t_max)
    edges = [0.0]
    u = 0.0
    while u < 1.0 - d - 1e-14:
        delta = 1.0 - u
        width = min(0.5 * math.pi / (t_max + 2.0 * az / delta), 0.6 * delta)
        u = min(u + width, 1.0 - d)
        edges.append(u)
    return np.asarray(edges), d


def _poisson_scaled_block(nu: complex, t: np.ndarray) -> np.ndarray:
    """t**(-nu) J_nu(t) via the Poisson integral; requires Re nu > -1/2.

    Vectorized over a block of t values sharing one panel layout:
    2**(-nu)/(sqrt(pi)*Gamma(nu+1/2)) * 2*int_0^1 (1-u^2)**(nu-1/2) cos(tu) du.
    """
    edges, d = _poisson_panel_edges(float(np.max(t)), nu.imag)
    x, w = gauss_legendre()
    a, b = edges[:-1], edges[1:]
    half = 0.5 * (b - a)
    nodes = (0.5 * (b + a)[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    envelope = np.exp((nu - 0.5) * np.log1p(-nodes * nodes))
    interior = (weights * envelope) @ np.cos(np.outer(nodes, t))

    # Endpoint panel [1-d, 1]: exact moments of (1-u)**(nu-1/2), polynomial
    # fit of the remaining smooth factor (1+u)**(nu-1/2) cos(tu).
    degree = 12
    xg, _ = gauss_legendre(degree + 1)
    ug = 0.5 * (xg + 1.0)
    s = 1.0 - d * ug
    smooth = np.exp((nu - 0.5) * np.log1p(s))[:, None] * np.cos(np.outer(s, t))
    vander = np.vander(ug, degree + 1, increasing=True)
    coeffs = np.linalg.solve(vander, smooth)
    moments = power_moments(0.5 - nu, degree)
    edge = d ** (0.5 + nu) * (moments @ coeffs)

    integral = 2.0 * (interior + edge)
    prefactor = 0.5 ** nu / (_SQRT_PI * complex(_sp.gamma(nu + 0.5)))
    return prefactor * integral


def _poisson_scaled(nu: complex, t: np.ndarray) -> np.ndarray:
    """Blocked dispatcher so widely different t share efficient layouts."""
    out = np.empty(t.shape, dtype=complex)
    bands = [(0.0, 25.0), (25.0, 50.0), (50.0, 100.0), (100.0, MAX_COMPLEX_ARG)]
    for lo, hi in bands:
        mask = (t > lo) & (t <= hi)
        if np.any(mask):
            out[mask] = _poisson_scaled_block(nu, t[mask])
    return out


def _scaled_complex(nu: complex, t: np.ndarray) -> np.ndarray:
    if nu.real <= 0.499:
        # Lift into the Poisson-integrable range; series below the split
        # is evaluated at the lifted orders too, which costs nothing.
        s1 = _scaled_complex(nu + 1.0, t)
        s2 = _scaled_complex(nu + 2.0, t)
        return 2.0 * (nu + 1.0) * s1 - t.astype(complex) ** 2 * s2
    out = np.empty(t.shape, dtype=complex)
    small = t <= SERIES_SPLIT
    if np.any(small):
        out[small] = _series_scaled(nu, t[small])
    if np.any(~small):
        out[~small] = _poisson_scaled(nu, t[~small])
    return out


def scaled_bessel(nu, t):
    """The entire even function t**(-nu) J_nu(t).

    Finite at t = 0 with value 2**(-nu)/Gamma(nu+1).  Real orders require
    nu >= -1/2; complex orders require Re nu > -3/2 (orders in (-3/2, -1/2]
    are reached through the stable upward recurrence) and t <= 200.
    """
    order = _as_order(nu)
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.shape == ()
    t_arr = np.atleast_1d(t_arr)
    if np.any(t_arr < 0.0):
        raise ValueError("scaled_bessel requires t >= 0")
    if order.imag == 0.0 and not isinstance(nu, ComplexOrder) \
            and not np.iscomplexobj(nu):
        if order.real < -0.5:
            raise ValueError(f"real order nu = {order.real} < -1/2")
        out = np.empty(t_arr.shape, dtype=float)
        small = t_arr < 0.5
        if np.any(small):
            out[small] = _series_scaled(complex(order.real), t_arr[small]).real
        if np.any(~small):
            tt = t_arr[~small]
            out[~small] = tt ** (-order.real) * _sp.jv(order.real, tt)
        return float(out[0]) if scalar else out
    ComplexOrder(order.real, order.imag)  # envelope validation
    if np.any(t_arr > MAX_COMPLEX_ARG):
        raise EnvelopeError(
            f"t = {np.max(t_arr)} exceeds the complex-order envelope "
            f"t <= {MAX_COMPLEX_ARG}")
    out = _scaled_complex(order, t_arr)
    return complex(out[0]) if scalar else out


def poisson_integral_bessel(nu, t):
    """J_nu(t) through the Poisson integral representation (Re nu > -1/2).

    Kept as an independent route from the series: the two are
    cross-checked in the verification suite.
    """
    order = _as_order(nu)
    if order.real <= -0.5:
        raise ValueError(f"the Poisson integral requires Re nu > -1/2, "
                         f"got {order.real}")
    ComplexOrder(order.real, order.imag)
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.shape == ()
    t_arr = np.atleast_1d(t_arr)
    if np.any(t_arr <= 0.0):
        raise ValueError("poisson_integral_bessel requires t > 0")
    if np.any(t_arr > MAX_COMPLEX_ARG):
        raise EnvelopeError(f"t exceeds the envelope t <= {MAX_COMPLEX_ARG}")
    bands = [(0.0, 12.0), (12.0, 25.0), (25.0, 50.0), (50.0, 100.0),
             (100.0, MAX_COMPLEX_ARG)]
    scaled = np.empty(t_arr.shape, dtype=complex)
    for lo, hi in bands:
        mask = (t_arr > lo) & (t_arr <= hi)
        if np.any(mask):
            scaled[mask] = _poisson_scaled_block(order, t_arr[mask])
    out = t_arr.astype(complex) ** order * scaled
    if scalar:
        return float(out[0].real) if order.imag == 0.0 else complex(out[0])
    return out.real if order.imag == 0.0 else out


def gamma_reflection_residual(y) -> float:
    """Residual of |Gamma(1-iy)|^2 * sinh(pi y)/(pi y) = 1 (the reflection
    identity; equivalently |Gamma(1-iy)|^(-1) = (sinh(pi y)/(pi y))^(1/2))."""
    y = float(y)
    g = gamma_complex(complex(1.0, -y))
    return abs(abs(g) ** 2 * math.sinh(math.pi * y) / (math.pi * y) - 1.0)
