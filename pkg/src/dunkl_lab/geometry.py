"""Geometry parameters and exponent arithmetic for the estimate regions.

A geometry is the pair (n, gamma): the ambient dimension and the total
multiplicity weight.  Everything radial depends on it only through the
reduced Bessel order ``nu = gamma + n/2 - 1`` and the homogeneous
dimension ``D = n + 2*gamma``.

The admissible fixed-time wave pairs (p, q) lie on two line segments in
the (1/p, 1/q) square; ``line_upper_q`` covers the upper p-subinterval
[2(D+1)/(D+3), 2] via

    D/q = (D-1)/2 - 1/p'

and ``line_lower_q`` the lower one [2D/(D+2), 2(D+1)/(D+3)] via

    1/q = (D-1)/2 - D/p'.

``classify_pair`` reproduces the four boundedness cases of the Bessel
multiplier family at order ``alpha``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Absolute tolerance for all exponent comparisons: the lines are exact
# rational arithmetic on user floats.
EXPONENT_TOL = 1e-12

CASE_LABELS = ("a", "b", "c-i", "c-ii")
# Reported winner when several cases overlap (fixed, documented order).
CASE_PRIORITY = ("c-i", "c-ii", "b", "a")


@dataclass(frozen=True)
class DunklGeometry:
    """Dimension and multiplicity sum; the only group data used radially."""

    n: int
    gamma: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"dimension n must be an integer >= 1, got {self.n}")
        if not (self.gamma >= 0.0):
            raise ValueError(f"multiplicity sum gamma must be >= 0, got {self.gamma}")

    @property
    def nu(self) -> float:
        """Reduced Bessel order gamma + n/2 - 1 (always >= -1/2)."""
        return self.gamma + 0.5 * self.n - 1.0

    @property
    def homogeneous_dim(self) -> float:
        """Scaling dimension D = n + 2*gamma of the weighted measure."""
        return self.n + 2.0 * self.gamma


def reduced_bessel_order(geom: DunklGeometry) -> float:
    return geom.nu


def homogeneous_dimension(geom: DunklGeometry) -> float:
    return geom.homogeneous_dim


def conjugate_exponent(p: float) -> float:
    """Hoelder conjugate with the p=1 and p=inf endpoints included."""
    if p == math.inf:
        return 1.0
    if not (p >= 1.0):
        raise ValueError(f"exponent p must satisfy p >= 1, got {p}")
    if p <= 1.0 + EXPONENT_TOL:
        return math.inf
    return p / (p - 1.0)


@dataclass(frozen=True)
class ExponentPair:
    """A Lebesgue exponent pair; the conjugate p' is computed, not stored."""

    p: float
    q: float

    def __post_init__(self):
        for name, value in (("p", self.p), ("q", self.q)):
            if not (1.0 <= value <= math.inf):
                raise ValueError(f"exponent {name} must lie in [1, inf], got {value}")

    @property
    def p_conj(self) -> float:
        return conjugate_exponent(self.p)

    @property
    def q_conj(self) -> float:
        return conjugate_exponent(self.q)


def _inv(p: float) -> float:
    return 0.0 if p == math.inf else 1.0 / p


def _q_from_inverse(q_inv: float) -> float:
    if q_inv < -EXPONENT_TOL:
        raise ValueError("the exponent relation has no admissible q for this "
                         "geometry (1/q would be negative); the line is "
                         "degenerate below D = 2")
    if q_inv <= EXPONENT_TOL:
        return math.inf
    q = 1.0 / q_inv
    if q < 2.0 - 1e-9:
        raise ValueError(f"computed q = {q} < 2 violates the line contract")
    return q


def upper_line_interval(geom: DunklGeometry) -> tuple[float, float]:
    d = geom.homogeneous_dim
    return (2.0 * (d + 1.0) / (d + 3.0), 2.0)


def lower_line_interval(geom: DunklGeometry) -> tuple[float, float]:
    d = geom.homogeneous_dim
    return (2.0 * d / (d + 2.0), 2.0 * (d + 1.0) / (d + 3.0))


def line_upper_q(p: float, geom: DunklGeometry) -> float:
    """q on the upper-p admissible segment: D/q = (D-1)/2 - 1/p'."""
    lo, hi = upper_line_interval(geom)
    if not (lo - EXPONENT_TOL <= p <= hi + EXPONENT_TOL):
        raise ValueError(f"p = {p} outside the admissible interval "
                         f"[{lo:.12g}, {hi:.12g}] of the upper line")
    d = geom.homogeneous_dim
    q_inv = ((d - 1.0) / 2.0 - _inv(conjugate_exponent(p))) / d
    return _q_from_inverse(q_inv)


def line_lower_q(p: float, geom: DunklGeometry) -> float:
    """q on the lower-p admissible segment: 1/q = (D-1)/2 - D/p'."""
    lo, hi = lower_line_interval(geom)
    if not (lo - EXPONENT_TOL <= p <= hi + EXPONENT_TOL):
        raise ValueError(f"p = {p} outside the admissible interval "
                         f"[{lo:.12g}, {hi:.12g}] of the lower line")
    d = geom.homogeneous_dim
    q_inv = (d - 1.0) / 2.0 - d * _inv(conjugate_exponent(p))
    return _q_from_inverse(q_inv)


def alpha_max(geom: DunklGeometry) -> float:
    """Upper end of the multiplier-order window: gamma + (n+1)/2."""
    return geom.gamma + (geom.n + 1.0) / 2.0


def _matches_case(label: str, alpha: float, p: float, q: float,
                  geom: DunklGeometry) -> bool:
    d = geom.homogeneous_dim
    tol = EXPONENT_TOL
    pc = conjugate_exponent(p)
    m = d + 1.0  # n + 1 + 2*gamma
    if label == "a":
        return (1.0 + tol < p <= 2.0 + tol and 2.0 - tol <= q
                and q != math.inf
                and _inv(p) - _inv(q) <= (m - 2.0 * alpha) / (2.0 * d) + tol)
    if label == "b":
        return (abs(p - m / (m - alpha)) <= tol
                and abs(_inv(q) - (1.0 - _inv(p))) <= tol)
    if alpha < 0.5 - tol:
        return False
    if label == "c-i":
        return (m / (m - alpha) - tol <= p <= 2.0 + tol
                and abs(d * _inv(q) - (alpha - _inv(pc))) <= tol)
    if label == "c-ii":
        return (d / (d - alpha + 0.5) - tol <= p <= m / (m - alpha) + tol
                and abs(_inv(q) - (alpha - d * _inv(pc))) <= tol)
    raise ValueError(f"unknown case label {label!r}")


def matching_cases(alpha: float, pair: ExponentPair,
                   geom: DunklGeometry) -> list[str]:
    """All boundedness cases satisfied by (alpha, p, q), in label order."""
    if not (-EXPONENT_TOL <= alpha <= alpha_max(geom) + EXPONENT_TOL):
        raise ValueError(f"order alpha = {alpha} outside [0, {alpha_max(geom)}]")
    return [lab for lab in CASE_LABELS
            if _matches_case(lab, alpha, pair.p, pair.q, geom)]


def classify_pair(alpha: float, pair: ExponentPair, geom: DunklGeometry) -> str:
    """Single case label for (alpha, p, q), or ``"none"``.

    Overlaps are resolved by the fixed priority c-i, c-ii, b, a.
    """
    matches = matching_cases(alpha, pair, geom)
    for label in CASE_PRIORITY:
        if label in matches:
            return label
    return "none"
