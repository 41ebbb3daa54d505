"""The documented test-profile family.

Members span low and high frequency content and both tail classes:
Gaussians at three widths, a polynomial-weighted Gaussian, a smoothly
mollified ball indicator (Gaussian mollification, so its transform decays
super-exponentially), and a compactly supported polynomial bump.  Members
whose transform has a closed form carry it, which is what the dilation
sweeps evaluate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
import scipy.special as _sp

from ..geometry import DunklGeometry
from ..radial import RadialGrid, RadialProfile, build_grid, profile_from_function
from ..special import scaled_bessel


@dataclass(frozen=True)
class FamilyMember:
    label: str
    # profile factory on a given grid
    make: Callable[[RadialGrid], RadialProfile]
    # closed-form transform values (geom, rho) -> array, when available
    transform: Optional[Callable[[DunklGeometry, np.ndarray], np.ndarray]] = None
    # frequency radius beyond which the transform is negligible (< 1e-14)
    spectral_radius: float = 9.0
    support_radius: float = 14.0


def gaussian_member(sigma: float) -> FamilyMember:
    s2 = sigma * sigma

    def make(grid):
        return profile_from_function(
            grid, lambda r: np.exp(-np.asarray(r) ** 2 / (2.0 * s2)),
            tail="rapid",
            derivative=lambda r: -np.asarray(r) / s2 *
                np.exp(-np.asarray(r) ** 2 / (2.0 * s2)))

    def transform(geom, rho):
        d = geom.homogeneous_dim
        return sigma ** d * np.exp(-s2 * np.asarray(rho) ** 2 / 2.0)
    return FamilyMember(label=f"gauss{sigma:g}", make=make, transform=transform,
                        spectral_radius=9.0 / sigma, support_radius=9.0 * sigma)


def hermite_member() -> FamilyMember:
    """r^2 exp(-r^2/2); transform (2(nu+1) - rho^2) exp(-rho^2/2)."""
    def make(grid):
        return profile_from_function(
            grid, lambda r: np.asarray(r) ** 2 * np.exp(-np.asarray(r) ** 2 / 2),
            tail="rapid",
            derivative=lambda r: (2.0 * np.asarray(r) - np.asarray(r) ** 3) *
                np.exp(-np.asarray(r) ** 2 / 2))

    def transform(geom, rho):
        rho = np.asarray(rho)
        return (2.0 * (geom.nu + 1.0) - rho ** 2) * np.exp(-rho ** 2 / 2.0)
    return FamilyMember(label="hermite", make=make, transform=transform,
                        spectral_radius=10.0, support_radius=10.0)


def mollified_indicator_member(width: float = 0.25) -> FamilyMember:
    """Gaussian-mollified indicator of the unit ball (no closed transform).

    The mollification is symmetrized so the profile is an even C-infinity
    function of r; otherwise the residual odd derivative at the origin
    (a radial cusp) would leave an algebraic transform tail.
    """
    w = width * math.sqrt(2.0)

    def make(grid):
        def fn(r):
            r = np.asarray(r, dtype=float)
            return 0.5 * (_sp.erfc((r - 1.0) / w) - _sp.erfc((r + 1.0) / w))

        def d_fn(r):
            r = np.asarray(r, dtype=float)
            return (np.exp(-((r + 1.0) / w) ** 2)
                    - np.exp(-((r - 1.0) / w) ** 2)) / (w * math.sqrt(math.pi))
        return profile_from_function(grid, fn, tail="rapid", derivative=d_fn)
    return FamilyMember(label=f"mollball{width:g}", make=make,
                        spectral_radius=9.0 / width,
                        support_radius=1.0 + 8.0 * width)


def ball_poly_member(m: int = 8) -> FamilyMember:
    """(1 - r^2)^m on the unit ball; transform 2^m m! k_{nu+1+m}(rho)."""
    def make(grid):
        if abs(grid.r_max - 1.0) > 1e-12:
            raise ValueError("ball polynomial data lives on r_max = 1")
        return profile_from_function(
            grid,
            lambda r: np.where(np.asarray(r) <= 1.0,
                               (1.0 - np.minimum(np.asarray(r), 1.0) ** 2) ** m,
                               0.0),
            tail="compact",
            derivative=lambda r: np.where(
                np.asarray(r) <= 1.0,
                -2.0 * m * np.asarray(r) *
                (1.0 - np.minimum(np.asarray(r), 1.0) ** 2) ** (m - 1), 0.0))

    def transform(geom, rho):
        return 2.0 ** m * math.gamma(m + 1) * \
            scaled_bessel(geom.nu + 1.0 + m, np.asarray(rho, dtype=float))
    return FamilyMember(label=f"ballpoly{m}", make=make, transform=transform,
                        spectral_radius=64.0, support_radius=1.0)


def identity_family() -> list[FamilyMember]:
    """Members used by the transform identity checks."""
    return [gaussian_member(1.0), gaussian_member(0.6), gaussian_member(1.6),
            hermite_member(), mollified_indicator_member(0.25)]


def sweep_family() -> list[FamilyMember]:
    """Members with closed-form transforms, used by dilation sweeps."""
    return [gaussian_member(1.0)]


def default_grid(member: FamilyMember, per_unit: float = 30.0) -> RadialGrid:
    n = int(max(64, round(member.support_radius * per_unit)))
    return build_grid(member.support_radius, n, "uniform")
