"""Weighted radial harmonic analysis at reduced Bessel order nu:
self-reciprocal transforms, Bessel-kernel multiplier operators, the full
rank-one reflection calculus, a spectral wave propagator, and a
verification harness for the associated Lp-Lq estimates."""

from .errors import EnvelopeError, ResolutionError
from .geometry import DunklGeometry, ExponentPair, classify_pair, \
    conjugate_exponent, homogeneous_dimension, line_lower_q, line_upper_q, \
    matching_cases, reduced_bessel_order
from .hankel import RadialMultiplier, apply_radial_multiplier, hankel_at, \
    hankel_forward, radial_convolve
from .operators import CutoffPsi, WaveState, apply_bessel_multiplier, \
    apply_cosine_multiplier, apply_highpass_potential, \
    apply_odd_cutoff_bessel, ball_power_profile, bessel_symbol, \
    convolve_ball_kernel, coordinate_ball_profile, wave_energy, \
    wave_propagate, wave_propagate_dilated
from .radial import EndpointPower, RadialGrid, RadialProfile, \
    WeightedMeasure, build_grid, dilate, distribution_function, \
    grid_from_nodes, lp_norm, profile_from_function, profile_from_samples, \
    sup_norm, weak_norm, zero_profile
from .rank1 import Rank1Function, decompose_on_grid, dunkl_derivative_rank1, \
    dunkl_inverse_rank1, dunkl_kernel_rank1, dunkl_transform_rank1, \
    dunkl_translate_rank1, lp_norm_rank1, rank1_from_parts, riesz_rank1, \
    wave_propagate_rank1
from .special import ComplexOrder, bessel_j, gamma_complex, \
    poisson_integral_bessel, scaled_bessel

__version__ = "0.1.0"
