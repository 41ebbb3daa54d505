import math

import numpy as np
import pytest

from dunkl_lab import ComplexOrder, EnvelopeError, bessel_j, gamma_complex, \
    poisson_integral_bessel, scaled_bessel
from dunkl_lab.harness import oracles

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


def test_gamma_classical_values():
    assert gamma_complex(1.0) == pytest.approx(1.0, rel=1e-14)
    assert gamma_complex(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_reflection_value():
    # both sides computed independently: |Gamma(1-2i)|^-1 and the closed
    # hyperbolic form agree (approx. 6.52790...)
    lhs = 1.0 / abs(gamma_complex(1.0 - 2.0j))
    rhs = math.sqrt(math.sinh(2.0 * math.pi) / (2.0 * math.pi))
    assert lhs == pytest.approx(rhs, rel=1e-12)
    assert lhs == pytest.approx(6.527857487280455, rel=1e-12)


def test_gamma_pole_and_envelope():
    with pytest.raises(ValueError):
        gamma_complex(0.0)
    with pytest.raises(ValueError):
        gamma_complex(-3.0)
    with pytest.raises(EnvelopeError):
        gamma_complex(complex(0.5, 80.0))


def test_bessel_half_order_closed_form():
    assert bessel_j(0.5, math.pi / 2.0) == pytest.approx(2.0 / math.pi, rel=1e-12)
    assert bessel_j(0.0, 0.0) == pytest.approx(1.0, abs=1e-15)


def test_bessel_series_frozen_value():
    # J_1(1) from the series oracle, frozen
    assert bessel_j(1.0, 1.0) == pytest.approx(0.44005058574493355, rel=1e-13)
    assert abs(oracles.bessel_series(1.0, 1.0) - 0.44005058574493355) < 1e-15


def test_bessel_domain_errors():
    with pytest.raises(ValueError):
        bessel_j(-1.0, 1.0)
    with pytest.raises(ValueError):
        bessel_j(0.5, -1.0)
    with pytest.raises(ValueError):
        bessel_j(1 + 1j, 1.0)


def test_scaled_bessel_origin_limits():
    assert scaled_bessel(0.5, 0.0) == pytest.approx(SQRT_2_OVER_PI, rel=1e-13)
    val = scaled_bessel(1 + 2j, 0.0)
    ref = oracles.scaled_bessel_ref(1 + 2j, 0.0)
    assert abs(val - ref) < 1e-13 * abs(ref)


def test_scaled_bessel_negative_half_order():
    # t^(1/2) J_(-1/2)(t) = sqrt(2/pi) cos t
    assert scaled_bessel(-0.5, math.pi) == pytest.approx(-SQRT_2_OVER_PI,
                                                         rel=1e-12)


def test_scaled_bessel_complex_cross_routes():
    # series evaluation against the Poisson integral at the same point
    nu = 1 + 2j
    t = 5.0
    series_route = scaled_bessel(nu, t)
    integral_route = poisson_integral_bessel(nu, t) * t ** (-nu)
    assert abs(series_route - integral_route) < 1e-11 * abs(series_route)


@pytest.mark.parametrize("nu", [0.5, 2.0, -0.5 + 1j, 1 + 2j, 2.7 - 5j, -1.5 + 0.5j])
@pytest.mark.parametrize("t", [0.4, 5.0, 11.9, 12.1, 60.0, 195.0])
def test_scaled_bessel_vs_oracle(nu, t):
    ref = oracles.scaled_bessel_ref(nu, t)
    val = scaled_bessel(nu, t)
    assert abs(val - ref) <= 1e-10 * max(abs(ref), 1e-30)


def test_poisson_integral_matches_series():
    assert poisson_integral_bessel(0.0, 1.0) == pytest.approx(
        0.7651976865579666, rel=1e-10)
    for nu in (0.0, 0.5, 1.5):
        for t in (0.5, 2.0, 20.0):
            assert poisson_integral_bessel(nu, t) == pytest.approx(
                bessel_j(nu, t), abs=1e-11)


def test_poisson_domain():
    with pytest.raises(ValueError):
        poisson_integral_bessel(-0.75, 1.0)
    with pytest.raises(ValueError):
        poisson_integral_bessel(0.5, 0.0)


def test_complex_envelope_errors():
    with pytest.raises(EnvelopeError):
        scaled_bessel(1 + 2j, 250.0)
    with pytest.raises(EnvelopeError):
        ComplexOrder(0.5, 100.0)
    with pytest.raises(ValueError):
        scaled_bessel(complex(-2.0, 1.0), 1.0)


def test_complex_growth_envelope_shape():
    # |t^-(eta+i zeta) J| stays within c * e^(c zeta) (1+t)^(-eta-1/2)
    eta = 0.5
    for zeta in (2.0, 6.0):
        for t in (1.0, 30.0, 150.0):
            val = abs(scaled_bessel(complex(eta, zeta), t))
            bound = 5.0 * math.exp(math.pi * zeta / 2.0) * (1 + t) ** (-eta - 0.5)
            assert val <= bound


def test_bessel_recurrence_identity_spot():
    nu, t = 1.5, 7.0
    lhs = bessel_j(nu + 1.0, t)
    rhs = 2.0 * nu * bessel_j(nu, t) / t - bessel_j(nu - 1.0, t)
    assert lhs == pytest.approx(rhs, abs=1e-13)


def test_scaled_derivative_identity_spot():
    nu, t, h = 1.0, 3.0, 1e-5
    fd = (scaled_bessel(nu, t + h) - scaled_bessel(nu, t - h)) / (2 * h)
    assert fd == pytest.approx(-t * scaled_bessel(nu + 1.0, t), abs=1e-9)
