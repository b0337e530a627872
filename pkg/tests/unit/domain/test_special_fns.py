import math

import numpy as np
import pytest
from scipy import special

from bgcats.domain.errors import DomainError, NonConvergenceError, PoleError
from bgcats.domain.special_fns import (
    bessel_i,
    bessel_k,
    bessel_k_integral,
    gamma_fn,
    hyp0f1,
)
from bgcats.domain.value_objects import SeriesControl


@pytest.mark.parametrize(
    "x, expected", [(1.0, 1.0), (5.0, 24.0), (0.5, math.sqrt(math.pi))]
)
def test_gamma_fn_known_values(x, expected):
    assert gamma_fn(x) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("x", [0, -1, -2.0, complex(-3, 0)])
def test_gamma_fn_poles(x):
    with pytest.raises(PoleError):
        gamma_fn(x)


def test_gamma_fn_complex_argument():
    value = gamma_fn(complex(0.5, 1.0))
    assert isinstance(value, complex)
    assert value == pytest.approx(complex(special.gamma(0.5 + 1.0j)), rel=1e-13)


@pytest.mark.parametrize("c", [0.5, 1.0, 2.5, 7.0])
@pytest.mark.parametrize("x", [0.0, 0.3, 2.0, 25.0])
def test_hyp0f1_matches_scipy(c, x):
    assert hyp0f1(c, x) == pytest.approx(special.hyp0f1(c, x), rel=1e-11)


def test_hyp0f1_pole_in_c():
    with pytest.raises(PoleError):
        hyp0f1(-1.0, 0.5)


def test_hyp0f1_term_cap():
    with pytest.raises(NonConvergenceError):
        hyp0f1(1.0, 100.0, SeriesControl(max_terms=3))


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.5])
@pytest.mark.parametrize("x", [0.1, 1.0, 5.0])
def test_bessel_i_matches_scipy(nu, x):
    assert bessel_i(nu, x) == pytest.approx(special.iv(nu, x), rel=1e-11)


def test_bessel_i_negative_integer_order():
    assert bessel_i(-2, 1.3) == pytest.approx(bessel_i(2, 1.3), rel=1e-14)


def test_bessel_i_rejects_negative_argument():
    with pytest.raises(DomainError):
        bessel_i(1.0, -0.5)


@pytest.mark.parametrize("nu", [0, 1, 2, 3, 0.3, 0.5, 1.5, 2.7])
@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0, 2.5, 5.0, 10.0])
def test_bessel_k_matches_scipy(nu, x):
    assert bessel_k(nu, x) == pytest.approx(special.kv(nu, x), rel=1e-9)


@pytest.mark.parametrize("x", [0.2, 1.7, 3.0, 8.0])
def test_bessel_k_half_order_closed_form(x):
    expected = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x)
    assert bessel_k(0.5, x) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("nu", [1e-6, 1.0 - 1e-7, 1.0 + 5e-4, 2.0 - 2e-4, 3.0 + 1e-8])
@pytest.mark.parametrize("x", [0.05, 0.7, 1.9, 2.0])
def test_bessel_k_near_integer_order(nu, x):
    assert bessel_k(nu, x) == pytest.approx(special.kv(nu, x), rel=1e-10)


def test_bessel_k_is_continuous_at_integer_order():
    assert bessel_k(2.0 + 1e-9, 1.2) == pytest.approx(bessel_k(2.0, 1.2), rel=1e-8)


def test_bessel_k_is_even_in_order():
    assert bessel_k(-2.0, 0.7) == bessel_k(2.0, 0.7)


@pytest.mark.parametrize("x", [0.0, -1.0])
def test_bessel_k_domain(x):
    with pytest.raises(DomainError):
        bessel_k(1.0, x)


@pytest.mark.parametrize("nu", [0, 1, -1, 2, -2, 3, -3])
@pytest.mark.parametrize("z", [0.1, 0.5, 1.0, 2.0, 5.0])
def test_bessel_k_integral_agrees_with_series(nu, z):
    integral = bessel_k_integral(nu, z)
    assert abs(integral.imag) < 1e-12 * abs(integral.real)
    assert integral.real == pytest.approx(bessel_k(nu, 2.0 * z), rel=1e-8)


def test_bessel_k_integral_complex_argument():
    z = 0.8 * np.exp(1j * np.pi / 8)
    assert bessel_k_integral(1.0, z) == pytest.approx(special.kv(1.0, 2.0 * z), rel=1e-7)


@pytest.mark.parametrize("z", [complex(-0.5, 0.0), complex(1.0, 1.0), complex(0.2, 0.9)])
def test_bessel_k_integral_outside_convergence_region(z):
    with pytest.raises(DomainError):
        bessel_k_integral(1.0, z)
