"""Special functions behind the normalization constants and measures.

Gamma comes from scipy.special; the hypergeometric and Bessel functions are
summed here so that the stopping rule (SeriesControl) and the failure modes
are ours:

- hyp0f1: ascending series of 0F1(;c;x).
- bessel_i: I_nu(x) = (x/2)^nu 0F1(;nu+1;x^2/4) / Gamma(nu+1).
- bessel_k: logarithmic-limit series (integer order), Temme's series plus
  upward recurrence (orders within 1e-3 of an integer) or the I_{-nu}, I_nu
  combination (other orders) for x <= 2; Steed's continued fraction plus
  upward recurrence for x > 2.
- bessel_k_integral: K_nu(2z) = 1/2 z^-nu int_0^inf x^(nu-1) e^-(x + z^2/x) dx
  by quadrature, kept independent of the series as a cross-check.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import special

from bgcats.domain.errors import DomainError, NonConvergenceError, PoleError
from bgcats.domain.quadrature import exp_power_integral
from bgcats.domain.value_objects import QuadratureSpec, SeriesControl

DEFAULT_SERIES = SeriesControl()
DEFAULT_QUADRATURE = QuadratureSpec()

# Below this argument K_nu is summed from ascending series.
_K_SERIES_LIMIT = 2.0
# Orders this close to an integer go through Temme's series.
_NEAR_INTEGER = 1e-3
# z^3 coefficient of 1/Gamma(1+z)
_RGAMMA_C3 = -0.04200263503409524


def _is_nonpositive_integer(x: complex) -> bool:
    x = complex(x)
    return x.imag == 0 and x.real <= 0 and x.real == math.floor(x.real)


def _is_integer(x: float) -> bool:
    return float(x) == math.floor(float(x))


def gamma_fn(x: float | complex) -> float | complex:
    """Gamma(x); PoleError at 0, -1, -2, ..."""
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x}")
    if isinstance(x, complex):
        return complex(special.gamma(x))
    return float(special.gamma(x))


def hyp0f1(
    c: float, x: float | complex, ctl: SeriesControl = DEFAULT_SERIES
) -> float | complex:
    """sum_n x^n / ((c)_n n!).

    Terms are accumulated until one falls below rel_tol of the partial sum
    while the term ratio is already contracting.
    """
    if _is_nonpositive_integer(c):
        raise PoleError(f"0F1 is undefined for c={c}")
    if x == 0:
        return 1.0 if not isinstance(x, complex) else complex(1.0)
    term: float | complex = 1.0
    total: float | complex = 1.0
    for n in range(ctl.max_terms):
        ratio = x / ((c + n) * (n + 1))
        term = term * ratio
        total = total + term
        if abs(ratio) < 1.0 and abs(term) <= ctl.rel_tol * abs(total):
            return total
    raise NonConvergenceError(
        f"0F1(;{c};{x}) did not converge within {ctl.max_terms} terms"
    )


def bessel_i(nu: float, x: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Modified Bessel function of the first kind, ascending series."""
    if x < 0:
        raise DomainError(f"bessel_i needs x >= 0, got {x}")
    if nu < 0 and _is_integer(nu):
        nu = -nu
    if x == 0:
        if nu == 0:
            return 1.0
        if nu > 0:
            return 0.0
        raise DomainError(f"I_{nu}(0) is infinite")
    prefactor = (0.5 * x) ** nu * float(special.rgamma(nu + 1.0))
    return prefactor * float(hyp0f1(nu + 1.0, 0.25 * x * x, ctl))


def _bessel_k_integer_series(n: int, x: float, ctl: SeriesControl) -> float:
    # K_n(x) = 1/2 (x/2)^-n sum_{k<n} (n-k-1)!/k! (-x^2/4)^k
    #          + (-1)^(n+1) ln(x/2) I_n(x)
    #          + (-1)^n 1/2 (x/2)^n sum_k (psi(k+1) + psi(n+k+1)) (x^2/4)^k / (k!(n+k)!)
    half = 0.5 * x
    y = half * half
    finite = 0.0
    for k in range(n):
        finite += math.factorial(n - k - 1) / math.factorial(k) * (-y) ** k
    finite *= 0.5 * half ** (-n)

    psi_k = -np.euler_gamma
    psi_nk = -np.euler_gamma + sum(1.0 / j for j in range(1, n + 1))
    term = 1.0 / math.factorial(n)
    tail = term * (psi_k + psi_nk)
    for k in range(ctl.max_terms):
        term *= y / ((k + 1) * (n + k + 1))
        psi_k += 1.0 / (k + 1)
        psi_nk += 1.0 / (n + k + 1)
        piece = term * (psi_k + psi_nk)
        tail += piece
        if abs(piece) <= ctl.rel_tol * abs(tail):
            break
    else:
        raise NonConvergenceError(
            f"K_{n}({x}) series did not converge within {ctl.max_terms} terms"
        )
    sign = -1.0 if n % 2 else 1.0
    log_part = -sign * math.log(half) * bessel_i(n, x, ctl)
    return finite + log_part + sign * 0.5 * half**n * tail


def _bessel_k_steed(mu: float, x: float, ctl: SeriesControl) -> tuple[float, float]:
    """K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, x > 2 (Steed's CF2)."""
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1, q2 = 0.0, 1.0
    a1 = 0.25 - mu * mu
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, ctl.max_terms + 2):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < ctl.rel_tol:
            break
    else:
        raise NonConvergenceError(
            f"Continued fraction for K_{mu}({x}) did not converge"
        )
    k_mu = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s
    k_mu1 = k_mu * (mu + x + 0.5 - a1 * h) / x
    return k_mu, k_mu1


def _bessel_k_temme(mu: float, x: float, ctl: SeriesControl) -> tuple[float, float]:
    """K_mu(x) and K_{mu+1}(x) for |mu| < _NEAR_INTEGER, x <= 2 (Temme's series)."""
    half = 0.5 * x
    pimu = math.pi * mu
    fact = 1.0 if pimu == 0 else pimu / math.sin(pimu)
    d = -math.log(half)
    e = mu * d
    fact2 = 1.0 if e == 0 else math.sinh(e) / e
    gampl = float(special.rgamma(1.0 + mu))
    gammi = float(special.rgamma(1.0 - mu))
    # (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), Taylor series through mu^2
    gam1 = -(np.euler_gamma + _RGAMMA_C3 * mu * mu)
    gam2 = 0.5 * (gammi + gampl)
    ff = fact * (gam1 * math.cosh(e) + gam2 * fact2 * d)
    total = ff
    e = math.exp(e)
    p = 0.5 * e / gampl
    q = 0.5 / (e * gammi)
    c = 1.0
    y = half * half
    total1 = p
    for i in range(1, ctl.max_terms + 1):
        ff = (i * ff + p + q) / (i * i - mu * mu)
        c *= y / i
        p /= i - mu
        q /= i + mu
        piece = c * ff
        total += piece
        total1 += c * (p - i * ff)
        if abs(piece) < ctl.rel_tol * abs(total):
            return total, total1 / half
    raise NonConvergenceError(f"Temme series for K_{mu}({x}) did not converge")


def bessel_k(nu: float, x: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Modified Bessel function of the third kind; K_-nu = K_nu."""
    if not x > 0:
        raise DomainError(f"bessel_k needs x > 0, got {x}")
    nu = abs(float(nu))
    steps = int(round(nu))
    mu = nu - steps
    if x <= _K_SERIES_LIMIT:
        if _is_integer(nu):
            return _bessel_k_integer_series(int(nu), x, ctl)
        if abs(mu) >= _NEAR_INTEGER:
            return (
                0.5
                * math.pi
                * (bessel_i(-nu, x, ctl) - bessel_i(nu, x, ctl))
                / math.sin(nu * math.pi)
            )
        k_prev, k_next = _bessel_k_temme(mu, x, ctl)
    else:
        k_prev, k_next = _bessel_k_steed(mu, x, ctl)
    if steps == 0:
        return k_prev
    for j in range(1, steps):
        k_prev, k_next = k_next, 2.0 * (mu + j) / x * k_next + k_prev
    return k_next


def bessel_k_integral(
    nu: float, z: complex, quad: QuadratureSpec = DEFAULT_QUADRATURE
) -> complex:
    """Quadrature estimate of K_nu(2z) from its integral representation.

    Needs Re z > 0 and Re z^2 > 0 (|arg z| < pi/4) for the integral to converge.
    """
    z = complex(z)
    if not z.real > 0:
        raise DomainError(f"Need Re z > 0, got z={z}")
    z2 = z * z
    if not z2.real > 0:
        raise DomainError(f"Need Re z^2 > 0 for convergence, got z={z}")
    integral = exp_power_integral(float(nu), 1.0, z2, quad)
    return 0.5 * cmath.exp(-float(nu) * cmath.log(z)) * integral
