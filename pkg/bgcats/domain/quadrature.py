"""Quadrature rules.

One engine serves the Bessel-K integral, the u(p,q) measure weight and the
radial parts of the resolution-of-unity checks:

- ``exp_power_integral`` evaluates int_0^inf x^(s-1) exp(-a x - b/x) dx after
  the substitution x = e^t, with a step-halving trapezoid rule on the real line.
- ``gauss_laguerre_rule`` and ``exp_sinh_rule`` give fixed radial node sets.
- ``uniform_angles`` gives phase nodes; M equally spaced nodes integrate
  e^{i m theta} exactly for |m| < M.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
from numpy.polynomial.laguerre import laggauss

from bgcats.domain.errors import (
    DivergentIntegralError,
    QuadratureNonConvergenceError,
)
from bgcats.domain.value_objects import QuadratureSpec

# Integrand is dropped where its log falls this far below the peak.
ENVELOPE_DROP = 50.0
_ROUNDOFF_FLOOR = 64.0 * float(np.finfo(float).eps)
_MAX_BRACKET_STEPS = 400


def halving_trapezoid(
    integrand: Callable[[np.ndarray], np.ndarray],
    t_lo: float,
    t_hi: float,
    quad: QuadratureSpec,
) -> complex:
    """Trapezoid rule for an integrand negligible at both ends of [t_lo, t_hi].

    Each pass halves the step and reuses all earlier samples; stops when two
    successive passes agree to quad.rel_tol.
    """
    tol = max(quad.rel_tol, _ROUNDOFF_FLOOR)
    intervals = quad.node_count
    h = (t_hi - t_lo) / intervals
    total = complex(np.sum(integrand(t_lo + h * np.arange(intervals + 1))))
    estimate = h * total
    for _ in range(quad.max_refinements):
        mids = t_lo + h * (np.arange(intervals) + 0.5)
        total += complex(np.sum(integrand(mids)))
        h /= 2.0
        intervals *= 2
        refined = h * total
        if abs(refined - estimate) <= tol * abs(refined):
            return refined
        estimate = refined
    raise QuadratureNonConvergenceError(
        f"Trapezoid rule did not reach rel_tol={tol:.1e} after "
        f"{quad.max_refinements} refinements (last estimate {estimate!r})"
    )


def envelope_bounds(
    log_envelope: Callable[[float], float], peak: float, step: float = 1.0
) -> tuple[float, float]:
    """Points left and right of `peak` where log_envelope drops by ENVELOPE_DROP."""
    top = log_envelope(peak)
    bounds = []
    for direction in (-1.0, 1.0):
        t = peak
        for _ in range(_MAX_BRACKET_STEPS):
            t += direction * step
            if log_envelope(t) < top - ENVELOPE_DROP:
                break
        else:
            raise QuadratureNonConvergenceError(
                f"Integrand does not decay within {_MAX_BRACKET_STEPS} steps of t={peak}"
            )
        bounds.append(t)
    return bounds[0], bounds[1]


def exp_power_integral(
    s: float, a: float, b: complex, quad: QuadratureSpec
) -> complex:
    """int_0^inf x^(s-1) exp(-a x - b/x) dx for a > 0 and Re b >= 0.

    With b = 0 the integral exists only for s > 0.
    """
    b = complex(b)
    if not a > 0:
        raise DivergentIntegralError(f"Need a > 0 for decay at infinity, got {a}")
    if b.real < 0 or (b.real == 0 and b.imag != 0):
        raise DivergentIntegralError(f"Need Re b > 0 (or b = 0), got {b}")
    if b == 0 and s <= 0:
        raise DivergentIntegralError(f"x^({s}-1) is not integrable at 0")

    b_re = b.real

    def log_envelope(t: float) -> float:
        return s * t - a * math.exp(t) - b_re * math.exp(-t)

    # stationary point of the envelope: a u^2 - s u - b_re = 0, u = e^t
    u = (s + math.sqrt(s * s + 4.0 * a * b_re)) / (2.0 * a)
    peak = math.log(u)
    t_lo, t_hi = envelope_bounds(log_envelope, peak)

    def integrand(t: np.ndarray) -> np.ndarray:
        return np.exp(s * t - a * np.exp(t) - b * np.exp(-t))

    return halving_trapezoid(integrand, t_lo, t_hi, quad)


def gauss_laguerre_rule(node_count: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for int_0^inf e^{-x} f(x) dx."""
    return laggauss(node_count)


def exp_sinh_rule(
    h: float = 1.0 / 32.0, t_lo: float = -3.5, t_hi: float = 2.5
) -> tuple[np.ndarray, np.ndarray]:
    """Double-exponential nodes for int_0^inf f(x) dx, x = exp(pi/2 sinh t).

    Clusters nodes at both the origin and infinity, so logarithmic endpoint
    singularities converge at the rate of smooth integrands.
    """
    t = np.arange(t_lo, t_hi + 0.5 * h, h)
    x = np.exp(0.5 * np.pi * np.sinh(t))
    w = h * 0.5 * np.pi * np.cosh(t) * x
    return x, w


def uniform_angles(count: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(count) / count
