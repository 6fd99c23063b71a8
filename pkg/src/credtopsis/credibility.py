"""Credibility measure, expected value and variance of triangular fuzzy numbers.

The credibility of a fuzzy event is the average of its possibility and its
necessity, Cr = (Pos + Nec)/2. Unlike possibility it is self-dual:
Cr{x >= r} + Cr{x < r} = 1, so Cr = 1 forces the event and Cr = 0 forces its
failure. The expected value is the Choquet-style integral

    E = integral_0^inf Cr{x >= r} dr - integral_-inf^0 Cr{x <= r} dr

which evaluates to (lower + 2*mode + upper)/4 for a TFN, and the variance is
E[(x - e)^2] under the same measure.

Closed forms are paired with independent quadrature routes
(:func:`expected_value_numeric`, :func:`variance_numeric`) that integrate the
defining credibility integrals directly; the test suite holds the two routes
together. The asymmetric variance branches share one polynomial in
(max(alpha, beta), min(alpha, beta)), which makes reflection symmetry
variance(l, m, u) == variance(-u, -m, -l) exact by construction.
"""
from __future__ import annotations

from math import sqrt

from scipy.integrate import quad

from .errors import QuadratureFailure
from .tfn import TriangularFuzzyNumber


def credibility_at_least(x: TriangularFuzzyNumber, r: float) -> float:
    """Cr{x >= r}, nonincreasing in r, 1 below the support and 0 above it."""
    a, b, c = x.as_tuple()
    if r <= a:
        return 1.0
    if r > c:
        return 0.0
    if r <= b:
        # a < r <= b implies b > a
        return 1.0 - (r - a) / (2.0 * (b - a))
    # b < r <= c implies c > b
    return (c - r) / (2.0 * (c - b))


def credibility_at_most(x: TriangularFuzzyNumber, r: float) -> float:
    """Cr{x <= r}; the dual of :func:`credibility_at_least`."""
    a, b, c = x.as_tuple()
    if r < a:
        return 0.0
    if r >= c:
        return 1.0
    if r < b:
        return (r - a) / (2.0 * (b - a))
    return 1.0 - (c - r) / (2.0 * (c - b))


def expected_value(x: TriangularFuzzyNumber) -> float:
    """Credibilistic mean, (lower + 2*mode + upper)/4."""
    return (x.lower + 2.0 * x.mode + x.upper) / 4.0


def variance(x: TriangularFuzzyNumber) -> float:
    """Credibilistic variance E[(x - e)^2].

    alpha = mode - lower and beta = upper - mode are the two spreads.
    The symmetric case is alpha^2/6; the asymmetric cases are one polynomial
    evaluated with the larger spread first, divided by 384 times the larger
    spread. Continuous in (alpha, beta) and zero only for crisp values.
    """
    alpha = x.mode - x.lower
    beta = x.upper - x.mode
    if alpha == beta:
        return alpha * alpha / 6.0
    big, small = (alpha, beta) if alpha > beta else (beta, alpha)
    numerator = (
        33.0 * big**3
        + 21.0 * big**2 * small
        + 11.0 * big * small**2
        - small**3
    )
    return numerator / (384.0 * big)


def std_dev(x: TriangularFuzzyNumber) -> float:
    """Credibilistic standard deviation, sqrt of :func:`variance`."""
    return sqrt(variance(x))


# --- quadrature oracles -----------------------------------------------------
#
# Both oracles integrate the defining credibility integrals directly, never
# touching the closed forms above. The integrands are piecewise smooth with a
# handful of analytically known breakpoints; each smooth segment goes through
# scipy's adaptive quadrature and the reported error estimates are summed
# against the caller's tolerance.


def _pos_at_most(x: TriangularFuzzyNumber, t: float) -> float:
    # Pos{x <= t} = sup of membership over (-inf, t]
    if t >= x.mode:
        return 1.0
    if t < x.lower:
        return 0.0
    return (t - x.lower) / (x.mode - x.lower)


def _pos_at_least(x: TriangularFuzzyNumber, t: float) -> float:
    # Pos{x >= t} = sup of membership over [t, inf)
    if t <= x.mode:
        return 1.0
    if t > x.upper:
        return 0.0
    return (x.upper - t) / (x.upper - x.mode)


def _pos_between(x: TriangularFuzzyNumber, lo: float, hi: float) -> float:
    # Pos{lo < x < hi} for lo < hi; membership is continuous, so the sup over
    # the open interval equals the max over its closure.
    if lo <= x.mode <= hi:
        return 1.0
    if hi < x.mode:
        return x.membership(hi)
    return x.membership(lo)


def _integrate_segments(f, breakpoints, tolerance):
    total = 0.0
    error = 0.0
    for lo, hi in zip(breakpoints[:-1], breakpoints[1:]):
        value, estimate = quad(f, lo, hi, epsabs=tolerance / 16.0, limit=200)
        total += value
        error += estimate
    return total, error


def _clipped_breakpoints(lo: float, hi: float, candidates) -> list[float]:
    # merge candidates within a relative gap so fp noise cannot create
    # degenerate slivers that upset the quadrature
    gap = 1e-12 * (hi - lo)
    merged = [lo]
    for p in sorted(p for p in candidates if lo + gap < p < hi - gap):
        if p - merged[-1] > gap:
            merged.append(p)
    merged.append(hi)
    return merged


def expected_value_numeric(
    x: TriangularFuzzyNumber, quad_tolerance: float = 1e-10
) -> float:
    """Credibilistic mean by direct integration of the two Cr integrals.

    Portions where the integrand is identically 1 contribute exactly; the
    remainder is integrated between the analytic breakpoints (the support
    bounds and the mode). Raises :class:`QuadratureFailure` if the summed
    error estimate exceeds ``quad_tolerance``.
    """
    if quad_tolerance <= 0:
        raise ValueError("quad_tolerance must be positive")
    a, b, c = x.as_tuple()
    total = 0.0
    error = 0.0
    if c > 0:
        lo = max(a, 0.0)
        total += lo  # Cr{x >= r} == 1 on [0, lo)
        value, estimate = _integrate_segments(
            lambda r: credibility_at_least(x, r),
            _clipped_breakpoints(lo, c, (b,)),
            quad_tolerance,
        )
        total += value
        error += estimate
    if a < 0:
        hi = min(c, 0.0)
        total += hi  # Cr{x <= r} == 1 on (hi, 0], subtracted with sign
        value, estimate = _integrate_segments(
            lambda r: credibility_at_most(x, r),
            _clipped_breakpoints(a, hi, (b,)),
            quad_tolerance,
        )
        total -= value
        error += estimate
    if error > quad_tolerance:
        raise QuadratureFailure(
            f"expected-value quadrature error {error:.3e} exceeds {quad_tolerance:.3e}"
        )
    return total


def variance_numeric(
    x: TriangularFuzzyNumber, quad_tolerance: float = 1e-10
) -> float:
    """Credibilistic variance by direct integration.

    Integrates Cr{(x - e)^2 >= r} over r, where the credibility of the
    two-sided tail event is assembled from possibilities:

        Cr = (max(Pos{x <= e-s}, Pos{x >= e+s}) + 1 - Pos{e-s < x < e+s}) / 2

    with s = sqrt(r). Substituting r = s^2 makes the integrand piecewise
    polynomial in s; the breakpoints (where e-s or e+s crosses a support
    bound or the mode, and where the two tail possibilities exchange the max)
    are located analytically.
    """
    if quad_tolerance <= 0:
        raise ValueError("quad_tolerance must be positive")
    a, b, c = x.as_tuple()
    e = expected_value(x)
    span = max(e - a, c - e)
    if span == 0.0:
        return 0.0

    def tail_credibility(s: float) -> float:
        left = _pos_at_most(x, e - s)
        right = _pos_at_least(x, e + s)
        inside = _pos_between(x, e - s, e + s)
        return 0.5 * (max(left, right) + 1.0 - inside)

    candidates = [e - b, b - e, e - a, c - e]
    alpha, beta = b - a, c - b
    if alpha != beta:
        # s at which the two tail possibilities cross
        candidates.append(((c - e) * alpha - (e - a) * beta) / (alpha - beta))
    total, error = _integrate_segments(
        lambda s: 2.0 * s * tail_credibility(s),
        _clipped_breakpoints(0.0, span, candidates),
        quad_tolerance,
    )
    if error > quad_tolerance:
        raise QuadratureFailure(
            f"variance quadrature error {error:.3e} exceeds {quad_tolerance:.3e}"
        )
    return total
