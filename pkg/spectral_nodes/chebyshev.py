"""Chebyshev polynomials of the first kind and the node polynomials built from them.

Polynomials are never expanded into monomial coefficients; everything is evaluated from
T_n values obtained with the three-term recurrence, which also works outside [-1, 1].
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from spectral_nodes.exceptions import InvalidDegreeError, ParityError
from spectral_nodes.utils import as_float_array, scalar_or_array


def cheb_eval(n, x):
    """Return T_n(x) for a scalar or an array of points."""
    _check_degree(n)
    points = as_float_array(x)
    previous, current = np.ones_like(points), points.copy()
    if n == 0:
        return scalar_or_array(previous, x)
    for _ in range(n - 1):
        previous, current = current, 2.0 * points * current - previous
    return scalar_or_array(current, x)


def cheb_derivative_eval(n, x):
    """Return T_n'(x) from the differentiated recurrence T'_{k+1} = 2T_k + 2xT'_k - T'_{k-1}."""
    _check_degree(n)
    points = as_float_array(x)
    t_prev, t_cur = np.ones_like(points), points.copy()
    d_prev, d_cur = np.zeros_like(points), np.ones_like(points)
    if n == 0:
        return scalar_or_array(d_prev, x)
    for _ in range(n - 1):
        d_prev, d_cur = d_cur, 2.0 * t_cur + 2.0 * points * d_cur - d_prev
        t_prev, t_cur = t_cur, 2.0 * points * t_cur - t_prev
    return scalar_or_array(d_cur, x)


def cheb_antiderivative_eval(s, x):
    """Return (T_{s+1}(x)/(s+1) - T_{s-1}(x)/(s-1)) / 2, an antiderivative of T_s."""
    if s < 2:
        raise InvalidDegreeError(f"the antiderivative formula needs s >= 2, got s={s}")
    lower, _, upper = _neighbours(s, as_float_array(x))
    return scalar_or_array(0.5 * (upper / (s + 1) - lower / (s - 1)), x)


class NodePolynomialKind(enum.Enum):
    P = "p"
    QTILDE = "q-tilde"
    QSCALED = "q-scaled"


@dataclass(frozen=True)
class NodePolynomial:
    """
    A monic polynomial of degree s+1 whose zeros define a node distribution.

    `P` (odd s >= 3) has the derivative (s+1)/2^{s-1} T_s and vanishes at +-1. `QTILDE`
    (even s) vanishes at +-1 but its derivative carries an extra constant. `QSCALED` (even s)
    has the derivative (s+1)/2^{s-1} T_s but its outer zeros lie beyond +-1.
    """

    kind: NodePolynomialKind
    s: int

    def __post_init__(self):
        if self.kind is NodePolynomialKind.P:
            if self.s % 2 == 0:
                raise ParityError(f"node polynomial P needs odd s, got s={self.s}")
            if self.s < 3:
                raise InvalidDegreeError(f"node polynomial P needs s >= 3, got s={self.s}")
        else:
            if self.s % 2 == 1:
                raise ParityError(
                    f"node polynomial {self.kind.value} needs even s, got s={self.s}"
                )
            if self.s < 2:
                raise InvalidDegreeError(
                    f"node polynomial {self.kind.value} needs s >= 2, got s={self.s}"
                )

    @property
    def degree(self):
        return self.s + 1

    @property
    def derivative_scale(self):
        """The factor (s+1)/2^{s-1} in front of T_s in the derivative."""
        return math.ldexp(self.s + 1, 1 - self.s)

    def __call__(self, x):
        return node_poly_eval(self, x)


def node_poly_eval(p, x):
    s = p.s
    points = as_float_array(x)
    lower, _, upper = _neighbours(s, points)
    difference = upper / (s + 1) - lower / (s - 1)

    if p.kind is NodePolynomialKind.P:
        value = math.ldexp(s + 1, 1 - s) * (0.5 * difference + 1.0 / (s * s - 1))
    elif p.kind is NodePolynomialKind.QTILDE:
        value = math.ldexp(s + 1, -s) * (difference + 2.0 * points / (s * s - 1))
    else:
        value = math.ldexp(s + 1, -s) * difference
    return scalar_or_array(value, x)


def node_poly_derivative_eval(p, x):
    t_s = as_float_array(cheb_eval(p.s, as_float_array(x)))
    if p.kind is NodePolynomialKind.QTILDE:
        t_s = t_s + 1.0 / (p.s * p.s - 1)
    return scalar_or_array(p.derivative_scale * t_s, x)


def _neighbours(s, points):
    """Return T_{s-1}, T_s and T_{s+1} at `points` from a single recurrence pass."""
    previous, current = np.ones_like(points), points.copy()
    for _ in range(s - 1):
        previous, current = current, 2.0 * points * current - previous
    if s == 0:
        return points.copy(), previous, points.copy()
    return previous, current, 2.0 * points * current - previous


def _check_degree(n):
    if n < 0 or int(n) != n:
        raise InvalidDegreeError(f"Chebyshev degree must be a non-negative integer, got {n}")
