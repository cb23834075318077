"""Python access to the nearcurve library.

Rationals go in as strings or Fractions and integers come back as Python ints.
"""

from fractions import Fraction

from . import _nearcurve
from ._nearcurve import CertificationError, InputError, InvariantViolation

__all__ = [
    "CertificationError",
    "InputError",
    "InvariantViolation",
    "compute_R",
    "congruence_count",
    "convergents",
    "count_points",
    "decompose",
    "interpolate",
    "lambda_det",
    "run",
]


def _text(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _raw(points):
    return [(int(x), str(int(y))) for x, y in points]


def count_points(coefficients, X, delta, jobs=1):
    """Integer points (x, y) with X <= x <= 2X and |y - f(x)| <= delta."""
    pts = _nearcurve.count_points([_text(c) for c in coefficients], _text(X), _text(delta), jobs)
    return [(x, int(y)) for x, y in pts]


def lambda_det(points):
    return int(_nearcurve.lambda_det(_raw(points)))


def interpolate(points, cap):
    """Coefficients, constant first, of the interpolant through the points."""
    return [Fraction(c) for c in _nearcurve.interpolate(_raw(points), cap)]


def compute_R(points, n, jobs=1):
    return _nearcurve.compute_R(_raw(points), n, jobs)


def decompose(points, n, delta=0):
    return _nearcurve.decompose(_raw(points), n, _text(delta))


def congruence_count(coefficients, a, b):
    return _nearcurve.congruence_count([_text(c) for c in coefficients], a, b)


def convergents(alpha, s_max):
    return [Fraction(int(r), int(s)) for r, s in _nearcurve.convergents(_text(alpha), str(s_max))]


def run(args):
    return _nearcurve.run([str(a) for a in args])
