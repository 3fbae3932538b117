"""Scalar handling for the two arithmetic modes.

A computation runs either entirely over exact rationals (fractions.Fraction)
or entirely over float64.  Helpers here coerce, format, and draw random
scalars; everything downstream infers its mode from the values it holds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"

# Singular values below RANK_RTOL * s_max count as zero in float rank
# estimation (all tested matrices are small and well-conditioned).
RANK_RTOL = 1e-8

# Absolute tolerance for float-mode identity residuals, scaled by input norm.
FLOAT_TOL = 1e-9


def is_exact(x) -> bool:
    return isinstance(x, (Fraction, int))


def as_scalar(x, mode: str) -> Scalar:
    """Coerce x into the given mode; ints are exact in exact mode."""
    if mode == EXACT:
        if isinstance(x, float):
            raise TypeError("float value in an exact computation: %r" % x)
        return Fraction(x)
    return float(x)


def mode_of(x) -> str:
    return EXACT if is_exact(x) else FLOAT


def exact_sqrt(q: Fraction):
    """Square root of a non-negative rational, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("square root of negative rational")
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def scalar_to_json(x: Scalar):
    """Exact scalars as [num_string, den_string]; floats as numbers."""
    if is_exact(x):
        f = Fraction(x)
        return [str(f.numerator), str(f.denominator)]
    return float(x)


def scalar_from_json(v) -> Scalar:
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise ValueError("exact scalar must be a [num, den] pair")
        return Fraction(int(v[0]), int(v[1]))
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, bool):
        raise ValueError("boolean is not a scalar")
    if isinstance(v, int):
        return Fraction(v)
    return float(v)


def scalar_repr(x: Scalar):
    """Compact JSON value: ints stay ints, other rationals become 'p/q'."""
    if is_exact(x):
        f = Fraction(x)
        if f.denominator == 1:
            return int(f)
        return "%d/%d" % (f.numerator, f.denominator)
    return float(x)


def rand_fraction(rng, lo: int = -9, hi: int = 9, max_den: int = 4) -> Fraction:
    """Small random rational, the generic-position workhorse of exact suites."""
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_scalar(rng, mode: str) -> Scalar:
    f = rand_fraction(rng)
    return f if mode == EXACT else float(f)
