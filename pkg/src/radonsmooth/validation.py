"""Input checks shared by the estimators and the CLI."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exceptions import DimensionMismatchError, InputError
from .poly import MultiPoly, parse_poly, validate_surface
from .regions import Point3, frac


def check_surface(S, dimension: int | None = None) -> MultiPoly:
    """Accept a polynomial or its text form; enforce the germ conditions."""
    if isinstance(S, str):
        S = parse_poly(S, dimension)
    if not isinstance(S, MultiPoly):
        raise InputError(f"expected a polynomial, got {type(S).__name__}")
    if dimension is not None and S.dimension != dimension:
        raise DimensionMismatchError(f"expected dimension {dimension}, got {S.dimension}")
    return validate_surface(S)


def check_points(X, dimension: int) -> np.ndarray:
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != dimension:
        raise DimensionMismatchError(f"points must have shape (m, {dimension})")
    if not np.all(np.isfinite(arr)):
        raise InputError("points must be finite")
    return arr


def check_triples(X) -> list:
    """Exponent triples ``(1/p, 1/q, s)`` as exact points."""
    out = []
    for row in X:
        row = list(row)
        if len(row) != 3:
            raise InputError(f"expected (1/p, 1/q, s) triples, got {row!r}")
        out.append(Point3(*row))
    return out


def reciprocal(p) -> Fraction:
    """``1/p`` for an exponent ``1 < p < infinity`` given as a rational."""
    p = frac(p)
    if not p > 1:
        raise InputError(f"exponent must satisfy 1 < p < infinity, got {p}")
    return 1 / p


def check_seed(seed) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
        raise InputError(f"seed must be a nonnegative integer, got {seed!r}")
    return int(seed)


def check_positive_int(value, name: str, minimum: int = 1) -> int:
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    if not isinstance(value, (int, np.integer)) or value < minimum:
        raise InputError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def check_direction(direction: Sequence[float], dimension: int) -> tuple:
    d = tuple(float(v) for v in direction)
    if len(d) != dimension + 1:
        raise DimensionMismatchError(f"direction must have {dimension + 1} entries")
    if not all(math.isfinite(v) for v in d) or not any(d):
        raise InputError("direction must be finite and nonzero")
    return d
