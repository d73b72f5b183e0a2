import os
import sys

import numpy as np
from hypothesis import HealthCheck, settings

from radonsmooth import MultiPoly, parse_poly

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def random_sparse_poly(seed: int, n: int = 3, degree: int = 6, terms: int = 4) -> MultiPoly:
    """Sparse polynomial with integer coefficients and monomials of degree 2..degree."""
    rng = np.random.default_rng(seed)
    coeffs = {}
    while len(coeffs) < terms:
        total = int(rng.integers(2, degree + 1))
        cuts = np.sort(rng.integers(0, total + 1, size=n - 1))
        alpha = tuple(int(v) for v in np.diff(np.concatenate([[0], cuts, [total]])))
        c = int(rng.integers(1, 6)) * (1 if rng.random() < 0.5 else -1)
        coeffs[alpha] = c
    return MultiPoly(n, coeffs)


# (text, dimension) for the analytic part of the catalog
CATALOG_TEXT = [
    ("t^2", 1),
    ("t^3", 1),
    ("t^5", 1),
    ("t1^2 + t2^2", 2),
    ("t1^2 - 2 t1 t2 + t2^2", 2),
    ("t1^2 t2 + t1 t2^3", 2),
    ("t1^2 - 2 t1 t2 + t2^2 + t2^4", 2),
    ("t1 t2", 2),
    ("t1^3 + t2^5", 2),
]
RANDOM_SEEDS = (11, 23, 47)


def catalog():
    polys = [(text, parse_poly(text, n)) for text, n in CATALOG_TEXT]
    polys += [(f"random-{s}", random_sparse_poly(s)) for s in RANDOM_SEEDS]
    return polys
