"""Critical values of the largest coefficient and the three-region split.

For a W state with largest coefficient c_N the parameter space splits into

* symmetric region   c_N < r1      (overlap symmetric in all coefficients),
* asymmetric region  r1 <= c_N < r2,
* slightly entangled c_N >= r2     (overlap equals c_N, g^2 > 1/2),

where the first critical value r1 solves

    sum_{i<N} sqrt(r1^2 - c_i^2) = (N - 2) r1

over the remaining coefficients (it does not depend on c_N itself) and the
second critical value is r2 = sqrt(sum_{i<N} c_i^2) = sqrt(1 - c_N^2).
r1 always exists, is unique, and is smaller than r2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConvergenceFailure
from .rootfind import bracketed_root
from .state import WState

# |c_N - r_i| below this sets the corresponding boundary flag.
BOUNDARY_TOL = 1e-10


class Region(str, Enum):
    SYMMETRIC = "symmetric"
    ASYMMETRIC = "asymmetric"
    SLIGHT = "slight"


@dataclass(frozen=True)
class RegionReport:
    """Classification of one state.

    ``boundary_flags`` holds any of ``"on_r1"``, ``"on_r2"`` when the largest
    coefficient sits within ``BOUNDARY_TOL`` of a critical value.
    """

    r1: float
    r2: float
    region: Region
    boundary_flags: frozenset[str]
    c_max: float
    max_index: int


def _critical_sum(rest_sq: np.ndarray, n_terms: int):
    """Left side minus right side of the first-critical-value equation,
    H(r) = sum sqrt(r^2 - c_i^2) - (M - 1) r over M = n_terms coefficients.

    H is strictly increasing (each summand has slope >= 1 in r), which makes
    the root unique.  Returns (H, H') as callables of r.
    """
    slope = float(n_terms - 1)

    def h(r: float) -> float:
        gaps = np.maximum(r * r - rest_sq, 0.0)
        return float(np.sqrt(gaps).sum() - slope * r)

    def hprime(r: float) -> float:
        gaps = r * r - rest_sq
        if np.any(gaps <= 0.0):
            return math.inf
        return float((r / np.sqrt(gaps)).sum() - slope)

    return h, hprime


def _r1_of_rest_sq(rest_sq: np.ndarray) -> float:
    """Root of the critical-value equation over the given squared
    coefficients (M of them, right-hand slope M - 1).

    The equation is scale covariant: scaling all coefficients by lambda
    scales the root by lambda, so callers may solve on a normalized shape.
    """
    rest_sq = np.asarray(rest_sq, dtype=float)
    h, hprime = _critical_sum(rest_sq, rest_sq.size)

    lo = math.sqrt(float(np.max(rest_sq)))
    h_lo = h(lo)
    if h_lo >= 0.0:
        # Possible only when the other coefficients have a single nonzero
        # entry; then H(max) = 0 and r1 = max = r2.
        return lo
    hi, h_hi = 1.0, h(1.0)
    if h_hi < 0.0:
        # Cannot happen for normalized states (sqrt(1-c^2) >= 1-c^2 makes
        # H(1) >= 0); widen once defensively before failing.
        hi, h_hi = 2.0, h(2.0)
        if h_hi < 0.0:
            raise ConvergenceFailure("no sign change for r1 on [max c_i, 2]")
    res = bracketed_root(h, lo, hi, hprime, f_lo=h_lo, f_hi=h_hi)
    return res.root


def first_critical(state: WState, exclude_index: int | None = None) -> float:
    """First critical value r1 for the coefficient at ``exclude_index``
    (default: the largest coefficient).

    Solves ``sum sqrt(r1^2 - c_i^2) = (N - 2) r1`` over the other N - 1
    coefficients by bracketed bisection plus Newton polish on
    ``[max_i c_i, 1]``; the residual of the returned root is at machine
    level (well below 1e-12).

    Raises
    ------
    ConvergenceFailure
        If the root iteration cap is hit (numerical pathology).
    """
    rest = state.rest(exclude_index)
    return _r1_of_rest_sq(rest * rest)


def second_critical(state: WState, exclude_index: int | None = None) -> float:
    """Second critical value r2 = sqrt(sum of the other squared coefficients)."""
    rest = state.rest(exclude_index)
    return math.sqrt(float(np.dot(rest, rest)))


def classify(state: WState, boundary_tol: float = BOUNDARY_TOL) -> RegionReport:
    """Compute r1, r2 and the entanglement region of the largest coefficient.

    Region labels use strict comparisons (symmetric iff c_N < r1, slight iff
    c_N >= r2); proximity to either critical value within ``boundary_tol``
    is reported through the boundary flags.  At c_N = r1 both diameter
    equations share the solution r = c_N, so the label choice there does not
    change any derived quantity.
    """
    r1 = first_critical(state)
    r2 = second_critical(state)
    c = state.c_max

    flags = set()
    if abs(c - r1) <= boundary_tol:
        flags.add("on_r1")
    if abs(c - r2) <= boundary_tol:
        flags.add("on_r2")

    if c >= r2:
        region = Region.SLIGHT
    elif c >= r1:
        region = Region.ASYMMETRIC
    else:
        region = Region.SYMMETRIC
    return RegionReport(
        r1=r1,
        r2=r2,
        region=region,
        boundary_flags=frozenset(flags),
        c_max=c,
        max_index=state.max_index,
    )
