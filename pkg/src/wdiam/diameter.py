"""Entanglement-diameter equations for highly entangled W states.

Symmetric region (c_N below the first critical value): r solves

    sum_{i=1}^{N} sqrt(r^2 - c_i^2) = (N - 2) r,                (all + signs)

and Theorem-style bounds confine it to 1/4 <= r^2 <= 1/2.  Asymmetric region
(first critical value <= c_N < second): only the largest coefficient's
radical flips sign,

    sum_{i<N} sqrt(r^2 - c_i^2) - sqrt(r^2 - c_N^2) = (N - 2) r,

with r^2 >= 1/3, and r diverges as c_N approaches the second critical value.
Slightly entangled states have no diameter at all.

The asymmetric equation is solved in the reciprocal u = 1/r, where the
divergence becomes a benign root at u -> 0.  Dividing the equation by r and
writing each radical as 1 - beta_i with beta_i = (c_i u)^2 / (1 + sqrt(1 -
(c_i u)^2)) collapses it to

    chi(u) = beta_N/u^2 - sum_{i<N} beta_i/u^2 = 0,

which evaluates without cancellation even at u ~ 1e-8 and has the exact
closed-form endpoint chi(0) = (2 c_N^2 - 1)/2 < 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    AmbiguousRoot,
    ConvergenceFailure,
    DivergedToInfinity,
    WrongRegion,
)
from .regions import Region, RegionReport, classify, second_critical
from .rootfind import bracketed_root
from .state import WState

# Distance of c_N from the second critical value below which the asymmetric
# solver refuses to chase the divergence.
DIVERGENCE_TOL = 1e-12


class Branch(str, Enum):
    SYMMETRIC_EQ = "symmetric"
    ASYMMETRIC_EQ = "asymmetric"
    NO_DIAMETER = "none"


@dataclass(frozen=True)
class DiameterSolution:
    """Solved diameter.  ``r`` is None exactly when ``branch`` is NO_DIAMETER.

    ``residual`` is the defining equation's left-minus-right at the returned
    root; for the asymmetric branch it is measured in the transformed
    (divided-by-r) variable, which stays meaningful as r grows large.
    """

    r: float | None
    branch: Branch
    residual: float
    iterations: int


def _symmetric_funcs(coeffs_sq: np.ndarray, n: int):
    slope = float(n - 2)

    def f(r: float) -> float:
        gaps = np.maximum(r * r - coeffs_sq, 0.0)
        return float(np.sqrt(gaps).sum() - slope * r)

    def fprime(r: float) -> float:
        gaps = r * r - coeffs_sq
        if np.any(gaps <= 0.0):
            return math.inf
        return float((r / np.sqrt(gaps)).sum() - slope)

    return f, fprime


def _asymmetric_funcs(rest_sq: np.ndarray, cmax_sq: float):
    def chi(u: float) -> float:
        uu = u * u
        s_max = math.sqrt(max(1.0 - cmax_sq * uu, 0.0))
        s_rest = np.sqrt(np.maximum(1.0 - rest_sq * uu, 0.0))
        return float(cmax_sq / (1.0 + s_max) - (rest_sq / (1.0 + s_rest)).sum())

    def chiprime(u: float) -> float:
        uu = u * u
        gap_max = 1.0 - cmax_sq * uu
        gaps = 1.0 - rest_sq * uu
        if gap_max <= 0.0 or np.any(gaps <= 0.0):
            return math.inf
        s_max = math.sqrt(gap_max)
        s_rest = np.sqrt(gaps)
        term_max = cmax_sq * cmax_sq * u / (s_max * (1.0 + s_max) ** 2)
        term_rest = (rest_sq * rest_sq * u / (s_rest * (1.0 + s_rest) ** 2)).sum()
        return float(term_max - term_rest)

    return chi, chiprime


def solve_symmetric(
    state: WState,
    report: RegionReport | None = None,
    *,
    require_region: bool = True,
) -> DiameterSolution:
    """Solve the all-plus diameter equation.

    The state must be in the symmetric region (or on the r1 boundary, where
    the solution degenerates to r = c_N).  Bisection plus Newton polish on
    the bracket [c_N, 1/sqrt(2) + 1e-6]; the upper end is safe because the
    solution obeys r^2 <= 1/2.

    Raises
    ------
    WrongRegion, ConvergenceFailure
    """
    if require_region:
        rep = report if report is not None else classify(state)
        if rep.region is not Region.SYMMETRIC and "on_r1" not in rep.boundary_flags:
            raise WrongRegion(f"state is in the {rep.region.value} region")

    n = state.n_qubits
    coeffs_sq = state.coeffs**2
    f, fprime = _symmetric_funcs(coeffs_sq, n)
    lo = state.c_max
    f_lo = f(lo)
    if f_lo >= 0.0:
        # On the r1 boundary the root is c_N itself; anything beyond
        # round-off of that case means the caller is in the wrong region.
        if f_lo <= 1e-12 * n:
            return DiameterSolution(lo, Branch.SYMMETRIC_EQ, f_lo, 0)
        raise WrongRegion(
            "symmetric equation has no root at or above the largest coefficient"
        )
    hi = 1.0 / math.sqrt(2.0) + 1e-6
    f_hi = f(hi)
    if f_hi < 0.0:
        raise ConvergenceFailure("symmetric diameter escaped its r^2 <= 1/2 bound")
    res = bracketed_root(f, lo, hi, fprime, f_lo=f_lo, f_hi=f_hi)
    return DiameterSolution(res.root, Branch.SYMMETRIC_EQ, res.residual, res.iterations)


def solve_asymmetric(
    state: WState,
    report: RegionReport | None = None,
    *,
    require_region: bool = True,
) -> DiameterSolution:
    """Solve the flipped-last-radical diameter equation in u = 1/r.

    Raises
    ------
    WrongRegion
        State not in the asymmetric region.
    DivergedToInfinity
        c_N within 1e-12 of the second critical value; the overlap there is
        the largest coefficient itself.
    AmbiguousRoot
        Defensive: more than one sign change detected in the u bracket.
    ConvergenceFailure
    """
    rep = report
    if require_region:
        rep = rep if rep is not None else classify(state)
        if rep.region is not Region.ASYMMETRIC:
            raise WrongRegion(f"state is in the {rep.region.value} region")
    r2 = rep.r2 if rep is not None else second_critical(state)
    if r2 - state.c_max <= DIVERGENCE_TOL:
        raise DivergedToInfinity(
            "largest coefficient sits at the second critical value; use g = c_N"
        )

    cmax = state.c_max
    cmax_sq = cmax * cmax
    rest = state.rest()
    rest_sq = rest * rest
    chi, chiprime = _asymmetric_funcs(rest_sq, cmax_sq)

    lo = 0.0
    chi_lo = 0.5 * (2.0 * cmax_sq - 1.0)  # chi(0), exact
    hi = 1.0 / cmax
    chi_hi = chi(hi)
    if chi_lo >= 0.0:
        raise WrongRegion("largest coefficient at or beyond the second critical value")
    if chi_hi < 0.0:
        if chi_hi >= -1e-12 * state.n_qubits:
            # r1 boundary: the root sits at u = 1/c_N, i.e. r = c_N.
            return DiameterSolution(
                cmax, Branch.ASYMMETRIC_EQ, chi_hi / (cmax_sq * cmax_sq), 0
            )
        raise WrongRegion("largest coefficient below the first critical value")

    # The equation is claimed to have a unique root; fail loudly if a coarse
    # scan ever exposes extra sign changes instead of guessing among them.
    samples = np.linspace(lo, hi, 10)[1:-1]
    signs = [chi_lo < 0.0] + [chi(u) < 0.0 for u in samples] + [chi_hi < 0.0]
    if sum(signs[i] != signs[i + 1] for i in range(len(signs) - 1)) > 1:
        raise AmbiguousRoot("multiple sign changes in the reciprocal bracket")

    res = bracketed_root(chi, lo, hi, chiprime, f_lo=chi_lo, f_hi=chi_hi)
    u = res.root
    if u <= 0.0:
        raise ConvergenceFailure("reciprocal root collapsed to zero")
    residual = res.residual * u * u  # transformed equation: chi * u^2
    return DiameterSolution(1.0 / u, Branch.ASYMMETRIC_EQ, residual, res.iterations)


def solve(state: WState, report: RegionReport | None = None) -> DiameterSolution:
    """Region-dispatched diameter: symmetric or asymmetric equation, or the
    NO_DIAMETER marker for slightly entangled states."""
    rep = report if report is not None else classify(state)
    if rep.region is Region.SLIGHT:
        return DiameterSolution(None, Branch.NO_DIAMETER, 0.0, 0)
    if rep.region is Region.SYMMETRIC:
        return solve_symmetric(state, rep)
    return solve_asymmetric(state, rep)


def equation_residual(state: WState, branch: Branch, r: float) -> float:
    """Defining-equation residual of ``r`` under ``branch`` (transformed
    variable for the asymmetric branch).  Used to cross-validate that a
    solution belongs to a state."""
    if branch is Branch.SYMMETRIC_EQ:
        f, _ = _symmetric_funcs(state.coeffs**2, state.n_qubits)
        return f(r)
    if branch is Branch.ASYMMETRIC_EQ:
        rest = state.rest()
        chi, _ = _asymmetric_funcs(rest * rest, state.c_max**2)
        u = 1.0 / r
        return chi(u) * u * u
    raise ValueError("no defining equation for the NO_DIAMETER branch")
