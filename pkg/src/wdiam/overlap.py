"""Maximal product overlap, geometric measure, and nearest product states.

Given the entanglement diameter r, each qubit of the nearest product state
|u_k> = sin(theta_k)|0> + cos(theta_k)|1> satisfies sin(2 theta_k) = c_k / r,
with the branch

    sin^2(theta_k) = (1 + sqrt(1 - c_k^2/r^2)) / 2

for every qubit except that the largest coefficient takes the minus branch
in the asymmetric region.  The direction cosines obey sum_k cos^2 theta_k =
1, and the overlap itself collapses to

    g = 2 r * prod_k sin(theta_k),

which reproduces the region-specific product formulas for g^2.  Slightly
entangled states short-circuit: the nearest product state is the basis state
exciting the largest coefficient and g = c_N.

E_g = -2 log g uses the natural logarithm, so the large-N overlap floor
g^2 = 1/e reads E_g = 1 exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .diameter import Branch, DiameterSolution, equation_residual
from .errors import InconsistentInput
from .state import WState

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class OverlapReport:
    """Maximal product overlap g, its square, and E_g = -2 ln g."""

    g: float
    g_squared: float
    e_g: float


@dataclass(frozen=True)
class ProductState:
    """Per-qubit angles theta_k in [0, pi/2] of a product state."""

    thetas: np.ndarray


def _validate_pair(state: WState, sol: DiameterSolution) -> None:
    n = state.n_qubits
    if sol.branch is Branch.NO_DIAMETER:
        if state.c_max**2 < 0.5 - 1e-12:
            raise InconsistentInput(
                "NO_DIAMETER solution paired with a highly entangled state"
            )
        return
    if sol.r is None or not math.isfinite(sol.r):
        raise InconsistentInput("diameter solution lacks a finite r")
    if sol.r < state.c_max * (1.0 - 1e-12):
        raise InconsistentInput("diameter below the largest coefficient")
    if abs(equation_residual(state, sol.branch, sol.r)) > 1e-8 * n:
        raise InconsistentInput(
            "solution does not satisfy its defining equation for this state"
        )


def _log_sin_sq(state: WState, sol: DiameterSolution) -> np.ndarray:
    """log(sin^2 theta_k) per qubit for the nearest product state."""
    x = (state.coeffs / sol.r) ** 2
    s = np.sqrt(np.maximum(1.0 - x, 0.0))
    log_plus = np.log1p(s) - _LN2
    if sol.branch is Branch.SYMMETRIC_EQ:
        return log_plus
    out = log_plus
    k = state.max_index
    xk = x[k]
    # Minus branch, written as x / (2 (1 + sqrt(1-x))) to stay accurate
    # when r is large and x is tiny.
    out[k] = math.log(xk) - math.log1p(s[k]) - _LN2
    return out


def overlap_from_diameter(state: WState, sol: DiameterSolution) -> OverlapReport:
    """Overlap g^2 from a solved diameter, by the region's product formula.

    The product over qubits is accumulated as a sum of logarithms so that
    states with hundreds of qubits do not underflow.

    Raises
    ------
    InconsistentInput
        When ``sol`` does not belong to ``state`` (wrong branch, wrong
        equation, or a slight-region marker for a highly entangled state).
    """
    _validate_pair(state, sol)
    if sol.branch is Branch.NO_DIAMETER:
        c = state.c_max
        return OverlapReport(g=c, g_squared=c * c, e_g=-2.0 * math.log(c))
    ln_g2 = math.log(4.0 * sol.r * sol.r) + float(_log_sin_sq(state, sol).sum())
    return OverlapReport(
        g=math.exp(0.5 * ln_g2), g_squared=math.exp(ln_g2), e_g=-ln_g2
    )


def geometric_measure(report: OverlapReport) -> float:
    """E_g = -2 ln g; zero exactly for product states (g = 1)."""
    return -2.0 * math.log(report.g)


def nearest_product(state: WState, sol: DiameterSolution) -> ProductState:
    """Angles of the product state achieving the overlap.

    Slightly entangled states return the basis product state exciting the
    largest coefficient (theta = 0 there, pi/2 elsewhere).  Otherwise the
    branch rule above is applied and the direction-cosine constraint
    sum cos^2 = 1 is verified post hoc rather than trusted.
    """
    _validate_pair(state, sol)
    n = state.n_qubits
    if sol.branch is Branch.NO_DIAMETER:
        thetas = np.full(n, math.pi / 2.0)
        thetas[state.max_index] = 0.0
        thetas.flags.writeable = False
        return ProductState(thetas=thetas)

    sin_sq = np.exp(_log_sin_sq(state, sol))
    cos_sq_sum = float((1.0 - sin_sq).sum())
    if abs(cos_sq_sum - 1.0) > 1e-10 * n:
        raise InconsistentInput(
            f"direction cosines sum to {cos_sq_sum!r}, violating the unit constraint"
        )
    thetas = np.arcsin(np.sqrt(np.minimum(sin_sq, 1.0)))
    thetas.flags.writeable = False
    return ProductState(thetas=thetas)


def product_overlap_value(state: WState, prod: ProductState) -> float:
    """Evaluate <w|u_1 ... u_N> = sum_k c_k cos(theta_k) prod_{j != k} sin(theta_j).

    No maximization: plain evaluation for arbitrary angles, stable for large
    N via log-space products (all factors are nonnegative).
    """
    thetas = np.asarray(prod.thetas, dtype=float)
    if thetas.size != state.n_qubits:
        raise InconsistentInput(
            f"angle vector has length {thetas.size}, state has {state.n_qubits}"
        )
    sin = np.sin(thetas)
    cos = np.cos(thetas)
    zero = np.nonzero(sin == 0.0)[0]
    if zero.size >= 2:
        return 0.0
    if zero.size == 1:
        k = int(zero[0])
        others = np.delete(np.arange(state.n_qubits), k)
        log_rest = float(np.log(sin[others]).sum())
        return float(state.coeffs[k] * cos[k] * math.exp(log_rest))
    logs = np.log(sin)
    total = float(logs.sum())
    terms = state.coeffs * cos * np.exp(total - logs)
    return float(terms.sum())
