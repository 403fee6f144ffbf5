"""Brute-force product-overlap maximizer (independent of the diameter theory).

The overlap of a W state with a product state parameterized by angles
theta_k is linear in any single qubit's (cos theta_k, sin theta_k) pair once
the other qubits are held fixed: f = A_k cos theta_k + B_k sin theta_k with

    A_k = c_k * prod_{j != k} sin theta_j,
    B_k = sum_{i != k} c_i cos theta_i prod_{j != i, k} sin theta_j,

both nonnegative.  The exact per-qubit optimum is therefore the normalized
environment vector (A_k, B_k)/hypot, which makes coordinate ascent monotone
with every sub-step solved in closed form.  Multi-start (one deterministic
basis start plus seeded random starts) guards against local maxima; the
basis start pins g_best >= c_N.

Nothing here touches the diameter equations, so this module can serve as
ground truth against every formula in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundaryOptimum, NoConvergedStart
from .state import WState

SWEEP_TOL = 1e-14
SWEEP_CAP = 10_000
# Extra full-bank sweeps after every start has met the tolerance: the
# overlap converges twice as fast as the angles, so a short polish phase
# buys angle accuracy that no f-based stopping rule can certify.
POLISH_SWEEPS = 12


@dataclass(frozen=True)
class OracleResult:
    """Best overlap found by multi-start coordinate ascent.

    ``spread`` is max - min of g over the *random* converged starts (the
    deterministic basis start is a guaranteed candidate, not a diagnostic
    sample); values above ~1e-6 hint at local-maximum structure.
    """

    g_best: float
    thetas_best: np.ndarray
    starts_used: int
    converged: bool
    spread: float
    sweeps: int


@dataclass(frozen=True)
class StationarityReport:
    """Agreement of an oracle optimum with the stationarity relations
    sin(2 theta_k)/c_k = 1/r shared across qubits."""

    max_rel_dev: float
    implied_r: float


def _exclusive_products(s: np.ndarray) -> np.ndarray:
    """prod_{j != i} s[..., j] along the last axis, zero-safe."""
    pre = np.cumprod(s, axis=-1)
    suf = np.cumprod(s[..., ::-1], axis=-1)[..., ::-1]
    out = np.ones_like(s)
    out[..., 1:] *= pre[..., :-1]
    out[..., :-1] *= suf[..., 1:]
    return out


def _overlap_rows(c2: np.ndarray, sin: np.ndarray, cos: np.ndarray) -> np.ndarray:
    return (c2 * cos * _exclusive_products(sin)).sum(axis=-1)


def _ascent(c_rows: np.ndarray, sin: np.ndarray, cos: np.ndarray,
            tol: float, cap: int, signed: bool = False):
    """Coordinate ascent over flat (rows, N) start banks.

    Mutates ``sin``/``cos`` in place.  A row freezes once a full sweep
    improves its overlap by less than ``tol``; only the still-active rows
    are swept afterwards, so one slowly converging start cannot stall the
    whole bank.  Returns (f, converged, sweeps_done).
    """
    n_rows, n = sin.shape

    def sweep_once(sa, ca, cc):
        for k in range(n):
            masked = sa.copy()
            masked[:, k] = 1.0
            prods = _exclusive_products(masked)
            weighted = cc * ca * prods
            b_k = weighted.sum(axis=-1) - weighted[:, k]
            a_k = cc[:, k] * prods[:, k]
            h = np.hypot(a_k, b_k)
            safe = np.where(h > 0.0, h, 1.0)
            upd = h > 0.0
            sa[:, k] = np.where(upd, b_k / safe, sa[:, k])
            ca[:, k] = np.where(upd, a_k / safe, ca[:, k])

    f = _overlap_rows(c_rows, sin, cos)
    converged = np.zeros(n_rows, dtype=bool)
    active = np.arange(n_rows)
    sweeps = 0
    while active.size and sweeps < cap:
        sweeps += 1
        sa, ca, cc = sin[active], cos[active], c_rows[active]
        sweep_once(sa, ca, cc)
        f_new = _overlap_rows(cc, sa, ca)
        done = (f_new - f[active]) < tol
        sin[active], cos[active], f[active] = sa, ca, f_new
        converged[active[done]] = True
        active = active[~done]
    for _ in range(POLISH_SWEEPS):
        sweeps += 1
        sweep_once(sin, cos, np.asarray(c_rows))
    f = _overlap_rows(c_rows, sin, cos)
    if signed:
        f = np.abs(f)
    return f, converged, sweeps


def _start_bank(state: WState, n_starts: int, entropy, signed: bool = False):
    """Basis start (row 0) plus seeded random starts, as (sin, cos) rows."""
    n = state.n_qubits
    sin = np.ones((n_starts, n))
    cos = np.zeros((n_starts, n))
    sin[0, state.max_index] = 0.0
    cos[0, state.max_index] = 1.0
    if n_starts > 1:
        children = np.random.SeedSequence(entropy).spawn(n_starts - 1)
        high = 2.0 * math.pi if signed else math.pi / 2.0
        for row, child in enumerate(children, start=1):
            thetas = np.random.default_rng(child).uniform(0.0, high, n)
            sin[row] = np.sin(thetas)
            cos[row] = np.cos(thetas)
    return sin, cos


def _result_from_rows(state, f, sin, cos, converged, sweeps) -> OracleResult:
    if not converged.any():
        raise NoConvergedStart(f"no start converged within {SWEEP_CAP} sweeps")
    best = int(np.argmax(f))
    random_conv = converged[1:]
    if random_conv.any():
        g_rand = f[1:][random_conv]
        spread = float(g_rand.max() - g_rand.min())
    else:
        spread = 0.0
    thetas = np.arctan2(np.abs(sin[best]), np.abs(cos[best]))
    thetas.flags.writeable = False
    return OracleResult(
        g_best=float(f[best]),
        thetas_best=thetas,
        starts_used=int(f.size),
        converged=bool(converged[best]),
        spread=spread,
        sweeps=int(sweeps),
    )


def maximize_overlap(
    state: WState,
    n_starts: int = 32,
    seed: int = 0,
    *,
    tol: float = SWEEP_TOL,
    sweep_cap: int = SWEEP_CAP,
) -> OracleResult:
    """Maximize |<w|u_1...u_N>| over product states by multi-start
    coordinate ascent.

    Parameters
    ----------
    state : WState
    n_starts : int
        Total starts; start 0 is always the basis product state exciting
        the largest coefficient, the rest draw angles uniformly from
        [0, pi/2] using per-start seeds spawned from ``seed`` (bit-for-bit
        reproducible for fixed inputs).
    seed : int

    Raises
    ------
    NoConvergedStart
        All starts hit the sweep cap.
    """
    if n_starts < 1:
        raise ValueError("n_starts must be >= 1")
    sin, cos = _start_bank(state, n_starts, seed)
    c_rows = np.broadcast_to(state.coeffs, sin.shape)
    f, conv, sweeps = _ascent(c_rows, sin, cos, tol, sweep_cap)
    return _result_from_rows(state, f, sin, cos, conv, sweeps)


def maximize_overlap_many(
    states: list[WState],
    n_starts: int = 32,
    seed: int = 0,
    *,
    tol: float = SWEEP_TOL,
    sweep_cap: int = SWEEP_CAP,
) -> list[OracleResult]:
    """Batch :func:`maximize_overlap`, vectorized across states that share a
    qubit count.  Per-state seeds derive from (seed, position), so results
    do not depend on the grouping."""
    if n_starts < 1:
        raise ValueError("n_starts must be >= 1")
    results: list[OracleResult | None] = [None] * len(states)
    by_n: dict[int, list[int]] = {}
    for idx, st in enumerate(states):
        by_n.setdefault(st.n_qubits, []).append(idx)
    for n, idxs in by_n.items():
        banks = [_start_bank(states[i], n_starts, (seed, i)) for i in idxs]
        sin = np.concatenate([bk[0] for bk in banks])
        cos = np.concatenate([bk[1] for bk in banks])
        c_rows = np.repeat(
            np.stack([states[i].coeffs for i in idxs]), n_starts, axis=0
        )
        f, conv, sweeps = _ascent(c_rows, sin, cos, tol, sweep_cap)
        for row, i in enumerate(idxs):
            sl = slice(row * n_starts, (row + 1) * n_starts)
            results[i] = _result_from_rows(
                states[i], f[sl], sin[sl], cos[sl], conv[sl], sweeps
            )
    return results  # type: ignore[return-value]


def maximize_overlap_signed(
    state: WState,
    n_starts: int = 32,
    seed: int = 0,
    *,
    tol: float = SWEEP_TOL,
    sweep_cap: int = SWEEP_CAP,
) -> OracleResult:
    """Spot-check variant with signed local amplitudes (phases 0 or pi).

    Each qubit carries a full real two-vector instead of first-quadrant
    angles; used to confirm that restricting to nonnegative amplitudes
    loses no optimum for nonnegative coefficients.
    """
    if n_starts < 1:
        raise ValueError("n_starts must be >= 1")
    sin, cos = _start_bank(state, n_starts, seed, signed=True)
    c_rows = np.broadcast_to(state.coeffs, sin.shape)
    f, conv, sweeps = _ascent(c_rows, sin, cos, tol, sweep_cap, signed=True)
    return _result_from_rows(state, f, sin, cos, conv, sweeps)


def stationarity_check(state: WState, res: OracleResult) -> StationarityReport:
    """Check the converged angles against sin(2 theta_k)/c_k = 1/r.

    Returns the largest pairwise relative deviation of the ratios (over
    qubits with c_k > 1e-12) and the implied diameter r.

    Raises
    ------
    BoundaryOptimum
        The optimum is a basis product state (slight region), where the
        ratios degenerate.
    """
    mask = state.coeffs > 1e-12
    sin2 = np.sin(2.0 * res.thetas_best[mask])
    if sin2.min() < 1e-8:
        raise BoundaryOptimum("optimum at a basis product state")
    ratios = sin2 / state.coeffs[mask]
    mid = float(np.median(ratios))
    dev = float((ratios.max() - ratios.min()) / mid)
    return StationarityReport(max_rel_dev=dev, implied_r=1.0 / mid)
