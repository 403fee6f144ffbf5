"""Safeguarded scalar root finding: bracketing bisection with Newton polish.

Every equation solved in this package (critical values, both diameter
equations) is smooth on a bracket with a guaranteed sign change, so the
strategy is: a short bisection phase to shrink the bracket, then Newton
steps that are rejected (and replaced by a bisection step) whenever they
leave the bracket or the derivative degenerates.  This keeps the guaranteed
convergence of bisection and the terminal quadratic rate of Newton.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

from .errors import ConvergenceFailure

MAX_BISECT = 200
NEWTON_STEPS = 20


class RootResult(NamedTuple):
    root: float
    residual: float
    iterations: int


def bracketed_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    fprime: Callable[[float], float] | None = None,
    *,
    f_lo: float | None = None,
    f_hi: float | None = None,
    coarse_bisections: int = 24,
    xtol_rel: float = 4e-16,
    xtol_abs: float = 0.0,
) -> RootResult:
    """Find x in [lo, hi] with f(x) = 0, given f(lo) <= 0 <= f(hi).

    Parameters
    ----------
    f, fprime : callables
        The function and (optionally) its derivative.  Without ``fprime``
        the Newton phase is skipped and bisection runs to full precision.
    f_lo, f_hi : float, optional
        Precomputed endpoint values, to avoid re-evaluation.
    coarse_bisections : int
        Bisection steps before switching to safeguarded Newton.

    Raises
    ------
    ConvergenceFailure
        If the endpoint signs do not bracket a root, or the iteration cap
        is reached without meeting the tolerance.
    """
    if not lo <= hi:
        raise ConvergenceFailure(f"empty bracket [{lo}, {hi}]")
    f_lo = f(lo) if f_lo is None else f_lo
    if f_lo == 0.0:
        return RootResult(lo, 0.0, 0)
    f_hi = f(hi) if f_hi is None else f_hi
    if f_hi == 0.0:
        return RootResult(hi, 0.0, 0)
    if f_lo > 0.0 or f_hi < 0.0:
        raise ConvergenceFailure(
            f"no sign change on bracket [{lo}, {hi}]: f_lo={f_lo!r}, f_hi={f_hi!r}"
        )

    def done(a: float, b: float) -> bool:
        return (b - a) <= xtol_abs + xtol_rel * max(abs(a), abs(b))

    evals = 0
    x, fx = lo, f_lo

    n_coarse = coarse_bisections if fprime is not None else MAX_BISECT
    for _ in range(min(n_coarse, MAX_BISECT)):
        if done(lo, hi):
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        evals += 1
        if fmid == 0.0:
            return RootResult(mid, 0.0, evals)
        if fmid < 0.0:
            lo, f_lo = mid, fmid
        else:
            hi, f_hi = mid, fmid
    x, fx = (lo, f_lo) if -f_lo <= f_hi else (hi, f_hi)

    if fprime is not None:
        for _ in range(NEWTON_STEPS):
            if done(lo, hi):
                break
            dfx = fprime(x)
            step_ok = dfx != 0.0 and abs(dfx) != float("inf")
            if step_ok:
                x_new = x - fx / dfx
                step_ok = lo < x_new < hi
            if not step_ok:
                x_new = 0.5 * (lo + hi)
                if x_new <= lo or x_new >= hi:
                    break
            fx_new = f(x_new)
            evals += 1
            if fx_new == 0.0:
                return RootResult(x_new, 0.0, evals)
            if fx_new < 0.0:
                lo, f_lo = x_new, fx_new
            else:
                hi, f_hi = x_new, fx_new
            if abs(x_new - x) <= xtol_abs + xtol_rel * abs(x_new) and abs(fx_new) <= abs(fx):
                x, fx = x_new, fx_new
                break
            x, fx = x_new, fx_new
    else:
        x, fx = (lo, f_lo) if -f_lo <= f_hi else (hi, f_hi)

    # Full-precision fallback: keep halving while the bracket still shrinks.
    while not done(lo, hi) and evals < MAX_BISECT + NEWTON_STEPS:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        evals += 1
        if fmid == 0.0:
            return RootResult(mid, 0.0, evals)
        if fmid < 0.0:
            lo, f_lo = mid, fmid
        else:
            hi, f_hi = mid, fmid
    if not done(lo, hi):
        raise ConvergenceFailure(
            f"iteration cap reached with bracket [{lo}, {hi}] still open"
        )
    x, fx = (lo, f_lo) if -f_lo <= f_hi else (hi, f_hi)
    return RootResult(x, fx, evals)
