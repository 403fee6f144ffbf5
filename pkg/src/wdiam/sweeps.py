"""Parameter sweeps over the block families, emitted as CSV.

Each built-in figure id reproduces one published-style plot:

1. r(theta) for two-block states, exact solver vs radical closed form,
   for (m, k) = (10, 10), (12, 18), (30, 30).
2. g^2(theta) for the same families, with the 1/e large-N floor.
3. r(theta) for three-block states (m=k=l=10, phi=pi/4), (20, 20, 20,
   5pi/12), (10, 20, 30, pi/6).
4. r(c): unified asymmetric closed form vs the numeric solution for the
   (m=8, k=10, a/b=0.8) family and the 19-qubit four-block family.
5. g(c) for the same three curves.
6. g(b_z): interpolating formula vs the exact 10-qubit state with nine
   equal small coefficients; the maximal relative gap goes into a footer
   comment row.

Values print with 17 significant digits (`%.17g`) so every float survives a
round trip; rows are ordered by grid index regardless of how the fan-out
schedules them, making output byte-stable for a fixed spec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .asymptotics import (
    TwoParamFamily,
    g_asymmetric_closed,
    g_interpolating,
    r_asymmetric_closed,
    r_two_param,
)
from .diameter import Branch, solve
from .errors import OutOfDomain
from .overlap import overlap_from_diameter
from .state import (
    WState,
    make_wstate,
    nineteen_qubit_state,
    three_block_state,
    two_block_plus_one_state,
    two_block_state,
)
from .util import parallel_map

DEFAULT_POINTS = 400
# Grids stop short of the c^2 = 1/2 divergence by this margin in c^2.
EDGE_MARGIN = 1e-6

FIGURE_IDS = (1, 2, 3, 4, 5, 6)
FAMILY_NAMES = ("two-block", "three-block", "two-block-plus-one", "nineteen-qubit")


@dataclass(frozen=True)
class SweepSpec:
    """A sweep is either a built-in figure id or a custom family grid."""

    figure: int | None = None
    family: str | None = None
    params: dict = field(default_factory=dict)
    points: int = DEFAULT_POINTS

    def __post_init__(self):
        if (self.figure is None) == (self.family is None):
            raise OutOfDomain("specify exactly one of figure or family")
        if self.figure is not None and self.figure not in FIGURE_IDS:
            raise OutOfDomain(f"figure must be one of {FIGURE_IDS}")
        if self.family is not None and self.family not in FAMILY_NAMES:
            raise OutOfDomain(f"family must be one of {FAMILY_NAMES}")
        if self.points < 2:
            raise OutOfDomain("points must be >= 2")


def _pipeline(state: WState) -> tuple[float, float]:
    """(r, g) from the exact pipeline; r is NaN for slight states."""
    sol = solve(state)
    g = overlap_from_diameter(state, sol).g
    r = math.nan if sol.branch is Branch.NO_DIAMETER else sol.r
    return r, g


def _c_grid(points: int) -> np.ndarray:
    return np.linspace(0.01, math.sqrt(0.5 - EDGE_MARGIN), points)


def _n10_state(b_z: float) -> WState:
    c_sq = 0.5 * (1.0 - b_z)
    q = math.sqrt((1.0 - c_sq) / 9.0)
    return make_wstate([q] * 9 + [math.sqrt(c_sq)], renormalize=True)


def sweep_rows(spec: SweepSpec) -> tuple[list[str], list[list[float]], list[str]]:
    """Compute a sweep.  Returns (header, rows, footer_comment_lines)."""
    points = spec.points
    footers: list[str] = []

    if spec.figure in (1, 2):
        pairs = ((10, 10), (12, 18), (30, 30))
        thetas = np.linspace(0.0, math.pi / 2.0, points)
        if spec.figure == 1:
            header = ["theta"] + [
                f"r_{tag}_m{m}_k{k}" for m, k in pairs for tag in ("exact", "radical")
            ]

            def row(theta: float) -> list[float]:
                out = [theta]
                for m, k in pairs:
                    out.append(_pipeline(two_block_state(m, k, theta))[0])
                    out.append(r_two_param(TwoParamFamily(m, k, theta)))
                return out

        else:
            header = ["theta"] + [f"g2_exact_m{m}_k{k}" for m, k in pairs] + ["g2_limit"]

            def row(theta: float) -> list[float]:
                out = [theta]
                for m, k in pairs:
                    out.append(_pipeline(two_block_state(m, k, theta))[1] ** 2)
                out.append(math.exp(-1.0))
                return out

        rows = parallel_map(row, thetas)

    elif spec.figure == 3:
        combos = (
            (10, 10, 10, math.pi / 4.0),
            (20, 20, 20, 5.0 * math.pi / 12.0),
            (10, 20, 30, math.pi / 6.0),
        )
        thetas = np.linspace(0.0, math.pi / 2.0, points)
        header = ["theta"] + [f"r_exact_m{m}_k{k}_l{l}" for m, k, l, _ in combos]

        def row(theta: float) -> list[float]:
            return [theta] + [
                _pipeline(three_block_state(m, k, l, theta, phi))[0]
                for m, k, l, phi in combos
            ]

        rows = parallel_map(row, thetas)

    elif spec.figure in (4, 5):
        grid = _c_grid(points)
        if spec.figure == 4:
            header = ["c", "r_closed", "r_numeric_m8_k10", "r_numeric_19q"]

            def row(c: float) -> list[float]:
                return [
                    c,
                    r_asymmetric_closed(c),
                    _pipeline(two_block_plus_one_state(8, 10, 0.8, c))[0],
                    _pipeline(nineteen_qubit_state(c))[0],
                ]

        else:
            header = ["c", "g_closed", "g_numeric_m8_k10", "g_numeric_19q"]

            def row(c: float) -> list[float]:
                return [
                    c,
                    math.sqrt(g_asymmetric_closed(c)),
                    _pipeline(two_block_plus_one_state(8, 10, 0.8, c))[1],
                    _pipeline(nineteen_qubit_state(c))[1],
                ]

        rows = parallel_map(row, grid)

    elif spec.figure == 6:
        grid = np.linspace(-0.9, 0.33, points + 2)[1:-1]  # open interval
        header = ["b_z", "g_interp", "g_exact_n10"]

        def row(b_z: float) -> list[float]:
            return [
                b_z,
                math.sqrt(g_interpolating(b_z)),
                _pipeline(_n10_state(b_z))[1],
            ]

        rows = parallel_map(row, grid)
        gaps = [abs(r[1] - r[2]) / r[2] for r in rows]
        footers.append(f"# max_rel_gap_g = {max(gaps):.17g}")

    else:
        header, rows = _custom_rows(spec)

    return header, rows, footers


def _custom_rows(spec: SweepSpec) -> tuple[list[str], list[list[float]]]:
    p = spec.params
    if spec.family == "two-block":
        m, k = int(p["m"]), int(p["k"])
        thetas = np.linspace(0.0, math.pi / 2.0, spec.points)
        header = ["theta", "r_exact", "r_radical"]

        def row(theta: float) -> list[float]:
            exact = _pipeline(two_block_state(m, k, theta))[0]
            try:
                radical = r_two_param(TwoParamFamily(m, k, theta))
            except OutOfDomain:
                radical = math.nan
            return [theta, exact, radical]

        return header, parallel_map(row, thetas)

    if spec.family == "three-block":
        m, k, l = int(p["m"]), int(p["k"]), int(p["l"])
        phi = float(p.get("phi", math.pi / 4.0))
        thetas = np.linspace(0.0, math.pi / 2.0, spec.points)
        header = ["theta", "r_exact"]
        return header, parallel_map(
            lambda t: [t, _pipeline(three_block_state(m, k, l, t, phi))[0]], thetas
        )

    if spec.family == "two-block-plus-one":
        m, k = int(p["m"]), int(p["k"])
        ratio = float(p.get("ratio", 1.0))
        grid = _c_grid(spec.points)
        header = ["c", "r", "g"]
        return header, parallel_map(
            lambda c: [c, *_pipeline(two_block_plus_one_state(m, k, ratio, c))], grid
        )

    # nineteen-qubit
    kk = float(p.get("k", 1.8))
    phi = float(p.get("phi", math.pi / 4.0))
    grid = _c_grid(spec.points)
    header = ["c", "r", "g"]
    return header, parallel_map(
        lambda c: [c, *_pipeline(nineteen_qubit_state(c, kk, phi))], grid
    )


def write_sweep(spec: SweepSpec, path) -> None:
    """Write a sweep as RFC-4180-style CSV: comma separated, '.' decimals,
    LF line endings, header row first, footer comment rows last."""
    header, rows, footers = sweep_rows(spec)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(f"{x:.17g}" for x in row) + "\n")
        for line in footers:
            fh.write(line + "\n")
