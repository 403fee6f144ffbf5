"""Closed forms and large-N approximations for the overlap and diameter.

Collected here: the three-qubit circumradius solution, the two-block radical
solution of the symmetric diameter equation, the large-N symmetric limit
g^2 -> 1/e, the unified asymmetric closed form for r and g^2, the universal
one-variable interpolating formula in the Bloch component b_z = 1 - 2 c^2,
and the large-N constant 1/sqrt(3) that the first critical value approaches.

The exact solvers in :mod:`wdiam.diameter` remain the authority; these
expressions exist to be cheap, to be cross-checked against the solvers, and
to expose the universal large-N behavior.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateTriangle, NegativeDiscriminant, OutOfDomain
from .regions import Region, classify
from .state import WState, make_wstate, two_block_state


@dataclass(frozen=True)
class TwoParamFamily:
    """Two-block family: m amplitudes cos(theta)/sqrt(m) and k amplitudes
    sin(theta)/sqrt(k), N = m + k qubits."""

    m: int
    k: int
    theta: float

    @property
    def a(self) -> float:
        return abs(math.cos(self.theta)) / math.sqrt(self.m)

    @property
    def b(self) -> float:
        return abs(math.sin(self.theta)) / math.sqrt(self.k)

    def to_state(self) -> WState:
        return two_block_state(self.m, self.k, self.theta)


def g_three_qubit(c1: float, c2: float, c3: float) -> float:
    """Exact three-qubit overlap g.

    For a normalized triple with largest coefficient c (after sorting):
    g = 2R when c^2 <= sum of the other two squares, where R is the
    circumradius of the triangle with sides c1, c2, c3; otherwise g = c.
    The circumradius is R = c1 c2 c3 / (4 * area) with the area from a
    numerically stable Heron evaluation.

    Raises
    ------
    DegenerateTriangle
        Zero area on the circumradius branch.  Unreachable for normalized
        triples with positive entries; kept as a defensive check.
    """
    state = make_wstate([c1, c2, c3])
    z, y, x = state.sorted_coeffs()  # x >= y >= z
    if x * x >= y * y + z * z:
        return float(x)
    # Kahan's ordering of Heron's formula: exact-difference factors.
    area_sq = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))
    if area_sq <= 0.0:
        raise DegenerateTriangle("zero-area coefficient triangle")
    area = 0.25 * math.sqrt(area_sq)
    return float(x * y * z / (2.0 * area))


def r_two_param(fam: TwoParamFamily) -> float:
    """Radical solution of the symmetric diameter equation for a two-block
    family, valid for m > 1 and k > 1.

    r^2 = [2Nmk - 4(N-1)(m cos^2 t + k sin^2 t) + 2mk(N-2) sqrt(D)]
          / [16 (N-1)(m-1)(k-1)],       D = 1 - (N-1)/(mk) sin^2(2t).

    Raises
    ------
    OutOfDomain
        m <= 1 or k <= 1 (the ratio degenerates; use the numeric solver).
    NegativeDiscriminant
        D < 0.  Cannot occur for integer m, k >= 2; defensive only.
    """
    m, k, t = fam.m, fam.k, fam.theta
    if m <= 1 or k <= 1:
        raise OutOfDomain("two-block radical solution needs m > 1 and k > 1")
    n = m + k
    disc = 1.0 - (n - 1.0) / (m * k) * math.sin(2.0 * t) ** 2
    if disc < 0.0:
        raise NegativeDiscriminant(f"discriminant {disc!r} < 0")
    cos_sq = math.cos(t) ** 2
    sin_sq = math.sin(t) ** 2
    num = (
        2.0 * n * m * k
        - 4.0 * (n - 1.0) * (m * cos_sq + k * sin_sq)
        + 2.0 * m * k * (n - 2.0) * math.sqrt(disc)
    )
    den = 16.0 * (n - 1.0) * (m - 1.0) * (k - 1.0)
    return math.sqrt(num / den)


def g_symmetric_limit(state: WState) -> float:
    """Large-N overlap estimate g^2 = 1/e for symmetric-region states.

    Substituting the per-factor approximation (1 + sqrt(1 - c^2/r^2))/2 ~
    exp(-c^2 / (4 r^2)) and the limiting diameter r^2 = 1/4 into the product
    formula leaves g^2 ~ exp(-sum c_i^2) = 1/e by normalization.  The exact
    pipeline remains the authority; this is the N -> infinity constant.

    Raises
    ------
    OutOfDomain
        State not in the symmetric region.
    """
    if classify(state).region is not Region.SYMMETRIC:
        raise OutOfDomain("1/e limit applies to symmetric-region states only")
    return math.exp(-1.0)


def r_asymmetric_closed(c: float) -> float:
    """Unified asymmetric closed form r = (1 - c^2) / (2 sqrt(1 - 2 c^2)).

    Accurate when every other coefficient is small; exact limits
    r -> 1/2 at c -> 0 and r -> infinity at c^2 -> 1/2.

    Raises
    ------
    OutOfDomain
        c < 0 or c^2 >= 1/2.
    """
    if c < 0.0 or not c * c < 0.5:
        raise OutOfDomain("closed-form diameter needs 0 <= c^2 < 1/2")
    c2 = c * c
    return 0.5 * (1.0 - c2) / math.sqrt(1.0 - 2.0 * c2)


def _g2_from_bz(b_z: float) -> float:
    # Shared by the asymmetric closed form and the interpolating formula so
    # the two agree bit for bit on the common domain.
    return 0.5 * (1.0 + b_z) * math.exp(-2.0 * b_z / (1.0 + b_z))


def g_asymmetric_closed(c: float) -> float:
    """Asymmetric closed-form overlap g^2(c) = (1 - c^2) exp(-(1-2c^2)/(1-c^2)).

    Intended for 1/3 <= c^2 < 1/2 (where it tracks the exact overlap to
    O(1/N)); evaluates for any 0 <= c^2 <= 1/2, reaching g^2 = 1/2 exactly
    at the slight-region boundary c^2 = 1/2.

    Raises
    ------
    OutOfDomain
        c < 0 or c^2 > 1/2.
    """
    if c < 0.0 or c * c > 0.5:
        raise OutOfDomain("closed-form overlap needs 0 <= c^2 <= 1/2")
    return _g2_from_bz(1.0 - 2.0 * c * c)


def g_interpolating(b_z: float) -> float:
    """Universal large-N overlap g^2 as a function of the smallest Bloch
    z component, b_z = 1 - 2 c_N^2.

    Upper branch (1 + b_z)/2 * exp(-2 b_z / (1 + b_z)) for 0 < b_z < 1/3,
    lower branch (1 - b_z)/2 for b_z <= 0; both give 1/2 at b_z = 0.

    Raises
    ------
    OutOfDomain
        b_z outside (-1, 1/3): beyond 1/3 the state enters the symmetric
        region, where the one-variable reduction fails.
    """
    if not -1.0 < b_z < 1.0 / 3.0:
        raise OutOfDomain("interpolating formula needs -1 < b_z < 1/3")
    if b_z <= 0.0:
        return 0.5 * (1.0 - b_z)
    return _g2_from_bz(b_z)


def r1_largeN_estimate(n: int) -> float:
    """Large-N first critical value, 1/sqrt(3); region pre-screening only.

    The deviation of the true r1 from this constant is O(1/N); at small N it
    is loose (N = 3 equal coefficients give r1 = 2/3).
    """
    return 1.0 / math.sqrt(3.0)
