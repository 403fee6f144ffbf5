"""W-state model: validated coefficient vectors and block-structured families.

An N-qubit W state is a superposition of the N basis states with exactly one
qubit excited,

    |w> = c_1|100...0> + c_2|010...0> + ... + c_N|00...01>,

with nonnegative amplitudes c_i and sum(c_i^2) = 1.  Phases of the c_i can be
absorbed into the local bases, so only nonnegative reals are accepted here;
negative inputs are flipped and flagged.  N >= 3 is required because every
diameter-type equation in this package carries a factor (N - 2).

The module also builds the block-constant families used throughout the
package (m equal amplitudes a, k equal amplitudes b, ...), exposes per-qubit
Bloch z components b_z = 1 - 2 c^2, and reads the JSON state-file format
consumed by the CLI.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    NonFinite,
    NormalizationViolated,
    NotNormalizable,
    TooFewQubits,
)

# Norm mismatch up to this size is repaired silently; beyond it the input is
# rejected unless renormalize=True was passed.
NORM_FIX_TOL = 1e-8
# Below this the renormalization is considered a no-op and is not flagged.
NORM_EXACT_TOL = 1e-12


@dataclass(frozen=True)
class WState:
    """Validated W state.

    Attributes
    ----------
    coeffs : np.ndarray
        Nonnegative amplitudes in the caller's qubit order, unit 2-norm.
    n_qubits : int
        Number of qubits N (= len(coeffs)), at least 3.
    sort_perm : np.ndarray
        Permutation such that ``coeffs[sort_perm]`` is ascending; its last
        entry is the index of the largest coefficient with ties broken
        toward the lowest original index.
    renormalized : bool
        True when the input norm was repaired (beyond rounding noise).
    phases_absorbed : bool
        True when negative input amplitudes were replaced by their moduli.
    """

    coeffs: np.ndarray
    n_qubits: int
    sort_perm: np.ndarray
    renormalized: bool = False
    phases_absorbed: bool = False

    @property
    def max_index(self) -> int:
        """Index of the largest coefficient (lowest index among ties)."""
        return int(self.sort_perm[-1])

    @property
    def c_max(self) -> float:
        return float(self.coeffs[self.max_index])

    def rest(self, exclude_index: int | None = None) -> np.ndarray:
        """Coefficients with one entry removed (default: the largest)."""
        idx = self.max_index if exclude_index is None else int(exclude_index)
        if not 0 <= idx < self.n_qubits:
            raise IndexError(f"coefficient index {idx} out of range")
        return np.delete(self.coeffs, idx)

    def sorted_coeffs(self) -> np.ndarray:
        return self.coeffs[self.sort_perm]


def make_wstate(raw, renormalize: bool = False) -> WState:
    """Validate a coefficient vector and build a :class:`WState`.

    Parameters
    ----------
    raw : array_like
        Real amplitudes, length >= 3.  Negative entries are replaced by
        their absolute values (phases are absorbable) and flagged.
    renormalize : bool
        Accept any nonzero norm and rescale.  Without it only inputs with
        ``|sum(c^2) - 1| <= 1e-8`` are accepted (and still rescaled so the
        stored norm is exact to machine precision).

    Raises
    ------
    TooFewQubits, NonFinite, NotNormalizable
    """
    coeffs = np.asarray(raw, dtype=float).ravel().copy()
    if coeffs.size < 3:
        raise TooFewQubits(f"need at least 3 coefficients, got {coeffs.size}")
    if not np.all(np.isfinite(coeffs)):
        raise NonFinite("coefficients must be finite reals")

    phases_absorbed = bool(np.any(coeffs < 0.0))
    if phases_absorbed:
        coeffs = np.abs(coeffs)

    norm_sq = float(np.dot(coeffs, coeffs))
    if norm_sq <= 0.0:
        raise NotNormalizable("zero coefficient vector")
    if not renormalize and abs(norm_sq - 1.0) > NORM_FIX_TOL:
        raise NotNormalizable(
            f"sum of squares is {norm_sq!r}; pass renormalize=True to rescale"
        )
    renormalized = abs(norm_sq - 1.0) > NORM_EXACT_TOL
    coeffs /= math.sqrt(norm_sq)

    perm = np.argsort(coeffs, kind="stable")
    # argmax returns the first occurrence: deterministic tie-break toward
    # the lowest original index for the maximal coefficient.
    first_max = int(np.argmax(coeffs))
    where = int(np.nonzero(perm == first_max)[0][0])
    perm[where], perm[-1] = perm[-1], perm[where]

    coeffs.flags.writeable = False
    perm.flags.writeable = False
    return WState(
        coeffs=coeffs,
        n_qubits=int(coeffs.size),
        sort_perm=perm,
        renormalized=renormalized,
        phases_absorbed=phases_absorbed,
    )


@dataclass(frozen=True)
class PartitionSpec:
    """Block-constant coefficient layout: ``blocks[j] = (multiplicity, amplitude)``."""

    blocks: tuple[tuple[int, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "blocks",
            tuple((int(m), float(a)) for m, a in self.blocks),
        )
        for m, a in self.blocks:
            if m < 1:
                raise NormalizationViolated(f"block multiplicity {m} < 1")
            if not math.isfinite(a) or a < 0.0:
                raise NonFinite(f"block amplitude {a!r} must be a nonnegative real")

    @property
    def n_qubits(self) -> int:
        return sum(m for m, _ in self.blocks)

    def weighted_norm_sq(self) -> float:
        return float(sum(m * a * a for m, a in self.blocks))


def expand_partition(spec: PartitionSpec, renormalize: bool = False) -> WState:
    """Expand a :class:`PartitionSpec` into a full W state.

    The multiplicity-weighted squared amplitudes must sum to 1 within 1e-12
    unless ``renormalize`` is set.
    """
    total = spec.weighted_norm_sq()
    if not renormalize and abs(total - 1.0) > NORM_EXACT_TOL:
        raise NormalizationViolated(
            f"sum of multiplicity * amplitude^2 is {total!r}, expected 1"
        )
    coeffs = np.repeat([a for _, a in spec.blocks], [m for m, _ in spec.blocks])
    return make_wstate(coeffs, renormalize=True)


def partition_blocks(state: WState) -> PartitionSpec:
    """Group adjacent equal coefficients back into a :class:`PartitionSpec`.

    Inverse of :func:`expand_partition` up to coefficient ordering and the
    merging of adjacent blocks that share an amplitude.
    """
    blocks: list[tuple[int, float]] = []
    for a in state.coeffs:
        if blocks and blocks[-1][1] == a:
            blocks[-1] = (blocks[-1][0] + 1, blocks[-1][1])
        else:
            blocks.append((1, float(a)))
    return PartitionSpec(tuple(blocks))


@dataclass(frozen=True)
class BlochReport:
    """Per-qubit Bloch z components, b_z(i) = 1 - 2 c_i^2.

    ``min_bz_index`` points at the smallest b_z, i.e. the largest
    coefficient (same tie-break as :attr:`WState.max_index`).
    """

    b_z: np.ndarray
    min_bz_index: int


def bloch_report(state: WState) -> BlochReport:
    b_z = 1.0 - 2.0 * state.coeffs**2
    b_z.flags.writeable = False
    return BlochReport(b_z=b_z, min_bz_index=state.max_index)


# --- block-structured families ---

def two_block_state(m: int, k: int, theta: float) -> WState:
    """N = m + k qubits: m amplitudes cos(theta)/sqrt(m), k of sin(theta)/sqrt(k)."""
    a = math.cos(theta) / math.sqrt(m)
    b = math.sin(theta) / math.sqrt(k)
    return expand_partition(PartitionSpec(((m, abs(a)), (k, abs(b)))))


def three_block_state(m: int, k: int, l: int, theta: float, phi: float) -> WState:
    """N = m + k + l qubits with spherical-angle block amplitudes.

    a = sin(theta)cos(phi)/sqrt(m), b = sin(theta)sin(phi)/sqrt(k),
    c = cos(theta)/sqrt(l); normalized for any angles.
    """
    a = math.sin(theta) * math.cos(phi) / math.sqrt(m)
    b = math.sin(theta) * math.sin(phi) / math.sqrt(k)
    c = math.cos(theta) / math.sqrt(l)
    return expand_partition(
        PartitionSpec(((m, abs(a)), (k, abs(b)), (l, abs(c))))
    )


def two_block_plus_one_state(m: int, k: int, amp_ratio: float, c: float) -> WState:
    """N = m + k + 1 qubits: m amplitudes a, k amplitudes b with a/b fixed,
    plus a single distinguished amplitude c."""
    if not 0.0 <= c < 1.0:
        raise NormalizationViolated(f"distinguished amplitude c={c!r} outside [0, 1)")
    b = math.sqrt((1.0 - c * c) / (m * amp_ratio**2 + k))
    a = amp_ratio * b
    return expand_partition(PartitionSpec(((m, a), (k, b), (1, c))))


def nineteen_qubit_state(c: float, k: float = 1.8, phi: float = math.pi / 4) -> WState:
    """19-qubit four-parameter family: blocks (7, a), (10, b), (1, c), (1, d).

    a^2 = cos^2(phi) (1-c^2) / (7k),  b^2 = sin^2(phi) (1-c^2) / (10k),
    d^2 = (k-1)(1-c^2)/k.  Normalized for any c in [0, 1) and k >= 1.
    """
    if not 0.0 <= c < 1.0:
        raise NormalizationViolated(f"parameter c={c!r} outside [0, 1)")
    if k < 1.0:
        raise NormalizationViolated(f"parameter k={k!r} must be >= 1")
    one_m_c2 = 1.0 - c * c
    a = math.sqrt(math.cos(phi) ** 2 * one_m_c2 / (7.0 * k))
    b = math.sqrt(math.sin(phi) ** 2 * one_m_c2 / (10.0 * k))
    d = math.sqrt((k - 1.0) * one_m_c2 / k)
    return expand_partition(PartitionSpec(((7, a), (10, b), (1, c), (1, d))))


# --- JSON state files ---

def state_from_dict(data: dict) -> WState:
    """Build a state from the JSON schema:

    ``{"coeffs": [..]}`` or ``{"partition": [{"mult": m, "amp": a}, ..]}``,
    optionally with ``{"renormalize": true}``.
    """
    if not isinstance(data, dict):
        raise NotNormalizable("state file must hold a JSON object")
    renorm = bool(data.get("renormalize", False))
    if "coeffs" in data:
        return make_wstate(data["coeffs"], renormalize=renorm)
    if "partition" in data:
        try:
            blocks = tuple(
                (entry["mult"], entry["amp"]) for entry in data["partition"]
            )
        except (TypeError, KeyError) as exc:
            raise NotNormalizable(
                "partition entries must be objects with 'mult' and 'amp'"
            ) from exc
        return expand_partition(PartitionSpec(blocks), renormalize=renorm)
    raise NotNormalizable("state file needs a 'coeffs' or 'partition' key")


def load_state_file(path) -> WState:
    with open(path, "r", encoding="utf-8") as fh:
        return state_from_dict(json.load(fh))
