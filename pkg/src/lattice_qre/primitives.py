"""Primitive fault-tolerant gate-cost calculus.

Costs are tallied in non-Clifford currency only: Toffoli, T, and
arbitrary-angle rotations (counted before synthesis).  Clifford gates,
measurement, and feed-forward are free.  Two T gates convert to one
Toffoli.  Rotation synthesis uses the repeat-until-success mean T-count
``0.53*log2(1/delta) + 4.86`` for target precision delta, with one ancilla.

``t_gates`` is a float throughout: repeat-until-success counts are
expectations, not worst cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

RUS_T_SLOPE = 0.53
RUS_T_OFFSET = 4.86


class HwpStrategy(str, Enum):
    BASELINE = "baseline"
    CATALYZED = "catalyzed"


@dataclass(frozen=True)
class CostVector:
    """Componentwise-additive tally of non-Clifford gates and ancillas."""

    toffoli: float = 0.0
    t_gates: float = 0.0
    rz: int = 0
    ry: int = 0
    ancilla: int = 0

    def __post_init__(self):
        if min(self.toffoli, self.t_gates, self.rz, self.ry, self.ancilla) < 0:
            raise ValueError("cost components must be non-negative")

    def __add__(self, other: "CostVector") -> "CostVector":
        return CostVector(
            self.toffoli + other.toffoli,
            self.t_gates + other.t_gates,
            self.rz + other.rz,
            self.ry + other.ry,
            # Ancillas are workspace, not consumables: parallel reuse means
            # the combined requirement is the max, not the sum.
            max(self.ancilla, other.ancilla),
        )

    def repeat(self, times: int) -> "CostVector":
        """Cost of applying this block ``times`` times (ancillas reused)."""
        return CostVector(
            self.toffoli * times, self.t_gates * times,
            self.rz * times, self.ry * times, self.ancilla,
        )


ZERO_COST = CostVector()


def rus_t_count(delta: float) -> float:
    """Mean T count to synthesize one rotation to precision delta."""
    if not 0.0 < delta <= 1.0:
        raise ValueError(f"rotation error budget must be in (0, 1], got {delta}")
    return RUS_T_SLOPE * math.log2(1.0 / delta) + RUS_T_OFFSET


def toffoli_equivalent(cost: CostVector, synthesized_rotation_t: float = 0.0) -> float:
    """Total Toffoli-equivalent count at 2 T = 1 Toffoli.

    ``synthesized_rotation_t`` is the T count of already-synthesized
    rotations; unsynthesized rz/ry entries in ``cost`` are ignored here.
    """
    return cost.toffoli + (cost.t_gates + synthesized_rotation_t) / 2.0


def popcount(M: int) -> int:
    if M < 1:
        raise ValueError(f"popcount needs M >= 1, got {M}")
    return M.bit_count()


def hamming_adders(M: int) -> int:
    """Half/full adders (equivalently Toffolis) to compute an M-bit Hamming weight."""
    return M - popcount(M)


def floor_log2(M: int) -> int:
    if M < 1:
        raise ValueError(f"floor_log2 needs M >= 1, got {M}")
    return M.bit_length() - 1


def ceil_log2(M: int) -> int:
    if M < 1:
        raise ValueError(f"ceil_log2 needs M >= 1, got {M}")
    return (M - 1).bit_length()


def hwp_cost(M: int, strategy: HwpStrategy) -> CostVector:
    """Cost of one layer of M same-angle Z-rotations via Hamming-weight phasing.

    Baseline rotates the weight register directly; catalyzed replaces those
    rotations with a phase-gradient addition against a catalyst state, whose
    one-time synthesis is charged separately by the callers.
    """
    if M < 1:
        raise ValueError(f"hwp_cost needs M >= 1, got {M}")
    k = floor_log2(M) + 1
    workspace = hamming_adders(M)
    if HwpStrategy(strategy) is HwpStrategy.BASELINE:
        return CostVector(toffoli=hamming_adders(M) + 0.0, rz=k, ancilla=workspace)
    # catalyst register plus phase-accumulation borrow chain, both k qubits
    return CostVector(toffoli=M + floor_log2(M) - popcount(M) + 1.0, rz=1,
                      ancilla=workspace + 2 * k)


def hwp_batch_sizes(N: int, B: int) -> list[int]:
    if N < 1 or B < 1:
        raise ValueError("batching needs N >= 1 and B >= 1")
    sizes = [B] * (N // B)
    if N % B:
        sizes.append(N % B)
    return sizes


def hwp_batched_cost(N: int, B: int, strategy: HwpStrategy) -> CostVector:
    """Hamming-weight phasing of N rotations applied in batches of B.

    Batching caps the workspace at the batch size; the catalyst register is
    shared across the same-angle batches, so only the per-batch adders and
    phase-gradient additions repeat.
    """
    total = ZERO_COST
    for size in hwp_batch_sizes(N, B):
        total = total + hwp_cost(size, strategy)
    k = floor_log2(B) + 1
    ancilla = hamming_adders(B)
    if HwpStrategy(strategy) is HwpStrategy.CATALYZED:
        ancilla += 2 * k
    return CostVector(total.toffoli, total.t_gates, total.rz, total.ry, ancilla)


def usp_cost(L: int) -> CostVector:
    """Uniform superposition over L basis states.

    Writing L = 2^k * m with m odd: powers of two need Hadamards only; odd
    parts use one round of amplitude amplification.
    """
    if L < 2:
        raise ValueError(f"usp_cost needs L >= 2, got {L}")
    m = L
    while m % 2 == 0:
        m //= 2
    if m == 1:
        return ZERO_COST
    k = ceil_log2(m)
    return CostVector(toffoli=2 * k - 2.0, rz=2, ancilla=k)


def qrom_cost(N: int, controlled: bool = True) -> CostVector:
    """Data lookup over N items (cost is the same singly controlled)."""
    if N < 1:
        raise ValueError(f"qrom_cost needs N >= 1, got {N}")
    return CostVector(toffoli=N - 1.0, ancilla=ceil_log2(N))


def multi_controlled_x(n: int) -> CostVector:
    """An n-controlled NOT; n = 1 is a plain CNOT and costs nothing here."""
    if n < 2:
        raise ValueError(f"multi_controlled_x needs n >= 2, got {n}")
    return CostVector(toffoli=n - 1.0, ancilla=n - 2)
