"""Circuit builders for the gadgets the cost model counts.

Uncomputation of adders and borrow chains is modeled unitarily (inverse
Toffolis); the cost model credits uncomputation as measurement-plus-
Clifford, so each builder reports the counted cost alongside the circuit,
covering only the forward adders, phase-gradient additions, and rotations.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..primitives import CostVector, HwpStrategy, floor_log2, hamming_adders
from .statevector import Circuit

# ---------------------------------------------------------------------------
# Adders and Hamming-weight computation
# ---------------------------------------------------------------------------


def half_adder(circ: Circuit, a: int, b: int, carry: int) -> None:
    """(a, b, 0) -> (a, a XOR b, a AND b); one Toffoli."""
    circ.toffoli(a, b, carry)
    circ.cnot(a, b)


def full_adder(circ: Circuit, a: int, b: int, c: int, carry: int) -> None:
    """(a, b, c, 0) -> (a, b, a XOR b XOR c, MAJ(a, b, c)); one Toffoli."""
    circ.cnot(a, b)
    circ.cnot(a, c)
    circ.toffoli(b, c, carry)
    circ.cnot(a, carry)
    circ.cnot(b, c)
    circ.cnot(a, c)
    circ.cnot(a, b)


@dataclass
class HammingWeightGadget:
    circuit: Circuit          # compute direction only
    inputs: list[int]
    outputs: list[int]        # weight bits, least significant first
    ancillas: list[int]
    adder_count: int


def build_hamming_weight(M: int, n_extra_qubits: int = 0) -> HammingWeightGadget:
    """Chain of half/full adders summing M one-bit inputs into their weight.

    Uses exactly ``M - popcount(M)`` adders (one Toffoli each), writing each
    carry into a fresh ancilla.  ``n_extra_qubits`` reserves trailing wires
    for callers that extend the circuit.
    """
    if M < 1:
        raise ValueError(f"need M >= 1, got {M}")
    n_anc = hamming_adders(M)
    circ = Circuit(M + n_anc + n_extra_qubits)
    inputs = list(range(M))
    next_free = M
    outputs, ancillas, adders = [], [], 0

    bits = list(inputs)  # wires holding weight-1 bits
    while bits:
        carries = []
        while len(bits) > 1:
            carry = next_free
            next_free += 1
            ancillas.append(carry)
            if len(bits) >= 3:
                full_adder(circ, bits[0], bits[1], bits[2], carry)
                bits = [bits[2]] + bits[3:]
            else:
                half_adder(circ, bits[0], bits[1], carry)
                bits = [bits[1]]
            carries.append(carry)
            adders += 1
        outputs.append(bits[0])
        bits = carries

    assert adders == hamming_adders(M)
    return HammingWeightGadget(circ, inputs, outputs, ancillas, adders)


# ---------------------------------------------------------------------------
# Hamming-weight phasing
# ---------------------------------------------------------------------------


@dataclass
class HwpGadget:
    circuit: Circuit            # full application: compute, phase, uncompute
    catalyst_prep: Circuit | None
    targets: list[int]
    catalyst: list[int]
    counted: CostVector
    theta: float


def _phase_gradient(circ: Circuit, weight: list[int], catalyst: list[int],
                    borrows: list[int], theta: float) -> None:
    """Kick the phase e^{i*theta*w} back from the catalyst register.

    Subtracts the weight register from the catalyst modulo 2^k via a borrow
    ripple (k Toffolis), fixes the modular wrap with one rotation on the
    final borrow, then uncomputes the borrows through the carry chain of
    the complementary addition (the uncompute direction is free in the
    cost model).
    """
    k = len(weight)

    def majority_into(u: int, v: int, w: int | None, target: int) -> None:
        # target ^= MAJ(u, v, w); u, v restored.  w = None means w = 0.
        if w is None:
            circ.toffoli(u, v, target)
            return
        circ.cnot(w, u)
        circ.cnot(w, v)
        circ.toffoli(u, v, target)
        circ.cnot(w, target)
        circ.cnot(w, v)
        circ.cnot(w, u)

    # borrows of (catalyst - weight)
    for i in range(k):
        prev = borrows[i - 1] if i else None
        circ.x(catalyst[i])
        majority_into(catalyst[i], weight[i], prev, borrows[i])
        circ.x(catalyst[i])
    # difference bits, in place on the catalyst
    for i in range(k):
        circ.cnot(weight[i], catalyst[i])
        if i:
            circ.cnot(borrows[i - 1], catalyst[i])
    # wrap correction: the final borrow flags catalyst + weight >= 2^k
    circ.rz(borrows[k - 1], (1 << k) * theta)
    # borrows equal the carries of (difference + weight); uncompute top-down
    for i in range(k - 1, -1, -1):
        prev = borrows[i - 1] if i else None
        majority_into(catalyst[i], weight[i], prev, borrows[i])


def build_hwp(M: int, theta: float, strategy: HwpStrategy) -> HwpGadget:
    """One layer of M same-angle phase rotations via Hamming-weight phasing.

    The induced action on the M target qubits is diag(e^{i*theta*HW(x)}),
    i.e. a tensor power of single-qubit phase rotations.  Ancillas return
    to |0>; the catalyst state (catalyzed mode) returns unchanged.
    """
    if not 1 <= M <= 5:
        raise ValueError(f"need 1 <= M <= 5, got {M}")
    strategy = HwpStrategy(strategy)
    k = floor_log2(M) + 1

    if strategy is HwpStrategy.BASELINE:
        hw = build_hamming_weight(M)
        circ = hw.circuit
        uncompute = circ.inverted()
        for i, wire in enumerate(hw.outputs):
            circ.rz(wire, (1 << i) * theta)
        circ.extend(uncompute.gates)
        counted = CostVector(toffoli=float(hw.adder_count), rz=k)
        return HwpGadget(circ, None, hw.inputs, [], counted, theta)

    hw = build_hamming_weight(M, n_extra_qubits=2 * k)
    circ = hw.circuit
    uncompute = circ.inverted()
    base = M + len(hw.ancillas)
    catalyst = list(range(base, base + k))
    borrows = list(range(base + k, base + 2 * k))

    prep = Circuit(circ.n_qubits)
    for i, wire in enumerate(catalyst):
        prep.h(wire)
        prep.rz(wire, (1 << i) * theta)

    # the adder chain always yields exactly k weight bits
    assert len(hw.outputs) == k
    _phase_gradient(circ, hw.outputs, catalyst, borrows, theta)
    circ.extend(uncompute.gates)
    counted = CostVector(toffoli=float(hw.adder_count + k), rz=1)
    return HwpGadget(circ, prep, hw.inputs, catalyst, counted, theta)


# ---------------------------------------------------------------------------
# Fermionic swaps and the two-site Fourier transform
# ---------------------------------------------------------------------------


def adjacent_fswap(circ: Circuit, i: int) -> None:
    """Exchange neighbouring modes i, i+1: a swap plus a phase fix."""
    circ.swap(i, i + 1)
    circ.cz(i, i + 1)


@dataclass
class FswapGadget:
    circuit: Circuit
    adjacent_swaps: int


def build_fswap(n_modes: int, i: int, j: int) -> FswapGadget:
    """Fermionic swap of modes i < j on a register of n_modes wires.

    Non-adjacent pairs are composed from 2(j - i) - 1 adjacent swaps:
    shift mode i up to j, then shift the displaced mode j back down to i,
    leaving the modes in between untouched.
    """
    if not 0 <= i < j < n_modes:
        raise ValueError(f"need 0 <= i < j < n_modes, got {i}, {j}, {n_modes}")
    circ = Circuit(n_modes)
    if j == i + 1:
        adjacent_fswap(circ, i)
        return FswapGadget(circ, 1)
    for p in range(i, j):
        adjacent_fswap(circ, p)
    for p in range(j - 2, i - 1, -1):
        adjacent_fswap(circ, p)
    return FswapGadget(circ, 2 * (j - i) - 1)


def controlled_h(circ: Circuit, control: int, target: int) -> None:
    """Controlled Hadamard via two T gates and Cliffords."""
    circ.s(target)
    circ.h(target)
    circ.t(target)
    circ.cnot(control, target)
    circ.tdg(target)
    circ.h(target)
    circ.sdg(target)


def two_site_fourier(circ: Circuit, a: int, b: int) -> None:
    """Fourier transform of two adjacent modes (wires a, b); two T gates.

    Self-inverse; fixes |00>, phases |11> by -1, and rotates the
    single-particle block so that mode a maps to (a + b)/sqrt(2) and
    mode b to (a - b)/sqrt(2).
    """
    circ.cnot(b, a)
    controlled_h(circ, a, b)
    circ.cnot(b, a)
    circ.cz(a, b)


def xx_plus_yy_rotation(circ: Circuit, a: int, b: int, theta: float) -> None:
    """exp(i*theta*(XX + YY)) on wires a, b: Cliffords plus two rotations."""
    # exp(i theta XX)
    circ.h(a); circ.h(b)
    circ.cnot(a, b)
    circ.rz(b, -2.0 * theta)
    circ.cnot(a, b)
    circ.h(a); circ.h(b)
    # exp(i theta YY) = (S ⊗ S) exp(i theta XX) (S ⊗ S)^dag
    circ.sdg(a); circ.sdg(b)
    circ.h(a); circ.h(b)
    circ.cnot(a, b)
    circ.rz(b, -2.0 * theta)
    circ.cnot(a, b)
    circ.h(a); circ.h(b)
    circ.s(a); circ.s(b)


@dataclass
class PlaquetteGadget:
    circuit: Circuit
    counted: CostVector
    theta: float


def build_plaquette_evolution(theta: float) -> PlaquetteGadget:
    """Evolution under one plaquette hopping generator on four modes.

    The basis change (fermionic swaps and two two-site Fourier pairs)
    diagonalizes the generator into two same-angle rotations on the middle
    mode pair.  Counted cost: eight T gates and two rotations.
    """
    circ = Circuit(4)
    basis_change = Circuit(4)
    adjacent_fswap(basis_change, 1)          # modes 2,3
    two_site_fourier(basis_change, 0, 1)
    two_site_fourier(basis_change, 2, 3)
    adjacent_fswap(basis_change, 0)          # modes 1,2

    circ.extend(basis_change.gates)
    xx_plus_yy_rotation(circ, 1, 2, theta)
    circ.extend(basis_change.inverted().gates)
    return PlaquetteGadget(circ, CostVector(t_gates=8.0, rz=2), theta)
