"""Verification suite tying the built circuits back to the cost model.

Each check returns its worst observed deviation; the CLI serializes the
results as JSON and fails on any check that misses its threshold.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.linalg import expm

from ..primitives import HwpStrategy, hamming_adders, hwp_cost
from .fermion import FermionOracle
from .gadgets import (
    build_fswap,
    build_hamming_weight,
    build_hwp,
    build_plaquette_evolution,
    two_site_fourier,
)
from .statevector import (
    Circuit,
    apply_circuit,
    basis_state,
    max_unitary_deviation,
    reduced_density,
    zero_state,
)

HWP_ANGLE_SEED = 20240811


@dataclass
class CheckResult:
    name: str
    max_deviation: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.threshold

    def as_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def _phase_matrix(theta: float, m: int) -> np.ndarray:
    """diag over m qubits of e^{i*theta*HW(x)} (tensor power of one phase)."""
    weights = np.array([bin(x).count("1") for x in range(1 << m)])
    return np.diag(np.exp(1j * theta * weights))


def check_hamming_weight(max_bits: int = 8) -> CheckResult:
    """Exhaustive basis check of the adder chain for every input width."""
    worst = 0.0
    for m in range(1, max_bits + 1):
        gadget = build_hamming_weight(m)
        if gadget.adder_count != hamming_adders(m):
            return CheckResult("hamming_weight", math.inf, 1e-12)
        n = gadget.circuit.n_qubits
        for x in range(1 << m):
            # input bit i of x goes to wire i; wire w is bit (n-1-w) of the index
            index = sum(1 << (n - 1 - i) for i in range(m) if (x >> i) & 1)
            state = apply_circuit(basis_state(n, index), gadget.circuit)
            hot = int(np.argmax(np.abs(state)))
            amp = state[hot]
            weight = sum(
                ((hot >> (n - 1 - wire)) & 1) << bit
                for bit, wire in enumerate(gadget.outputs)
            )
            dev = abs(amp - 1.0)
            if weight != bin(x).count("1"):
                dev = 1.0
            worst = max(worst, dev)
    return CheckResult("hamming_weight", worst, 1e-12)


def _hwp_induced_matrix(gadget, reference_env: np.ndarray) -> tuple[np.ndarray, float]:
    """Induced action on the targets given environment wires start in
    ``reference_env``; also returns the worst leakage out of that block."""
    circ = gadget.circuit
    n = circ.n_qubits
    m = len(gadget.targets)
    dim_env = 1 << (n - m)
    induced = np.zeros((1 << m, 1 << m), dtype=complex)
    leakage = 0.0
    for x in range(1 << m):
        state = np.kron(basis_state(m, x), reference_env)
        out = apply_circuit(state, circ).reshape(1 << m, dim_env)
        induced[:, x] = out @ reference_env.conj()
        leakage = max(leakage, abs(1.0 - float(np.linalg.norm(induced[:, x]))))
    return induced, leakage


def check_hwp_unitary(sizes=(2, 3, 4, 5), n_angles: int = 10) -> CheckResult:
    """Both phasing strategies act as a tensor power of phase rotations."""
    rng = np.random.default_rng(HWP_ANGLE_SEED)
    angles = rng.uniform(-2.0 * math.pi, 2.0 * math.pi, size=n_angles)
    worst = 0.0
    for m in sizes:
        for strategy in HwpStrategy:
            for theta in angles:
                gadget = build_hwp(m, float(theta), strategy)
                n = gadget.circuit.n_qubits
                env = zero_state(n - m)
                if gadget.catalyst_prep is not None:
                    full = apply_circuit(zero_state(n), gadget.catalyst_prep)
                    env = full.reshape(1 << m, 1 << (n - m))[0]
                induced, leakage = _hwp_induced_matrix(gadget, env)
                target = _phase_matrix(float(theta), m)
                worst = max(worst, leakage, max_unitary_deviation(induced, target))
    return CheckResult("hwp_unitary", worst, 1e-9)


def check_hwp_tallies(sizes=(1, 2, 3, 4, 5)) -> CheckResult:
    """Counted Toffoli/rotation tallies match the cost-model predictions."""
    worst = 0.0
    for m in sizes:
        for strategy in HwpStrategy:
            gadget = build_hwp(m, 0.731, strategy)
            predicted = hwp_cost(m, strategy)
            worst = max(
                worst,
                abs(gadget.counted.toffoli - predicted.toffoli),
                abs(gadget.counted.rz - predicted.rz),
            )
    return CheckResult("hwp_tallies", worst, 0.0)


def check_catalyst_invariance(sizes=(2, 3, 5)) -> CheckResult:
    """The catalyst register comes back unentangled and unchanged."""
    rng = np.random.default_rng(HWP_ANGLE_SEED + 1)
    worst = 0.0
    for m in sizes:
        theta = float(rng.uniform(0.1, 2.0))
        gadget = build_hwp(m, theta, HwpStrategy.CATALYZED)
        circ = gadget.circuit
        n = circ.n_qubits
        # arbitrary fixed target state entangling all weight sectors
        target = rng.normal(size=1 << m) + 1j * rng.normal(size=1 << m)
        target /= np.linalg.norm(target)
        state = np.kron(target, zero_state(n - m))
        state = apply_circuit(state, gadget.catalyst_prep)
        catalyst_in = reduced_density(state, n, tuple(gadget.catalyst))
        state = apply_circuit(state, circ)
        catalyst_out = reduced_density(state, n, tuple(gadget.catalyst))
        fidelity = float(np.real(np.trace(catalyst_in @ catalyst_out)))
        worst = max(worst, 1.0 - fidelity)
    return CheckResult("catalyst_invariance", worst, 1e-12)


def check_fswap() -> CheckResult:
    worst = 0.0
    oracle = FermionOracle(2)
    gadget = build_fswap(2, 0, 1)
    u = gadget.circuit.unitary()
    worst = max(worst, float(np.max(np.abs(u @ oracle.a(1) @ u.conj().T - oracle.a(0)))))
    worst = max(worst, float(np.max(np.abs(u @ oracle.a(0) @ u.conj().T - oracle.a(1)))))
    worst = max(worst, float(np.max(np.abs(u @ u - np.eye(4)))))  # involution
    # |01> -> |10>, |11> -> -|11>
    worst = max(worst, float(abs(u[2, 1] - 1.0)), float(abs(u[3, 3] + 1.0)))

    oracle5 = FermionOracle(5)
    gadget = build_fswap(5, 0, 3)
    if gadget.adjacent_swaps != 5:
        worst = max(worst, 1.0)
    u = gadget.circuit.unitary()
    exchanged = {0: 3, 3: 0, 1: 1, 2: 2, 4: 4}
    for src, dst in exchanged.items():
        dev = np.max(np.abs(u @ oracle5.a(src) @ u.conj().T - oracle5.a(dst)))
        worst = max(worst, float(dev))
    return CheckResult("fswap", worst, 1e-12)


def check_two_site_fourier() -> CheckResult:
    oracle = FermionOracle(2)
    circ = Circuit(2)
    two_site_fourier(circ, 0, 1)
    f = circ.unitary()
    sqrt_half = 1.0 / math.sqrt(2.0)
    worst = float(np.max(np.abs(f @ f.conj().T - np.eye(4))))
    worst = max(worst, float(abs(f[0, 0] - 1.0)))  # fixes the vacuum
    target_a = sqrt_half * (oracle.a(0) + oracle.a(1))
    target_b = sqrt_half * (oracle.a(0) - oracle.a(1))
    worst = max(worst, float(np.max(np.abs(f @ oracle.a(0) @ f.conj().T - target_a))))
    worst = max(worst, float(np.max(np.abs(f @ oracle.a(1) @ f.conj().T - target_b))))
    return CheckResult("two_site_fourier", worst, 1e-12)


def plaquette_generator(oracle: FermionOracle) -> np.ndarray:
    """K = 2 (b'b - c'c) with b, c the symmetric/antisymmetric mode sums."""
    half = 0.5
    b = oracle.mode_combination([half, half, half, half])
    c = oracle.mode_combination([half, -half, half, -half])
    return 2.0 * (b.conj().T @ b - c.conj().T @ c)


def check_plaquette(angles=(0.0, 0.37, -0.9, 1.71, 2.5)) -> CheckResult:
    oracle = FermionOracle(4)
    k = plaquette_generator(oracle)
    worst = 0.0
    for theta in angles:
        gadget = build_plaquette_evolution(theta)
        counts = gadget.circuit.counts()
        if (gadget.counted.t_gates, gadget.counted.rz) != (8.0, 2):
            worst = max(worst, 1.0)
        if counts["t"] != 8 or counts["rz"] != 2 or counts["toffoli"] != 0:
            worst = max(worst, 1.0)
        u = gadget.circuit.unitary()
        target = expm(1j * theta * k)
        worst = max(worst, max_unitary_deviation(u, target))
    return CheckResult("plaquette_evolution", worst, 1e-9)


def check_unitarity() -> CheckResult:
    """Dense U'U = I for representative small gadgets."""
    worst = 0.0
    for circ in (
        build_hwp(3, 0.913, HwpStrategy.CATALYZED).circuit,
        build_hwp(4, -1.21, HwpStrategy.BASELINE).circuit,
        build_plaquette_evolution(0.61).circuit,
        build_fswap(5, 0, 4).circuit,
    ):
        u = circ.unitary()
        dim = u.shape[0]
        worst = max(worst, float(np.max(np.abs(u.conj().T @ u - np.eye(dim)))))
    return CheckResult("unitarity", worst, 1e-10)


def check_fermion_oracle() -> CheckResult:
    # construction itself verifies the anticommutation relations
    for n in (2, 4, 7):
        FermionOracle(n)
    return CheckResult("fermion_oracle_car", 0.0, 1e-12)


ALL_CHECKS = (
    check_hamming_weight,
    check_hwp_unitary,
    check_hwp_tallies,
    check_catalyst_invariance,
    check_fswap,
    check_two_site_fourier,
    check_plaquette,
    check_unitarity,
    check_fermion_oracle,
)


def run_all() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]


def report_json(results) -> str:
    return json.dumps([r.as_dict() for r in results], indent=2)
