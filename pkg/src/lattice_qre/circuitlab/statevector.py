"""Dense statevector simulation of small Clifford+T+rotation circuits.

Qubit 0 is the most significant bit of the basis index, matching the
Kronecker-product ordering used by the fermionic operator oracle.  RZ here
is the phase-gate convention diag(1, e^{i*angle}); it differs from the
symmetric convention only by a global phase, and every equivalence check
in this package is up to global phase.

The qubit ceiling is 15: enough for the 8-bit Hamming-weight circuit
(8 inputs + 7 carry ancillas) while keeping a state under one megabyte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

MAX_QUBITS = 15
MAX_DENSE_UNITARY_QUBITS = 10


class GateKind(str, Enum):
    X = "x"
    H = "h"
    S = "s"
    SDG = "sdg"
    T = "t"
    TDG = "tdg"
    RZ = "rz"
    CNOT = "cnot"
    CZ = "cz"
    SWAP = "swap"
    CRZ = "crz"
    TOFFOLI = "toffoli"


_ARITY = {
    GateKind.X: 1, GateKind.H: 1, GateKind.S: 1, GateKind.SDG: 1,
    GateKind.T: 1, GateKind.TDG: 1, GateKind.RZ: 1,
    GateKind.CNOT: 2, GateKind.CZ: 2, GateKind.SWAP: 2, GateKind.CRZ: 2,
    GateKind.TOFFOLI: 3,
}

_INVERSE = {
    GateKind.S: GateKind.SDG, GateKind.SDG: GateKind.S,
    GateKind.T: GateKind.TDG, GateKind.TDG: GateKind.T,
}

_SQRT_HALF = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        if len(self.qubits) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind.value} expects {_ARITY[self.kind]} qubits")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError("gate qubits must be distinct")
        needs_angle = self.kind in (GateKind.RZ, GateKind.CRZ)
        if needs_angle != (self.angle is not None):
            raise ValueError(f"angle mismatch for {self.kind.value}")

    def inverse(self) -> "Gate":
        if self.kind in _INVERSE:
            return Gate(_INVERSE[self.kind], self.qubits)
        if self.angle is not None:
            return Gate(self.kind, self.qubits, -self.angle)
        return self  # self-inverse


@dataclass
class Circuit:
    n_qubits: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}]")

    def append(self, kind: GateKind, *qubits: int, angle: float | None = None) -> None:
        for q in qubits:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"qubit {q} out of range")
        self.gates.append(Gate(kind, tuple(qubits), angle))

    def extend(self, gates) -> None:
        for g in gates:
            self.append(g.kind, *g.qubits, angle=g.angle)

    def x(self, q): self.append(GateKind.X, q)
    def h(self, q): self.append(GateKind.H, q)
    def s(self, q): self.append(GateKind.S, q)
    def sdg(self, q): self.append(GateKind.SDG, q)
    def t(self, q): self.append(GateKind.T, q)
    def tdg(self, q): self.append(GateKind.TDG, q)
    def rz(self, q, angle): self.append(GateKind.RZ, q, angle=angle)
    def cnot(self, c, t): self.append(GateKind.CNOT, c, t)
    def cz(self, a, b): self.append(GateKind.CZ, a, b)
    def swap(self, a, b): self.append(GateKind.SWAP, a, b)
    def crz(self, c, t, angle): self.append(GateKind.CRZ, c, t, angle=angle)
    def toffoli(self, c1, c2, t): self.append(GateKind.TOFFOLI, c1, c2, t)

    def inverted(self) -> "Circuit":
        inv = Circuit(self.n_qubits)
        inv.gates = [g.inverse() for g in reversed(self.gates)]
        return inv

    def counts(self) -> dict[str, int]:
        out = {"toffoli": 0, "t": 0, "rz": 0}
        for g in self.gates:
            if g.kind is GateKind.TOFFOLI:
                out["toffoli"] += 1
            elif g.kind in (GateKind.T, GateKind.TDG):
                out["t"] += 1
            elif g.kind in (GateKind.RZ, GateKind.CRZ):
                out["rz"] += 1
        return out

    def unitary(self) -> np.ndarray:
        """Dense matrix, column by column; guarded to keep memory small."""
        if self.n_qubits > MAX_DENSE_UNITARY_QUBITS:
            raise ValueError(f"dense unitary limited to {MAX_DENSE_UNITARY_QUBITS} qubits")
        dim = 1 << self.n_qubits
        mat = np.zeros((dim, dim), dtype=complex)
        for col in range(dim):
            state = np.zeros(dim, dtype=complex)
            state[col] = 1.0
            mat[:, col] = apply_circuit(state, self)
        return mat


def zero_state(n_qubits: int) -> np.ndarray:
    state = np.zeros(1 << n_qubits, dtype=complex)
    state[0] = 1.0
    return state


def basis_state(n_qubits: int, index: int) -> np.ndarray:
    state = np.zeros(1 << n_qubits, dtype=complex)
    state[index] = 1.0
    return state


def _axis_view(state: np.ndarray, n: int, qubits: tuple[int, ...]) -> np.ndarray:
    """View with the given qubit axes first; mutating it mutates the state."""
    t = state.reshape((2,) * n)
    return np.moveaxis(t, qubits, range(len(qubits)))


def apply_gate(state: np.ndarray, gate: Gate, n: int) -> np.ndarray:
    v = _axis_view(state, n, gate.qubits)
    k = gate.kind
    if k is GateKind.X:
        v[[0, 1]] = v[[1, 0]]
    elif k is GateKind.H:
        a = v[0].copy()
        v[0] = _SQRT_HALF * (a + v[1])
        v[1] = _SQRT_HALF * (a - v[1])
    elif k is GateKind.S:
        v[1] *= 1j
    elif k is GateKind.SDG:
        v[1] *= -1j
    elif k is GateKind.T:
        v[1] *= np.exp(0.25j * np.pi)
    elif k is GateKind.TDG:
        v[1] *= np.exp(-0.25j * np.pi)
    elif k is GateKind.RZ:
        v[1] *= np.exp(1j * gate.angle)
    elif k is GateKind.CNOT:
        v[1, 0], v[1, 1] = v[1, 1].copy(), v[1, 0].copy()
    elif k is GateKind.CZ:
        v[1, 1] *= -1.0
    elif k is GateKind.SWAP:
        v[0, 1], v[1, 0] = v[1, 0].copy(), v[0, 1].copy()
    elif k is GateKind.CRZ:
        v[1, 1] *= np.exp(1j * gate.angle)
    elif k is GateKind.TOFFOLI:
        v[1, 1, 0], v[1, 1, 1] = v[1, 1, 1].copy(), v[1, 1, 0].copy()
    return state


def apply_circuit(state: np.ndarray, circuit: Circuit) -> np.ndarray:
    out = state.copy()
    for gate in circuit.gates:
        out = apply_gate(out, gate, circuit.n_qubits)
    return out


def reduced_density(state: np.ndarray, n: int, keep: tuple[int, ...]) -> np.ndarray:
    """Density matrix of the kept qubits after tracing out the rest."""
    rest = tuple(q for q in range(n) if q not in keep)
    t = state.reshape((2,) * n)
    t = np.moveaxis(t, keep + rest, range(n))
    m = t.reshape(1 << len(keep), 1 << len(rest))
    return m @ m.conj().T


def max_unitary_deviation(u: np.ndarray, v: np.ndarray) -> float:
    """Max entrywise distance between u and v after removing a global phase."""
    index = np.unravel_index(np.argmax(np.abs(v)), v.shape)
    phase = u[index] / v[index]
    if abs(abs(phase) - 1.0) > 1e-6:
        return float(np.max(np.abs(u - v)))
    return float(np.max(np.abs(u - phase * v)))
