"""Small dense statevector kernel for verifying the circuit gadgets that
the cost model counts: adders, Hamming-weight phasing, fermionic swaps,
two-site fermionic Fourier transforms, and plaquette evolutions."""

from .statevector import Circuit, Gate, GateKind, apply_circuit, zero_state
from .fermion import FermionOracle
from . import gadgets, verify

__all__ = [
    "Circuit", "Gate", "GateKind", "apply_circuit", "zero_state",
    "FermionOracle", "gadgets", "verify",
]
