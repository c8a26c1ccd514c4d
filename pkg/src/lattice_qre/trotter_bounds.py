"""Second-order Trotter commutator error bounds W and derived step counts.

For a symmetric second-order product formula with time slice tau/r, the
approximation error of one evolution is bounded by ``tau^3 * W / r^2``
where W collects nested-commutator norms of the Hamiltonian partition.

The Fermi-Hubbard bound combines a closed-form term with two numerically
computed free-fermion norms, tabulated per lattice size.  The cuprate and
pnictide bounds are degree-3 polynomials in the coupling magnitudes with
fixed coefficients obtained from symbolic commutator evaluation; only the
printed coefficients are consumed here, the evaluation itself is out of
scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .model import Model, ModelSpec

# ---------------------------------------------------------------------------
# Fermi-Hubbard norm table
# ---------------------------------------------------------------------------

# Columns: L, ||H_hop1 + H_hop2|| / |t|, ||[[H_hop1, H_hop2], H_hop1]|| / |t|^3.
# The norms are available only at these lattice sizes; no interpolation is
# offered because the values are computed bounds, not smooth guarantees.
FH_NORM_TABLE_TEXT = """\
4   24    0
6   56    110
8   100   190
10  160   300
12  230   440
14  320   630
16  410   810
18  520   1000
20  650   1300
22  780   1600
24  930   1800
26  1100  2200
28  1300  2500
30  1500  2900
32  1700  3300
"""


def parse_norm_table(text: str) -> dict[int, tuple[float, float]]:
    """Parse 'L norm_hop norm_comm' lines ('#' comments allowed)."""
    table = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"norm table line {lineno}: expected 3 columns, got {raw!r}")
        L = int(parts[0])
        table[L] = (float(parts[1]), float(parts[2]))
    return table


def load_norm_table(path) -> dict[int, tuple[float, float]]:
    return parse_norm_table(Path(path).read_text())


FH_NORMS = parse_norm_table(FH_NORM_TABLE_TEXT)

_HOP_COMM_COEFF = (math.sqrt(5.0) + 8.0) / 6.0


def fh_w(L: int, t: float = 1.0, u: float = 8.0, norms: dict | None = None) -> float:
    """Fermi-Hubbard Trotter bound.

    First term is the closed-form hopping/on-site commutator bound; the two
    tabulated norms supply the remaining on-site/hopping and pure-hopping
    contributions.  Degree-3 homogeneous in (t, u) since the stored norms
    are divided by |t| and |t|^3.
    """
    norms = FH_NORMS if norms is None else norms
    if L not in norms:
        raise KeyError(f"no tabulated norms for L={L} (have {sorted(norms)})")
    norm_hop, norm_comm = norms[L]
    return (
        _HOP_COMM_COEFF * abs(u) * t * t * L * L
        + abs(u) * abs(u) * abs(t) * norm_hop / 24.0
        + 3.0 / 24.0 * norm_comm * abs(t) ** 3
    )


# Cuprate bound: coefficient and monomial (t, t', t'', u) exponents.
_CUPRATE_TERMS = (
    (0.5562, (3, 0, 0, 0)), (3.5166, (2, 1, 0, 0)), (1.0147, (2, 0, 1, 0)),
    (1.2652, (2, 0, 0, 1)), (5.9063, (1, 2, 0, 0)), (6.6727, (1, 1, 1, 0)),
    (2.7246, (1, 1, 0, 1)), (1.4832, (1, 0, 2, 0)), (2.4294, (1, 0, 1, 1)),
    (0.2018, (1, 0, 0, 2)), (4.2510, (0, 3, 0, 0)), (5.7898, (0, 2, 1, 0)),
    (2.2182, (0, 2, 0, 1)), (4.2787, (0, 1, 2, 0)), (2.8980, (0, 1, 1, 1)),
    (0.3333, (0, 1, 0, 2)), (0.7688, (0, 0, 3, 0)), (1.3761, (0, 0, 2, 1)),
    (0.2369, (0, 0, 1, 2)),
)

# Pnictide bound: coefficient and monomial (t1, t2, t3, t4, u, v) exponents.
_PNICTIDE_TERMS = (
    (0.25, (3, 0, 0, 0, 0, 0)), (1.3333, (2, 0, 1, 0, 0, 0)),
    (1.4524, (2, 0, 0, 1, 0, 0)), (0.3333, (2, 0, 0, 0, 1, 0)),
    (0.7233, (2, 0, 0, 0, 0, 1)), (0.6667, (1, 1, 1, 0, 0, 0)),
    (1.9374, (1, 1, 0, 1, 0, 0)), (0.3398, (1, 1, 0, 0, 1, 0)),
    (1.037, (1, 1, 0, 0, 0, 1)), (2.6667, (1, 0, 2, 0, 0, 0)),
    (5.6918, (1, 0, 1, 1, 0, 0)), (1.015, (1, 0, 1, 0, 1, 0)),
    (2.6200, (1, 0, 1, 0, 0, 1)), (4.2562, (1, 0, 0, 2, 0, 0)),
    (1.1301, (1, 0, 0, 1, 1, 0)), (2.8315, (1, 0, 0, 1, 0, 1)),
    (0.0833, (1, 0, 0, 0, 2, 0)), (0.2506, (1, 0, 0, 0, 1, 1)),
    (3.8354, (1, 0, 0, 0, 0, 2)), (0.25, (0, 3, 0, 0, 0, 0)),
    (1.3333, (0, 2, 1, 0, 0, 0)), (1.4524, (0, 2, 0, 1, 0, 0)),
    (0.3333, (0, 2, 0, 0, 1, 0)), (0.7363, (0, 2, 0, 0, 0, 1)),
    (2.6667, (0, 1, 2, 0, 0, 0)), (5.6918, (0, 1, 1, 1, 0, 0)),
    (1.0151, (0, 1, 1, 0, 1, 0)), (2.5783, (0, 1, 1, 0, 0, 1)),
    (4.2562, (0, 1, 0, 2, 0, 0)), (1.1279, (0, 1, 0, 1, 1, 0)),
    (2.7618, (0, 1, 0, 1, 0, 1)), (0.0833, (0, 1, 0, 0, 2, 0)),
    (0.2506, (0, 1, 0, 0, 1, 1)), (0.2397, (0, 1, 0, 0, 0, 2)),
    (2.8333, (0, 0, 3, 0, 0, 0)), (8.0, (0, 0, 2, 1, 0, 0)),
    (1.3333, (0, 0, 2, 0, 1, 0)), (2.7211, (0, 0, 2, 0, 0, 1)),
    (8.0, (0, 0, 1, 2, 0, 0)), (2.3333, (0, 0, 1, 1, 1, 0)),
    (4.3035, (0, 0, 1, 1, 0, 1)), (0.1667, (0, 0, 1, 0, 2, 0)),
    (0.4714, (0, 0, 1, 0, 1, 1)), (0.4714, (0, 0, 1, 0, 0, 2)),
    (2.8333, (0, 0, 0, 3, 0, 0)), (1.3333, (0, 0, 0, 2, 1, 0)),
    (2.7135, (0, 0, 0, 2, 0, 1)), (0.1667, (0, 0, 0, 1, 2, 0)),
    (0.4714, (0, 0, 0, 1, 1, 1)), (0.4714, (0, 0, 0, 1, 0, 2)),
)


def _poly(terms, values) -> float:
    mags = [abs(v) for v in values]
    return sum(
        coeff * math.prod(m ** e for m, e in zip(mags, exps) if e)
        for coeff, exps in terms
    )


def cuprate_w(L: int, t=1.0, t_prime=0.3, t_dprime=0.2, u=8.0) -> float:
    return L * L * _poly(_CUPRATE_TERMS, (t, t_prime, t_dprime, u))


def pnictide_w(L: int, t1=1.0, t2=1.3, t3=0.85, t4=0.85, u=8.0, v=8.0) -> float:
    return L * L * _poly(_PNICTIDE_TERMS, (t1, t2, t3, t4, u, v))


def trotter_bound(spec: ModelSpec) -> float:
    """W for a model spec, dispatching on the model kind."""
    c = spec.couplings
    if spec.kind is Model.FERMI_HUBBARD:
        return fh_w(spec.L, c.t, c.u)
    if spec.kind is Model.CUPRATE:
        return cuprate_w(spec.L, c.t, c.t_prime, c.t_dprime, c.u)
    return pnictide_w(spec.L, c.t1, c.t2, c.t3, c.t4, c.u, c.v)


# ---------------------------------------------------------------------------
# Error budget and step count
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrotterBudget:
    """Split of the total energy error ΔE across the three error sources.

    Phase estimation gets y*ΔE, the Trotter error gets (1-s)(1-y)*ΔE and
    rotation synthesis gets s(1-y)*ΔE, further split s = x + z between the
    per-step rotations (x) and the catalyst-state synthesis (z).  Baseline
    strategies carry no catalysts and run with z = 0.
    """

    delta_e: float
    y: float
    x: float
    z: float
    tau: float

    @property
    def s(self) -> float:
        return self.x + self.z

    def __post_init__(self):
        if self.delta_e <= 0:
            raise ValueError("delta_e must be positive")
        if not 0.0 < self.y < 1.0:
            raise ValueError(f"y must be in (0, 1), got {self.y}")
        if self.x <= 0 or self.z < 0 or self.s >= 1.0:
            raise ValueError(f"need x > 0, z >= 0, x + z < 1; got x={self.x}, z={self.z}")
        if self.tau <= 0:
            raise ValueError("tau must be positive")

    @property
    def delta_e_pe(self) -> float:
        return self.y * self.delta_e

    @property
    def delta_e_trotter(self) -> float:
        return (1.0 - self.s) * (1.0 - self.y) * self.delta_e

    @property
    def delta_e_rotation(self) -> float:
        return self.s * (1.0 - self.y) * self.delta_e


def tau_max(W: float) -> float:
    """Largest admissible time step: keeps the per-step error below sqrt(2)/r^2."""
    if W <= 0:
        raise ValueError(f"tau_max needs W > 0, got {W}")
    return (math.sqrt(2.0) / W) ** (1.0 / 3.0)


def trotter_steps(W: float, tau: float, budget: TrotterBudget) -> int:
    """Steps r per evolution so the Trotter error fits its budget slice.

    Solves ΔE_T * tau = tau^3 W / r^2 for r and takes the ceiling, clamped
    to at least one step.
    """
    if tau <= 0:
        raise ValueError("tau must be positive")
    if W < 0:
        raise ValueError("W must be non-negative")
    det = budget.delta_e_trotter
    if det <= 0:
        raise ValueError("degenerate budget: Trotter slice is non-positive")
    if W == 0:
        return 1
    # Tiny slack so a tau snapped exactly onto a step boundary stays there.
    return max(1, math.ceil(tau * math.sqrt(W / det) - 1e-12))
