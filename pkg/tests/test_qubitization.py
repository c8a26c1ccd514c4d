import math

import pytest

from lattice_qre.model import Model, ModelSpec, extensive_error
from lattice_qre.qubitization import (
    estimate,
    optimize_qubitization,
    phase_qubits,
    query_count,
    walk_counts,
)


class TestPhaseQubits:
    def test_reference(self):
        assert phase_qubits(96.0, 0.0816, 0.99) == 11

    def test_cancelling_arguments(self):
        # pi * lam / (2 sqrt(x) dE) = 1 when lam = 1, x = 1/4, dE = pi
        assert phase_qubits(1.0, math.pi, 0.25) == 0

    def test_invalid_split(self):
        with pytest.raises(ValueError):
            phase_qubits(96.0, 0.0816, 1.5)


class TestWalkCounts:
    def test_fh_binary_power_toffoli(self):
        for L in (4, 8, 16, 32):
            expected = 5 * L * L + 10 * math.ceil(math.log2(L)) - 4
            assert walk_counts(Model.FERMI_HUBBARD, L).toffoli == expected

    def test_fh_odd_part_adds_usp_toffoli(self):
        assert walk_counts(Model.FERMI_HUBBARD, 6).toffoli == 5 * 36 + 10 * 3 + 4 * 2 - 4

    def test_rotation_counts(self):
        assert walk_counts(Model.FERMI_HUBBARD, 8).rotations == 2
        assert walk_counts(Model.FERMI_HUBBARD, 10).rotations == 5
        assert walk_counts(Model.CUPRATE, 16).rotations == 10
        assert walk_counts(Model.CUPRATE, 24).rotations == 13
        assert walk_counts(Model.PNICTIDE, 4).rotations == 18
        assert walk_counts(Model.PNICTIDE, 6).rotations == 21


class TestEstimate:
    def test_toffoli_linear_in_inverse_error(self):
        spec = ModelSpec(Model.FERMI_HUBBARD, 8)
        de = extensive_error(8)
        full = estimate(spec, 0.99, de)
        halved = estimate(spec, 0.99, de / 2)
        assert halved.n_toffoli == pytest.approx(2 * full.n_toffoli, rel=1e-12)

    def test_total_identity(self):
        est = estimate(ModelSpec(Model.CUPRATE, 8), 0.99)
        assert est.total_toffoli == est.n_toffoli + est.n_t / 2.0

    def test_queries_continuous(self):
        est = estimate(ModelSpec(Model.FERMI_HUBBARD, 4), 0.99)
        assert est.n_queries == pytest.approx(
            query_count(est.lam, est.delta_e, 0.99), rel=1e-12)

    def test_unimodal_in_x(self):
        for spec in (ModelSpec(Model.FERMI_HUBBARD, 6), ModelSpec(Model.PNICTIDE, 16)):
            xs = [0.5 + i * 0.4999 / 400 for i in range(401)]
            values = [estimate(spec, x).total_toffoli for x in xs]
            drops = sum(
                1 for i in range(1, len(values) - 1)
                if values[i] < values[i - 1] and values[i] < values[i + 1]
            )
            assert drops == 1  # single interior minimum on a dense grid


class TestOptimize:
    def test_x_opt_range(self):
        est = optimize_qubitization(ModelSpec(Model.FERMI_HUBBARD, 4))
        assert 0.97 <= est.x <= 0.999

    def test_beats_fixed_x(self):
        spec = ModelSpec(Model.FERMI_HUBBARD, 4)
        opt = optimize_qubitization(spec)
        assert opt.total_toffoli <= estimate(spec, 0.99).total_toffoli

    def test_cuprate_reference_row(self):
        est = optimize_qubitization(ModelSpec(Model.CUPRATE, 8))
        assert est.total_toffoli == pytest.approx(2.29e6, rel=0.02)
        assert est.total_qubits == 161

    def test_fh_l8(self):
        est = optimize_qubitization(ModelSpec(Model.FERMI_HUBBARD, 8))
        assert est.total_toffoli == pytest.approx(1.36e6, rel=0.02)
        assert est.total_qubits == 160

    def test_qubits_dominate_system_register(self):
        from lattice_qre.model import system_qubits

        for kind in Model:
            spec = ModelSpec(kind, 6)
            est = optimize_qubitization(spec)
            assert est.total_qubits >= system_qubits(spec)
