import math

import numpy as np
import pytest

from lattice_qre.model import Model, ModelSpec
from lattice_qre.trotter_bounds import (
    FH_NORMS,
    TrotterBudget,
    cuprate_w,
    fh_w,
    parse_norm_table,
    pnictide_w,
    tau_max,
    trotter_bound,
    trotter_steps,
)


def round3(x: float) -> float:
    return float(f"{x:.3g}")


class TestFhBound:
    def test_reference_values(self):
        assert round3(fh_w(4)) == 2.82e2
        assert round3(fh_w(6)) == 6.54e2

    def test_zero_hopping(self):
        assert fh_w(4, t=0.0, u=8.0) == 0.0

    def test_untabulated_L_rejected(self):
        with pytest.raises(KeyError):
            fh_w(34)
        with pytest.raises(KeyError):
            fh_w(5)

    def test_norm_table_override(self):
        norms = parse_norm_table("4 24 0\n")
        assert fh_w(4, norms=norms) == fh_w(4)

    def test_norm_table_from_file(self, tmp_path):
        from lattice_qre.trotter_bounds import load_norm_table

        path = tmp_path / "norms.txt"
        path.write_text("# L hop comm\n4 30 5\n")
        norms = load_norm_table(path)
        assert norms == {4: (30.0, 5.0)}
        assert fh_w(4, norms=norms) > fh_w(4)

    def test_homogeneity_degree_three(self):
        rng = np.random.default_rng(3)
        base = fh_w(8, 1.0, 8.0)
        for s in rng.uniform(1e-2, 10.0, size=100):
            assert fh_w(8, s, 8.0 * s) == pytest.approx(s**3 * base, rel=1e-12)

    def test_norms_nondecreasing(self):
        hops = [FH_NORMS[L][0] for L in sorted(FH_NORMS)]
        comms = [FH_NORMS[L][1] for L in sorted(FH_NORMS)]
        assert hops == sorted(hops)
        assert comms == sorted(comms)


class TestPolynomialBounds:
    def test_cuprate_reference(self):
        # reference values carry 3 significant figures; the polynomial lands
        # within half a percent of them (its own acceptance tolerance)
        assert cuprate_w(4) == pytest.approx(7.91e2, rel=5e-3)
        assert cuprate_w(32) == pytest.approx(5.06e4, rel=5e-3)

    def test_cuprate_zero(self):
        assert cuprate_w(4, 0, 0, 0, 0) == 0.0

    def test_pnictide_zero(self):
        assert pnictide_w(4, 0, 0, 0, 0, 0, 0) == 0.0

    def test_homogeneity_degree_three(self):
        rng = np.random.default_rng(5)
        cu = cuprate_w(4)
        pn = pnictide_w(4)
        for s in rng.uniform(1e-2, 10.0, size=100):
            assert cuprate_w(4, s, 0.3 * s, 0.2 * s, 8 * s) == pytest.approx(
                s**3 * cu, rel=1e-12)
            assert pnictide_w(4, s, 1.3 * s, 0.85 * s, 0.85 * s, 8 * s, 8 * s) == pytest.approx(
                s**3 * pn, rel=1e-12)

    def test_nonnegative_for_any_signs(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            c = rng.normal(scale=4.0, size=6)
            assert pnictide_w(4, *c) >= 0.0
            assert cuprate_w(4, *c[:4]) >= 0.0

    def test_dispatch(self):
        assert trotter_bound(ModelSpec(Model.CUPRATE, 8)) == cuprate_w(8)
        assert trotter_bound(ModelSpec(Model.PNICTIDE, 6)) == pnictide_w(6)


class TestTauMax:
    def test_unit(self):
        assert tau_max(math.sqrt(2.0)) == pytest.approx(1.0, rel=1e-12)

    def test_values(self):
        assert tau_max(282.4) == pytest.approx(0.1711, abs=5e-4)
        assert tau_max(1.14e4) == pytest.approx(0.0499, abs=5e-5)

    def test_invalid(self):
        with pytest.raises(ValueError):
            tau_max(0.0)


class TestTrotterSteps:
    def _budget(self, tau=0.02):
        return TrotterBudget(delta_e=0.0816, y=0.6, x=0.01, z=0.001, tau=tau)

    def test_reference_example(self):
        assert trotter_steps(282.4, 0.02, self._budget()) == 2

    def test_zero_bound_floors_at_one(self):
        assert trotter_steps(0.0, 0.02, self._budget()) == 1

    def test_sqrt_scaling(self):
        b = self._budget()
        det = b.delta_e_trotter
        r1 = 0.02 * math.sqrt(282.4 / det)
        r4 = 0.02 * math.sqrt(4 * 282.4 / det)
        assert r4 == pytest.approx(2 * r1, rel=1e-12)

    def test_post_ceiling_bound_holds(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            w = float(rng.uniform(10, 1e6))
            b = TrotterBudget(
                delta_e=float(rng.uniform(0.05, 5.0)),
                y=float(rng.uniform(0.1, 0.9)),
                x=float(rng.uniform(1e-3, 0.3)),
                z=float(rng.uniform(0, 0.3)),
                tau=float(rng.uniform(1e-3, 0.9)) * tau_max(w),
            )
            r = trotter_steps(w, b.tau, b)
            assert r >= 1
            assert b.tau**3 * w / r**2 <= b.delta_e_trotter * b.tau * (1 + 1e-9)

    def test_degenerate_budget_rejected(self):
        with pytest.raises(ValueError):
            TrotterBudget(delta_e=0.1, y=0.5, x=0.6, z=0.5, tau=0.1)


class TestBudget:
    def test_slices_sum_to_total(self):
        b = TrotterBudget(delta_e=0.3264, y=0.6, x=0.01, z=0.001, tau=0.02)
        total = b.delta_e_pe + b.delta_e_trotter + b.delta_e_rotation
        assert total == pytest.approx(b.delta_e, rel=1e-12)

    def test_bad_y(self):
        with pytest.raises(ValueError):
            TrotterBudget(delta_e=0.1, y=1.2, x=0.01, z=0.0, tau=0.1)
