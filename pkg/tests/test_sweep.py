import numpy as np
import pytest

from qscat import (
    Delta,
    Eckart,
    Hulthen,
    Rectangular,
    SweepSpec,
    run_sweep,
)
from qscat.errors import InvalidInputError
from qscat.sweep import sweep_point

EXACT = frozenset({"exact"})


class TestGrid:
    def test_two_points_hit_both_endpoints(self):
        spec = SweepSpec(Delta(alpha=1.0), "k", lo=0.5, hi=2.0, points=2, methods=EXACT)
        rows = run_sweep(spec)
        assert [r.variable_value for r in rows] == [0.5, 2.0]

    def test_rows_ascend_uniformly(self):
        spec = SweepSpec(Delta(alpha=1.0), "k", lo=1.0, hi=2.0, points=11, methods=EXACT)
        values = [r.variable_value for r in run_sweep(spec)]
        np.testing.assert_allclose(np.diff(values), 0.1, rtol=1e-12)

    def test_log_spaced(self):
        spec = SweepSpec(
            Delta(alpha=1.0), "k", lo=0.1, hi=10.0, points=5, methods=EXACT, log_spaced=True
        )
        values = [r.variable_value for r in run_sweep(spec)]
        ratios = [b / a for a, b in zip(values, values[1:])]
        np.testing.assert_allclose(ratios, ratios[0], rtol=1e-12)

    def test_log_spaced_needs_positive_lo(self):
        with pytest.raises(InvalidInputError):
            SweepSpec(
                Delta(alpha=1.0), "k", lo=0.0, hi=1.0, points=3, methods=EXACT, log_spaced=True
            )


class TestDeltaRecipe:
    def test_transmission_rises_and_crosses_half_at_matched_k(self):
        # alpha = 1 puts k0 = 1; T = 1/2 exactly at k = k0
        spec = SweepSpec(Delta(alpha=1.0), "k", lo=0.02, hi=10.0, points=500, methods=EXACT)
        rows = run_sweep(spec)
        ts = [r.results["exact"].transmission for r in rows]
        assert ts[0] < 1e-3
        assert ts[-1] > 0.98
        assert all(b > a for a, b in zip(ts, ts[1:]))
        at_k0 = min(rows, key=lambda r: abs(r.variable_value - 1.0))
        assert abs(at_k0.variable_value - 1.0) < 1e-9
        assert at_k0.results["exact"].transmission == pytest.approx(0.5, abs=1e-12)
        rs = [r.results["exact"].reflection for r in rows]
        assert all(b < a for a, b in zip(rs, rs[1:]))


class TestPurityAndDeterminism:
    def test_rerun_is_identical(self):
        spec = SweepSpec(
            Rectangular(v0=1.0, a=1.0), "q", lo=0.1, hi=5.0, points=50, methods=EXACT
        )
        assert run_sweep(spec) == run_sweep(spec)

    def test_rows_independent_of_evaluation_order(self):
        spec = SweepSpec(
            Rectangular(v0=1.0, a=1.0), "q", lo=0.1, hi=5.0, points=20, methods=EXACT
        )
        rows = run_sweep(spec)
        reversed_rows = [sweep_point(spec, float(x)) for x in spec.grid()[::-1]][::-1]
        assert rows == reversed_rows


class TestCaseBoundary:
    def test_gap_marker_at_barrier_top(self):
        spec = SweepSpec(
            Rectangular(v0=1.0, a=1.0), "E", lo=0.5, hi=1.5, points=3, methods=EXACT
        )
        rows = run_sweep(spec)
        assert not rows[0].gap_marker and not rows[2].gap_marker
        assert rows[1].gap_marker
        assert rows[1].results["exact"].error == "degenerate"
        # the sweep still produced usable data on both sides
        assert rows[0].results["exact"].transmission is not None
        assert rows[2].results["exact"].transmission is not None

    def test_error_rows_do_not_abort(self):
        # below-threshold Hulthen energies produce error cells, not exceptions
        spec = SweepSpec(
            Hulthen(v0=1.0, a=0.5, q=0.9), "E", lo=0.5, hi=2.0, points=4, methods=EXACT
        )
        rows = run_sweep(spec)
        assert rows[0].results["exact"].error == "wrongcase"
        assert rows[-1].results["exact"].error is None


class TestCrossMethod:
    def test_bound_below_exact_everywhere(self):
        spec = SweepSpec(
            Rectangular(v0=1.0, a=1.0),
            "E",
            lo=1.02,
            hi=20.0,
            points=60,
            methods=frozenset({"exact", "bound"}),
        )
        for row in run_sweep(spec):
            assert row.bound_gap is not None
            assert row.bound_gap >= -1e-12

    def test_wkb_column_for_tunneling_sweep(self):
        spec = SweepSpec(
            Rectangular(v0=4.0, a=1.0),
            "E",
            lo=0.2,
            hi=3.8,
            points=10,
            methods=frozenset({"exact", "wkb"}),
        )
        for row in run_sweep(spec):
            exact = row.results["exact"]
            wkb = row.results["wkb"]
            assert exact.error is None and wkb.error is None
            assert 0.0 < wkb.transmission <= 1.0

    def test_eckart_v0_sweep_uses_fixed_energy(self):
        spec = SweepSpec(
            Eckart(v_minus_inf=1.5, v_plus_inf=0.0, v0=0.0, a=1.0),
            "V0",
            lo=-4.0,
            hi=1.0,
            points=11,
            methods=EXACT,
            fixed={"energy": 2.0},
        )
        rows = run_sweep(spec)
        assert all(r.results["exact"].error is None for r in rows)
        # primary pair is (T, 1 - T)
        for r in rows:
            res = r.results["exact"]
            assert res.reflection == pytest.approx(1.0 - res.transmission, abs=1e-15)


class TestValidation:
    def test_eckart_v0_requires_energy(self):
        with pytest.raises(InvalidInputError):
            SweepSpec(
                Eckart(v_minus_inf=0.0, v_plus_inf=0.0, v0=0.0, a=1.0),
                "V0",
                lo=-4.0,
                hi=1.0,
                points=5,
                methods=EXACT,
            )

    def test_variable_validity(self):
        with pytest.raises(InvalidInputError):
            SweepSpec(Hulthen(v0=1.0, a=0.5, q=0.9), "q", lo=0.1, hi=0.5, points=5)
        with pytest.raises(InvalidInputError):
            SweepSpec(Delta(alpha=1.0), "V0", lo=0.1, hi=0.5, points=5)

    def test_methods_validity(self):
        with pytest.raises(InvalidInputError):
            SweepSpec(
                Delta(alpha=1.0), "k", lo=0.1, hi=1.0, points=5, methods=frozenset({"nope"})
            )
        with pytest.raises(InvalidInputError):
            SweepSpec(Delta(alpha=1.0), "k", lo=0.1, hi=1.0, points=5, methods=frozenset())

    def test_bounds_and_points(self):
        with pytest.raises(InvalidInputError):
            SweepSpec(Delta(alpha=1.0), "k", lo=1.0, hi=1.0, points=5)
        with pytest.raises(InvalidInputError):
            SweepSpec(Delta(alpha=1.0), "k", lo=0.1, hi=1.0, points=1)
