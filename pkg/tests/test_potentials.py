import math

import numpy as np
import pytest

from qscat import (
    Delta,
    Eckart,
    Hulthen,
    PhysicsContext,
    Rectangular,
    asymptotic_values,
    asymptotic_wavenumbers,
    evaluate,
    wavenumbers,
)
from qscat.errors import (
    DegenerateEnergyError,
    InvalidInputError,
    UnsupportedOperationError,
    WrongCaseError,
)


class TestEvaluate:
    def test_rectangular_inside_and_out(self):
        r = Rectangular(v0=1.0, a=1.0)
        assert evaluate(r, 0.0) == 1.0
        assert evaluate(r, 2.0) == 0.0
        assert evaluate(r, 1.0) == 1.0  # edges belong to the barrier
        assert evaluate(r, -1.0) == 1.0

    def test_rectangular_array(self):
        r = Rectangular(v0=2.0, a=0.5)
        xs = np.array([-1.0, -0.5, 0.0, 0.5, 1.0])
        np.testing.assert_allclose(evaluate(r, xs), [0.0, 2.0, 2.0, 2.0, 0.0])

    def test_hulthen_center_value(self):
        h = Hulthen(v0=1.0, a=0.5, q=0.9)
        assert evaluate(h, 0.0) == pytest.approx(10.0, rel=1e-14)

    def test_hulthen_even_and_continuous(self, rng):
        h = Hulthen(v0=1.3, a=0.7, q=0.4)
        xs = rng.uniform(0.0, 8.0, size=200)
        np.testing.assert_allclose(evaluate(h, xs), evaluate(h, -xs), rtol=1e-14)
        eps = 1e-9
        left, right = evaluate(h, -eps), evaluate(h, eps)
        center = h.v0 / (1.0 - h.q)
        assert left == pytest.approx(center, rel=1e-7)
        assert right == pytest.approx(center, rel=1e-7)

    def test_eckart_reaches_asymptotes(self):
        e = Eckart(v_minus_inf=2.0, v_plus_inf=1.0, v0=-1.0 / 9.0, a=3.0)
        assert evaluate(e, 50.0 * e.a) == pytest.approx(1.0, abs=1e-6)
        assert evaluate(e, -50.0 * e.a) == pytest.approx(2.0, abs=1e-6)

    def test_delta_has_no_pointwise_values(self):
        with pytest.raises(UnsupportedOperationError):
            evaluate(Delta(alpha=1.0), 0.0)


class TestAsymptoticValues:
    def test_short_range_potentials_vanish(self):
        assert asymptotic_values(Rectangular(v0=5.0, a=1.0)) == (0.0, 0.0)
        assert asymptotic_values(Hulthen(v0=1.0, a=0.5, q=0.9)) == (0.0, 0.0)
        assert asymptotic_values(Delta(alpha=2.0)) == (0.0, 0.0)

    def test_eckart_keeps_stored_asymptotes(self):
        e = Eckart(v_minus_inf=2.0, v_plus_inf=1.0, v0=-1.0 / 9.0, a=3.0)
        assert asymptotic_values(e) == (2.0, 1.0)


class TestWavenumbers:
    def test_rectangular_above(self, ctx):
        w = wavenumbers(Rectangular(v0=1.0, a=1.0), 2.0, ctx)
        assert w.k == pytest.approx(2.0)
        assert w.q_inside == pytest.approx(math.sqrt(2.0))
        assert w.k0 == pytest.approx(math.sqrt(2.0))
        assert w.big_q is None

    def test_rectangular_below(self, ctx):
        w = wavenumbers(Rectangular(v0=1.0, a=1.0), 0.5, ctx)
        assert w.k == pytest.approx(1.0)
        assert w.big_q == pytest.approx(1.0)
        assert w.q_inside is None

    def test_delta_strength_scale(self, ctx):
        w = wavenumbers(Delta(alpha=1.0), 3.0, ctx)
        assert w.k0 == pytest.approx(1.0)
        assert w.k == pytest.approx(math.sqrt(6.0))

    def test_consistency_identities(self, rng):
        ctx = PhysicsContext(hbar=1.7, mass=0.6)
        for _ in range(100):
            v0 = rng.uniform(0.1, 10.0)
            a = rng.uniform(0.1, 3.0)
            energy = v0 * rng.uniform(1.01, 10.0)
            w = wavenumbers(Rectangular(v0=v0, a=a), energy, ctx)
            assert w.k0**2 == pytest.approx(w.k**2 - w.q_inside**2, rel=1e-12)
            energy = v0 * rng.uniform(0.01, 0.99)
            w = wavenumbers(Rectangular(v0=v0, a=a), energy, ctx)
            assert w.k0**2 == pytest.approx(w.k**2 + w.big_q**2, rel=1e-12)

    def test_degenerate_energy_rejected(self, ctx):
        with pytest.raises(DegenerateEnergyError):
            wavenumbers(Rectangular(v0=1.0, a=1.0), 1.0, ctx)

    def test_nonpositive_energy_rejected(self, ctx):
        with pytest.raises(InvalidInputError):
            wavenumbers(Delta(alpha=1.0), 0.0, ctx)

    def test_unsupported_for_smooth_potentials(self, ctx):
        with pytest.raises(UnsupportedOperationError):
            wavenumbers(Hulthen(v0=1.0, a=0.5, q=0.9), 2.0, ctx)


class TestAsymptoticWavenumbers:
    def test_eckart_channels(self, ctx):
        e = Eckart(v_minus_inf=1.5, v_plus_inf=0.0, v0=0.0, a=1.0)
        k_minus, k_plus = asymptotic_wavenumbers(e, 2.0, ctx)
        assert k_minus == pytest.approx(1.0)
        assert k_plus == pytest.approx(2.0)

    def test_evanescent_channel_rejected(self, ctx):
        e = Eckart(v_minus_inf=1.5, v_plus_inf=0.0, v0=0.0, a=1.0)
        with pytest.raises(WrongCaseError):
            asymptotic_wavenumbers(e, 1.0, ctx)


class TestValidation:
    @pytest.mark.parametrize("kwargs", [dict(v0=0.0, a=1.0), dict(v0=1.0, a=-1.0)])
    def test_rectangular(self, kwargs):
        with pytest.raises(InvalidInputError):
            Rectangular(**kwargs)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(v0=1.0, a=0.5, q=1.0),
            dict(v0=1.0, a=0.5, q=0.0),
            dict(v0=-1.0, a=0.5, q=0.5),
            dict(v0=1.0, a=0.0, q=0.5),
        ],
    )
    def test_hulthen(self, kwargs):
        with pytest.raises(InvalidInputError):
            Hulthen(**kwargs)

    def test_delta(self):
        with pytest.raises(InvalidInputError):
            Delta(alpha=-1.0)
