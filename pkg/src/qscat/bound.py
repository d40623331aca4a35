"""Rigorous transfer-matrix lower bound on transmission.

T >= sech^2( (1/2) * integral |k0 - k^2(x)/k0| dx ) over a window outside of
which the potential has settled to its asymptotic value; k0 is the asymptotic
wavenumber.  Since k0^2 - k^2(x) = 2m (V(x) - V_inf)/hbar^2, the integrand
reduces to (2m/(hbar^2 k0)) |V(x) - V_inf|, which is what gets integrated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .core import PhysicsContext
from .errors import InvalidInputError, UnsupportedOperationError
from .potentials import (
    Delta,
    Eckart,
    Hulthen,
    PotentialSpec,
    Rectangular,
    asymptotic_values,
    evaluate,
)
from .wkb import DEFAULT_QUADRATURE, QuadratureControl, integrate_adaptive

# window detection threshold for smooth potentials: |V - V_inf| > 1e-8 * scale
_WINDOW_REL_TOL = 1e-8


@dataclass(frozen=True)
class BoundResult:
    """lower_bound = sech^2(integral_value); integral_value is dimensionless."""

    lower_bound: float
    integral_value: float


def _sech_sq(x: float) -> float:
    return 1.0 / math.cosh(x) ** 2


def transmission_bound(
    potential: Callable[[float], float],
    energy: float,
    window: tuple[float, float],
    ctx: PhysicsContext,
    ctrl: QuadratureControl = DEFAULT_QUADRATURE,
    v_asymptotic: float = 0.0,
) -> BoundResult:
    """Numeric-quadrature form of the sech^2 lower bound.

    ``v_asymptotic`` is the constant potential value outside the window, from
    which k0 is built; the energy must propagate there (E > v_asymptotic).
    k^2(x) may go negative inside the window (tunneling); the absolute value
    in the integrand handles it, though the bound is only asserted against
    exact results in the propagating regime.
    """
    if not energy > v_asymptotic:
        raise InvalidInputError(
            f"asymptotic channel is evanescent: energy {energy!r} <= V_inf {v_asymptotic!r}"
        )
    x1, x2 = window
    if not x1 < x2:
        raise InvalidInputError(f"bad window {window!r}")
    two_m_over_h2 = 2.0 * ctx.mass / ctx.hbar**2
    k0 = math.sqrt(two_m_over_h2 * (energy - v_asymptotic))

    def integrand(x: float) -> float:
        return two_m_over_h2 * abs(potential(x) - v_asymptotic) / k0

    integral = 0.5 * integrate_adaptive(integrand, x1, x2, ctrl)
    return BoundResult(lower_bound=_sech_sq(integral), integral_value=integral)


def rectangular_bound_closed_form(
    v0: float, a: float, energy: float, ctx: PhysicsContext
) -> BoundResult:
    """Closed form sech^2(k0^2 a / sqrt(k0^2 + q^2)) for the rectangular barrier, E > v0."""
    if not (v0 > 0 and a > 0):
        raise InvalidInputError(f"need v0 > 0 and a > 0, got v0={v0!r}, a={a!r}")
    if not energy > v0:
        raise InvalidInputError(
            f"closed-form bound applies above the barrier, got E={energy!r} <= v0={v0!r}"
        )
    two_m_over_h2 = 2.0 * ctx.mass / ctx.hbar**2
    k0_sq = two_m_over_h2 * v0
    q_sq = two_m_over_h2 * (energy - v0)
    arg = k0_sq * a / math.sqrt(k0_sq + q_sq)
    return BoundResult(lower_bound=_sech_sq(arg), integral_value=arg)


def auto_window(p: PotentialSpec) -> tuple[float, float]:
    """Outward scan for where |V - V_inf| drops below 1e-8 of the potential scale."""
    if isinstance(p, Rectangular):
        return (-p.a, p.a)
    v_minus, v_plus = asymptotic_values(p)
    if isinstance(p, Eckart):
        scale = max(abs(p.v0), abs(v_plus - v_minus), abs(evaluate(p, 0.0)), 1e-300)
        step = p.a
    elif isinstance(p, Hulthen):
        scale = max(evaluate(p, 0.0), 1e-300)
        step = 1.0 / p.a
    else:
        raise UnsupportedOperationError(f"no window rule for {type(p).__name__}")
    span = step
    for _ in range(80):
        if (
            abs(evaluate(p, -span) - v_minus) <= _WINDOW_REL_TOL * scale
            and abs(evaluate(p, span) - v_plus) <= _WINDOW_REL_TOL * scale
        ):
            return (-span, span)
        span *= 2.0
    raise InvalidInputError(f"potential did not settle to its asymptotes within {span!r}")


def bound_for_potential(
    p: PotentialSpec,
    energy: float,
    ctx: PhysicsContext,
    ctrl: QuadratureControl = DEFAULT_QUADRATURE,
) -> BoundResult:
    """sech^2 bound with per-potential window conventions.

    The delta potential is excluded (no quadrature over a distribution), and
    so is the Eckart profile with unequal asymptotes: the bound as stated
    assumes one asymptotic k0 on both sides.
    """
    if isinstance(p, Delta):
        raise UnsupportedOperationError(
            "the sech^2 bound is a quadrature statement; not applicable to the delta potential"
        )
    v_minus, v_plus = asymptotic_values(p)
    if v_minus != v_plus:
        raise UnsupportedOperationError(
            f"the bound assumes equal asymptotes; got V-inf={v_minus!r}, V+inf={v_plus!r}"
        )
    window = auto_window(p)
    return transmission_bound(
        lambda x: evaluate(p, x), energy, window, ctx, ctrl, v_asymptotic=v_plus
    )
