"""Grid evaluation engine producing cross-method rows (exact vs WKB vs bound).

Each row is computed independently from pure functions, so identical sweep
inputs always produce identical output and rows may be evaluated in any
order.  Per-point physics failures are recorded in the row rather than
aborting the sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping

import numpy as np

from .bound import bound_for_potential
from .core import (
    NATURAL_UNITS,
    PhysicsContext,
    probabilities_from_amplitudes,
    unitarity_defect,
)
from .errors import InvalidInputError, QscatError
from .exact import (
    delta_amplitudes,
    eckart_transmission,
    hulthen_amplitudes,
    rectangular_above,
    rectangular_below,
)
from .potentials import Delta, Eckart, Hulthen, PotentialSpec, Rectangular
from .specfun import DEFAULT_SERIES, SeriesControl
from .wkb import DEFAULT_QUADRATURE, QuadratureControl, wkb_for_potential

METHOD_ORDER = ("exact", "wkb", "bound")

_VALID_VARIABLES = {
    Delta: ("k", "E"),
    Rectangular: ("q", "E"),
    Eckart: ("V0", "E"),
    Hulthen: ("E",),
}


@dataclass(frozen=True)
class MethodResult:
    """One method's labeled output at a single grid point."""

    method: str
    transmission: float | None = None
    reflection: float | None = None
    defect: float | None = None
    error: str | None = None


@dataclass(frozen=True)
class SweepRow:
    variable_value: float
    results: Mapping[str, MethodResult]
    bound_gap: float | None = None
    gap_marker: bool = False


def _exact_result(
    p: PotentialSpec, energy: float, ctx: PhysicsContext, series: SeriesControl
) -> MethodResult:
    if isinstance(p, Delta):
        amps = delta_amplitudes(p.alpha, energy, ctx)
    elif isinstance(p, Rectangular):
        if energy > p.v0:
            amps = rectangular_above(p.v0, p.a, energy, ctx)
        else:
            amps = rectangular_below(p.v0, p.a, energy, ctx)
    elif isinstance(p, Eckart):
        t = eckart_transmission(p, energy, ctx)
        if not math.isfinite(t):
            raise InvalidInputError(
                f"transmission overflowed at energy {energy!r} (sinh arguments too large)"
            )
        # unitarity is mandatory for the elastic channel: report (T, 1 - T)
        return MethodResult("exact", transmission=t, reflection=1.0 - t, defect=0.0)
    elif isinstance(p, Hulthen):
        amps = hulthen_amplitudes(p, energy, ctx.mass, series)
    else:
        raise InvalidInputError(f"unknown potential {type(p).__name__}")
    prob = probabilities_from_amplitudes(amps)
    return MethodResult(
        "exact",
        transmission=prob.transmission,
        reflection=prob.reflection,
        defect=unitarity_defect(prob),
    )


def evaluate_methods(
    p: PotentialSpec,
    energy: float,
    methods: frozenset[str],
    ctx: PhysicsContext = NATURAL_UNITS,
    series: SeriesControl = DEFAULT_SERIES,
    quadrature: QuadratureControl = DEFAULT_QUADRATURE,
) -> tuple[dict[str, MethodResult], float | None]:
    """All requested methods at one (potential, energy) point.

    Physics-level failures become error codes on the affected method's result;
    returns (results by method, exact-minus-bound gap or None).
    """
    results: dict[str, MethodResult] = {}
    if isinstance(p, Rectangular) and energy == p.v0:
        # case boundary: both exact formulas are singular there
        return (
            {m: MethodResult(m, error="degenerate") for m in METHOD_ORDER if m in methods},
            None,
        )
    for method in METHOD_ORDER:
        if method not in methods:
            continue
        try:
            if method == "exact":
                results[method] = _exact_result(p, energy, ctx, series)
            elif method == "wkb":
                t = wkb_for_potential(p, energy, ctx, quadrature)
                results[method] = MethodResult("wkb", transmission=t)
            else:
                b = bound_for_potential(p, energy, ctx, quadrature)
                results[method] = MethodResult("bound", transmission=b.lower_bound)
        except QscatError as exc:
            results[method] = MethodResult(method, error=exc.code)

    bound_gap = None
    exact_res = results.get("exact")
    bound_res = results.get("bound")
    if (
        exact_res is not None
        and bound_res is not None
        and exact_res.error is None
        and bound_res.error is None
    ):
        bound_gap = exact_res.transmission - bound_res.transmission
    return results, bound_gap


@dataclass(frozen=True)
class SweepSpec:
    potential: PotentialSpec
    variable: str
    lo: float
    hi: float
    points: int
    methods: frozenset[str] = frozenset({"exact"})
    ctx: PhysicsContext = NATURAL_UNITS
    fixed: Mapping[str, float] = field(default_factory=dict)
    log_spaced: bool = False
    series: SeriesControl = DEFAULT_SERIES
    quadrature: QuadratureControl = DEFAULT_QUADRATURE

    def __post_init__(self):
        if not self.lo < self.hi:
            raise InvalidInputError(f"need lo < hi, got ({self.lo!r}, {self.hi!r})")
        if self.points < 2:
            raise InvalidInputError(f"need points >= 2, got {self.points!r}")
        unknown = set(self.methods) - set(METHOD_ORDER)
        if unknown or not self.methods:
            raise InvalidInputError(
                f"methods must be a non-empty subset of {METHOD_ORDER}, got {set(self.methods)!r}"
            )
        allowed = _VALID_VARIABLES[type(self.potential)]
        if self.variable not in allowed:
            raise InvalidInputError(
                f"cannot sweep {self.variable!r} for {type(self.potential).__name__}; "
                f"valid variables: {allowed}"
            )
        if isinstance(self.potential, Eckart) and self.variable == "V0":
            if "energy" not in self.fixed:
                raise InvalidInputError("sweeping V0 requires fixed={'energy': ...}")
        if self.log_spaced and self.lo <= 0:
            raise InvalidInputError("log-spaced grids require lo > 0")

    def grid(self) -> np.ndarray:
        if self.log_spaced:
            return np.geomspace(self.lo, self.hi, self.points)
        return np.linspace(self.lo, self.hi, self.points)


def map_sweep_variable(
    p: PotentialSpec,
    variable: str,
    x: float,
    ctx: PhysicsContext,
    fixed: Mapping[str, float],
) -> tuple[PotentialSpec, float]:
    """Map one value of the swept variable to a (potential, energy) pair."""
    if variable == "E":
        return p, x
    if isinstance(p, Delta) and variable == "k":
        return p, (ctx.hbar * x) ** 2 / (2.0 * ctx.mass)
    if isinstance(p, Rectangular) and variable == "q":
        return p, p.v0 + (ctx.hbar * x) ** 2 / (2.0 * ctx.mass)
    if isinstance(p, Eckart) and variable == "V0":
        if "energy" not in fixed:
            raise InvalidInputError("sweeping V0 requires fixed={'energy': ...}")
        return replace(p, v0=x), fixed["energy"]
    raise InvalidInputError(
        f"cannot sweep {variable!r} for {type(p).__name__}; "
        f"valid variables: {_VALID_VARIABLES[type(p)]}"
    )


def sweep_point(spec: SweepSpec, x: float) -> SweepRow:
    """Evaluate all requested methods at one grid value (pure, order-free)."""
    try:
        p, energy = map_sweep_variable(spec.potential, spec.variable, x, spec.ctx, spec.fixed)
    except QscatError as exc:
        results = {m: MethodResult(m, error=exc.code) for m in METHOD_ORDER if m in spec.methods}
        return SweepRow(x, results, gap_marker=True)
    results, bound_gap = evaluate_methods(
        p, energy, spec.methods, spec.ctx, spec.series, spec.quadrature
    )
    gap = all(r.error == "degenerate" for r in results.values())
    return SweepRow(x, results, bound_gap=bound_gap, gap_marker=gap)


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the full grid in ascending variable order."""
    return [sweep_point(spec, float(x)) for x in spec.grid()]
