"""WKB tunneling transmission for sampled potentials, with turning-point care.

T_w = exp(-2 sqrt(2m/hbar^2) * integral of sqrt(V(x) - E) over the barrier).
The quadrature is adaptive Simpson; when the region comes from solved turning
points, a u^2 substitution at each endpoint removes the square-root derivative
singularity before integrating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .core import PhysicsContext
from .errors import (
    ConvergenceError,
    InvalidInputError,
    NoBarrierError,
    UnsupportedOperationError,
    WrongCaseError,
)
from .potentials import Delta, Eckart, Hulthen, PotentialSpec, Rectangular, evaluate

# floating-point noise below the barrier top is clamped, anything worse rejected
_NEGATIVE_SLACK = 1e-12


class RegionSource(Enum):
    SOLVED_TURNING_POINTS = "solved_turning_points"
    FIXED_LIMITS = "fixed_limits"


@dataclass(frozen=True)
class QuadratureControl:
    abs_tol: float = 1e-10
    max_depth: int = 40

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise InvalidInputError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if self.max_depth < 1:
            raise InvalidInputError(f"max_depth must be >= 1, got {self.max_depth!r}")


DEFAULT_QUADRATURE = QuadratureControl()


@dataclass(frozen=True)
class BarrierRegion:
    """Integration limits, either classical turning points or fixed by hand."""

    x1: float
    x2: float
    source: RegionSource = RegionSource.FIXED_LIMITS

    def __post_init__(self):
        if not self.x1 < self.x2:
            raise InvalidInputError(f"need x1 < x2, got ({self.x1!r}, {self.x2!r})")


def fixed_limits(x1: float, x2: float) -> BarrierRegion:
    return BarrierRegion(x1, x2, RegionSource.FIXED_LIMITS)


def _adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    fa: float,
    fm: float,
    fb: float,
    whole: float,
    tol: float,
    depth: int,
    state: dict,
) -> float:
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol or depth <= 0:
        if depth <= 0 and abs(delta) > 15.0 * tol:
            state["failed"] = True
            state["residual"] += abs(delta) / 15.0
        return left + right + delta / 15.0
    return _adaptive_simpson(
        f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, state
    ) + _adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, state)


def integrate_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    ctrl: QuadratureControl = DEFAULT_QUADRATURE,
) -> float:
    """Adaptive Simpson with interval-doubling error estimate.

    Raises ConvergenceError (carrying the best estimate) if any subinterval
    still exceeds its tolerance share at max_depth.
    """
    if a == b:
        return 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    state = {"failed": False, "residual": 0.0}
    value = _adaptive_simpson(f, a, b, fa, fm, fb, whole, ctrl.abs_tol, ctrl.max_depth, state)
    if state["failed"]:
        raise ConvergenceError(
            f"adaptive quadrature did not reach abs_tol={ctrl.abs_tol:g} within "
            f"max_depth={ctrl.max_depth} (achieved estimate {value!r}, "
            f"residual ~{state['residual']:.3e})",
            estimate=value,
            last_term=state["residual"],
        )
    return value


def wkb_transmission(
    potential: Callable[[float], float],
    energy: float,
    region: BarrierRegion,
    ctx: PhysicsContext,
    ctrl: QuadratureControl = DEFAULT_QUADRATURE,
) -> float:
    """Bare-exponential WKB transmission over the given barrier region.

    The potential must satisfy V(x) >= E on the region; dips below
    E - 1e-12 raise InvalidInputError, smaller negatives are clamped to zero
    under the radical.
    """

    def integrand(x: float) -> float:
        d = potential(x) - energy
        if d < -_NEGATIVE_SLACK:
            raise InvalidInputError(
                f"V(x) < E inside the barrier region at x = {x!r} (V - E = {d!r}); "
                f"shrink the region or use solved turning points"
            )
        return math.sqrt(d) if d > 0.0 else 0.0

    if region.source is RegionSource.SOLVED_TURNING_POINTS:
        # split at the midpoint and substitute u^2 = x - x1 (resp. x2 - x) so the
        # sqrt edge behavior integrates as a smooth polynomial in u
        mid = 0.5 * (region.x1 + region.x2)
        half = QuadratureControl(abs_tol=0.5 * ctrl.abs_tol, max_depth=ctrl.max_depth)

        def left(u: float) -> float:
            return 2.0 * u * integrand(region.x1 + u * u)

        def right(u: float) -> float:
            return 2.0 * u * integrand(region.x2 - u * u)

        action = integrate_adaptive(left, 0.0, math.sqrt(mid - region.x1), half)
        action += integrate_adaptive(right, 0.0, math.sqrt(region.x2 - mid), half)
    else:
        action = integrate_adaptive(integrand, region.x1, region.x2, ctrl)

    exponent = 2.0 * math.sqrt(2.0 * ctx.mass) / ctx.hbar * action
    return math.exp(-exponent)


def find_turning_points(
    potential: Callable[[float], float],
    energy: float,
    bracket: tuple[float, float],
    scan_points: int = 512,
    x_tol: float = 1e-12,
) -> BarrierRegion:
    """Bisection-refined roots of V(x) - E from each side of the barrier.

    The bracket endpoints must be classically allowed (V < E) with a barrier
    (V > E) somewhere in between; otherwise NoBarrierError is raised.
    """
    lo, hi = bracket
    if not lo < hi:
        raise InvalidInputError(f"bad bracket {bracket!r}")
    if potential(lo) >= energy or potential(hi) >= energy:
        raise NoBarrierError(
            f"bracket endpoints must satisfy V < E; got V({lo!r}) = {potential(lo)!r}, "
            f"V({hi!r}) = {potential(hi)!r} at E = {energy!r}"
        )
    xs = [lo + (hi - lo) * i / (scan_points - 1) for i in range(scan_points)]
    above = [potential(x) > energy for x in xs]
    if not any(above):
        raise NoBarrierError(
            f"V(x) never exceeds E = {energy!r} on the bracket {bracket!r}"
        )
    first = above.index(True)
    last = len(above) - 1 - above[::-1].index(True)

    def bisect(x_lo: float, x_hi: float) -> float:
        # sign convention: V(x_lo) - E < 0 <= V(x_hi) - E
        while x_hi - x_lo > x_tol:
            mid = 0.5 * (x_lo + x_hi)
            if potential(mid) > energy:
                x_hi = mid
            else:
                x_lo = mid
        return 0.5 * (x_lo + x_hi)

    x1 = bisect(xs[first - 1], xs[first])
    # mirror the bracket for the falling edge
    x_lo, x_hi = xs[last], xs[last + 1]
    while x_hi - x_lo > x_tol:
        mid = 0.5 * (x_lo + x_hi)
        if potential(mid) > energy:
            x_lo = mid
        else:
            x_hi = mid
    x2 = 0.5 * (x_lo + x_hi)
    return BarrierRegion(x1, x2, RegionSource.SOLVED_TURNING_POINTS)


def default_region(p: PotentialSpec, energy: float) -> BarrierRegion:
    """Integration limits used by sweeps when none are given explicitly.

    Rectangular: the barrier edges (-a, a).  Hulthen: fixed (-1, 1), matching
    the published WKB recipe for this potential (narrower than the true
    turning points; pass solve_turning_points=True to wkb_for_potential for
    the physical region).
    """
    if isinstance(p, Rectangular):
        return fixed_limits(-p.a, p.a)
    if isinstance(p, Hulthen):
        return fixed_limits(-1.0, 1.0)
    raise UnsupportedOperationError(
        f"no default WKB region for {type(p).__name__}; solve turning points instead"
    )


def hulthen_turning_point(p: Hulthen, energy: float) -> float:
    """Closed-form |x| where the Hulthen branch crosses E: (1/a) log(q + v0/E)."""
    if not 0 < energy < p.v0 / (1.0 - p.q):
        raise NoBarrierError(
            f"energy {energy!r} is not below the Hulthen peak {p.v0 / (1.0 - p.q)!r}"
        )
    return math.log(p.q + p.v0 / energy) / p.a


def wkb_for_potential(
    p: PotentialSpec,
    energy: float,
    ctx: PhysicsContext,
    ctrl: QuadratureControl = DEFAULT_QUADRATURE,
    solve_turning_points: bool = False,
) -> float:
    """WKB transmission with per-potential region conventions.

    Delta is excluded (distribution).  The rectangular barrier always uses its
    exact edges.  Hulthen defaults to the fixed (-1, 1) window; the Eckart
    profile always solves for turning points (no conventional fixed window).
    """
    if isinstance(p, Delta):
        raise UnsupportedOperationError("WKB quadrature is undefined for the delta potential")
    if isinstance(p, Rectangular):
        if not 0 < energy < p.v0:
            raise WrongCaseError(
                f"WKB tunneling needs 0 < E < v0, got E={energy!r}, v0={p.v0!r}"
            )
        region = fixed_limits(-p.a, p.a)
    elif isinstance(p, Hulthen):
        if solve_turning_points:
            edge = hulthen_turning_point(p, energy)
            region = find_turning_points(
                lambda x: evaluate(p, x), energy, (-edge - 5.0 / p.a, edge + 5.0 / p.a)
            )
        else:
            region = default_region(p, energy)
    elif isinstance(p, Eckart):
        span = 50.0 * p.a
        region = find_turning_points(lambda x: evaluate(p, x), energy, (-span, span))
    else:
        raise UnsupportedOperationError(f"unknown potential {type(p).__name__}")
    return wkb_transmission(lambda x: evaluate(p, x), energy, region, ctx, ctrl)
