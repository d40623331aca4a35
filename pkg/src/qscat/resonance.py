"""Resonance locations: analytic where known, numeric peak finding otherwise.

A resonance is a parameter value where T or R reaches unity; refined local
maxima that stay below 1 - 1e-6 are labeled peaks, not resonances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable

from .core import PhysicsContext
from .errors import InvalidInputError, UnsupportedOperationError
from .potentials import Delta, Eckart, PotentialSpec, Rectangular
from .exact import eckart_transmission

# fixed by the strict "probability in unity" definition, absorbing float noise
RESONANCE_THRESHOLD = 1.0 - 1e-6

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


class Kind(Enum):
    TRANSMISSION = "transmission"
    REFLECTION = "reflection"


class Source(Enum):
    ANALYTIC = "analytic"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class ResonanceReport:
    kind: Kind
    location: float
    value: float
    source: Source
    label: str = "resonance"  # "resonance" (value within 1e-6 of 1) or "peak"
    at_boundary: bool = False


@dataclass(frozen=True)
class ResonanceListing:
    """Reports plus an explanatory reason when the list is knowingly empty."""

    reports: tuple[ResonanceReport, ...]
    reason: str | None = None


def _label_for(value: float) -> str:
    return "resonance" if value >= RESONANCE_THRESHOLD else "peak"


def analytic_resonances(
    p: PotentialSpec,
    sweep_var: str,
    n_max: int,
    ctx: PhysicsContext,
    kind: Kind = Kind.TRANSMISSION,
    energy: float | None = None,
) -> ResonanceListing:
    """Closed-form resonance locations for the potential/sweep-variable pairs
    that have them.

    Supported: rectangular over q (transmission: q = n pi / 2a) and over k
    (reflection: boundary k = 0); delta over k (no transmission resonances;
    reflection at k = 0); Eckart over v0 (transmission: v0 = -(hbar^2/2ma^2)
    n(n+1); no reflection resonances).  Anything else raises
    UnsupportedOperationError; use numeric_resonances for those.
    """
    if n_max < 1:
        raise InvalidInputError(f"n_max must be >= 1, got {n_max!r}")
    var = sweep_var.lower()

    if isinstance(p, Delta) and var == "k":
        if kind is Kind.TRANSMISSION:
            return ResonanceListing(
                (),
                reason="the delta potential has no transmission resonances "
                "(T only tends to unity as k goes to infinity)",
            )
        return ResonanceListing(
            (
                ResonanceReport(
                    Kind.REFLECTION, 0.0, 1.0, Source.ANALYTIC, at_boundary=True
                ),
            )
        )

    if isinstance(p, Rectangular) and var == "q" and kind is Kind.TRANSMISSION:
        reports = tuple(
            ResonanceReport(
                Kind.TRANSMISSION, n * math.pi / (2.0 * p.a), 1.0, Source.ANALYTIC
            )
            for n in range(1, n_max + 1)
        )
        return ResonanceListing(reports)

    if isinstance(p, Rectangular) and var == "k" and kind is Kind.REFLECTION:
        return ResonanceListing(
            (
                ResonanceReport(
                    Kind.REFLECTION, 0.0, 1.0, Source.ANALYTIC, at_boundary=True
                ),
            )
        )

    if isinstance(p, Eckart) and var == "v0":
        if kind is Kind.REFLECTION:
            return ResonanceListing(
                (), reason="the Eckart potential has no reflection resonances"
            )
        symmetric = p.v_minus_inf == p.v_plus_inf
        reports = []
        for n in range(1, n_max + 1):
            loc = -(ctx.hbar**2 / (2.0 * ctx.mass * p.a**2)) * n * (n + 1)
            if symmetric:
                # cos^2 term vanishes and sinh factors coincide: T = 1 at any energy
                value = 1.0
            else:
                if energy is None:
                    raise InvalidInputError(
                        "asymmetric Eckart resonance values depend on the energy; "
                        "pass energy="
                    )
                value = eckart_transmission(replace(p, v0=loc), energy, ctx)
            reports.append(
                ResonanceReport(
                    Kind.TRANSMISSION, loc, value, Source.ANALYTIC, _label_for(value)
                )
            )
        return ResonanceListing(tuple(reports))

    raise UnsupportedOperationError(
        f"no analytic resonance formula for {type(p).__name__} over {sweep_var!r} "
        f"({kind.value}); use numeric_resonances"
    )


def golden_section_max(
    f: Callable[[float], float], lo: float, hi: float, tol: float
) -> float:
    """Deterministic golden-section refinement of a bracketed maximum."""
    a, b = lo, hi
    h = b - a
    if h <= tol:
        return 0.5 * (a + b)
    steps = int(math.ceil(math.log(tol / h) / math.log(_INV_PHI)))
    c = a + _INV_PHI_SQ * h
    d = a + _INV_PHI * h
    yc = f(c)
    yd = f(d)
    for _ in range(steps):
        if yc > yd:
            b, d, yd = d, c, yc
            h *= _INV_PHI
            c = a + _INV_PHI_SQ * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h *= _INV_PHI
            d = a + _INV_PHI * h
            yd = f(d)
    return 0.5 * (a + b)


def numeric_resonances(
    curve: Callable[[float], float],
    domain: tuple[float, float],
    grid_n: int = 256,
    refine_tol: float = 1e-8,
    kind: Kind = Kind.TRANSMISSION,
) -> list[ResonanceReport]:
    """Coarse grid scan for interior local maxima plus golden-section refinement.

    Endpoint maxima are deliberately excluded (boundary limits such as the
    k = 0 reflection resonance are not peaks).  Returns an empty list for a
    curve with no interior maxima (e.g. a constant).
    """
    if grid_n < 16:
        raise InvalidInputError(f"grid_n must be >= 16, got {grid_n!r}")
    if refine_tol <= 0:
        raise InvalidInputError(f"refine_tol must be positive, got {refine_tol!r}")
    lo, hi = domain
    if not lo < hi:
        raise InvalidInputError(f"bad domain {domain!r}")
    xs = [lo + (hi - lo) * i / (grid_n - 1) for i in range(grid_n)]
    ys = [curve(x) for x in xs]
    reports = []
    for i in range(1, grid_n - 1):
        if ys[i] > ys[i - 1] and ys[i] > ys[i + 1]:
            loc = golden_section_max(curve, xs[i - 1], xs[i + 1], refine_tol)
            val = curve(loc)
            reports.append(
                ResonanceReport(kind, loc, val, Source.NUMERIC, _label_for(val))
            )
    return reports
