"""The four canonical potentials: parameters, pointwise values, wavenumbers.

``evaluate`` accepts scalars or numpy arrays for the three finite potentials;
the delta potential is a distribution and only exists through its closed-form
scattering results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .core import PhysicsContext
from .errors import (
    DegenerateEnergyError,
    InvalidInputError,
    UnsupportedOperationError,
    WrongCaseError,
)


@dataclass(frozen=True)
class Delta:
    """V(x) = alpha * delta(x) with alpha > 0 (units of energy * length)."""

    alpha: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0):
            raise InvalidInputError(f"delta strength alpha must be positive, got {self.alpha!r}")


@dataclass(frozen=True)
class Rectangular:
    """V(x) = v0 for |x| <= a, else 0.  ``a`` is the half-width."""

    v0: float
    a: float

    def __post_init__(self):
        if not (math.isfinite(self.v0) and self.v0 > 0):
            raise InvalidInputError(f"barrier height v0 must be positive, got {self.v0!r}")
        if not (math.isfinite(self.a) and self.a > 0):
            raise InvalidInputError(f"half-width a must be positive, got {self.a!r}")


@dataclass(frozen=True)
class Eckart:
    """Smooth step-plus-bump profile built from tanh and sech^2 terms.

    V(x) = (v+ + v-)/2 + (v+ - v-)/2 tanh(x/a) + v0 / cosh^2(x/a)

    ``a`` here is a length (the tanh scale); contrast with the Hulthen ``a``
    which is an inverse length.
    """

    v_minus_inf: float
    v_plus_inf: float
    v0: float
    a: float

    def __post_init__(self):
        for name in ("v_minus_inf", "v_plus_inf", "v0"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidInputError(f"{name} must be finite")
        if not (math.isfinite(self.a) and self.a > 0):
            raise InvalidInputError(f"length scale a must be positive, got {self.a!r}")


@dataclass(frozen=True)
class Hulthen:
    """Exponentially screened barrier with screening parameter q in (0, 1).

    V(x) = step(-x) * v0/(exp(-a x) - q) + step(x) * v0/(exp(a x) - q)

    ``a`` is an inverse length (the exponential rate), unlike the Eckart ``a``.
    """

    v0: float
    a: float
    q: float

    def __post_init__(self):
        if not (math.isfinite(self.v0) and self.v0 > 0):
            raise InvalidInputError(f"strength v0 must be positive, got {self.v0!r}")
        if not (math.isfinite(self.a) and self.a > 0):
            raise InvalidInputError(f"rate a must be positive, got {self.a!r}")
        if not (math.isfinite(self.q) and 0 < self.q < 1):
            raise InvalidInputError(f"screening q must lie in (0, 1), got {self.q!r}")


PotentialSpec = Union[Delta, Rectangular, Eckart, Hulthen]


@dataclass(frozen=True)
class Wavenumbers:
    """Derived wavenumbers for the delta and rectangular potentials.

    ``k`` is the propagating wavenumber outside the potential, ``k0`` the
    strength scale.  Exactly one of ``q_inside`` (above-barrier) and ``big_q``
    (evanescent decay constant) is set for the rectangular barrier.
    """

    k: float
    k0: float
    q_inside: float | None = None
    big_q: float | None = None


def evaluate(p: PotentialSpec, x):
    """Pointwise potential value V(x); x may be a scalar or numpy array."""
    if isinstance(p, Delta):
        raise UnsupportedOperationError(
            "the delta potential is a distribution and has no pointwise values"
        )
    if isinstance(p, Rectangular):
        return np.where(np.abs(x) <= p.a, p.v0, 0.0) if np.ndim(x) else (
            p.v0 if abs(x) <= p.a else 0.0
        )
    if isinstance(p, Eckart):
        xa = np.asarray(x, dtype=float) / p.a if np.ndim(x) else x / p.a
        mean = 0.5 * (p.v_plus_inf + p.v_minus_inf)
        step = 0.5 * (p.v_plus_inf - p.v_minus_inf)
        return mean + step * np.tanh(xa) + p.v0 / np.cosh(xa) ** 2
    if isinstance(p, Hulthen):
        # the two step-function branches are mirror images, so |x| covers both;
        # at x = 0 they share the limit v0/(1-q)
        return p.v0 / (np.exp(p.a * np.abs(x)) - p.q)
    raise UnsupportedOperationError(f"unknown potential {type(p).__name__}")


def asymptotic_values(p: PotentialSpec) -> tuple[float, float]:
    """(V at x -> -inf, V at x -> +inf)."""
    if isinstance(p, Eckart):
        return (p.v_minus_inf, p.v_plus_inf)
    return (0.0, 0.0)


def wavenumbers(p: PotentialSpec, energy: float, ctx: PhysicsContext) -> Wavenumbers:
    """Wavenumbers k, k0 and the inside channel for delta/rectangular potentials.

    Raises DegenerateEnergyError when the energy sits exactly at the barrier
    height (both case formulas are singular there; perturb the energy).
    """
    two_m_over_h2 = 2.0 * ctx.mass / ctx.hbar**2
    if isinstance(p, Delta):
        if energy <= 0:
            raise InvalidInputError(f"scattering requires energy > 0, got {energy!r}")
        return Wavenumbers(k=math.sqrt(two_m_over_h2 * energy), k0=ctx.mass * p.alpha / ctx.hbar**2)
    if isinstance(p, Rectangular):
        if energy <= 0:
            raise InvalidInputError(f"scattering requires energy > 0, got {energy!r}")
        if energy == p.v0:
            raise DegenerateEnergyError(
                f"energy equals the barrier height {p.v0!r}; perturb the energy"
            )
        k = math.sqrt(two_m_over_h2 * energy)
        k0 = math.sqrt(two_m_over_h2 * p.v0)
        if energy > p.v0:
            return Wavenumbers(k=k, k0=k0, q_inside=math.sqrt(two_m_over_h2 * (energy - p.v0)))
        return Wavenumbers(k=k, k0=k0, big_q=math.sqrt(two_m_over_h2 * (p.v0 - energy)))
    raise UnsupportedOperationError(
        f"wavenumbers(k, q, k0, Q) are defined for delta/rectangular potentials only, "
        f"not {type(p).__name__}; see asymptotic_wavenumbers"
    )


def asymptotic_wavenumbers(
    p: PotentialSpec, energy: float, ctx: PhysicsContext
) -> tuple[float, float]:
    """Propagating wavenumbers (k_minus, k_plus) of the two asymptotic channels.

    k_{+-inf}^2 = 2 m (E - V_{+-inf}) / hbar^2; raises WrongCaseError if either
    channel is evanescent (E at or below an asymptotic potential value).
    """
    v_minus, v_plus = asymptotic_values(p)
    if energy <= max(v_minus, v_plus):
        raise WrongCaseError(
            f"energy {energy!r} does not propagate in both asymptotic channels "
            f"(V-inf = {v_minus!r}, V+inf = {v_plus!r})"
        )
    two_m_over_h2 = 2.0 * ctx.mass / ctx.hbar**2
    return (
        math.sqrt(two_m_over_h2 * (energy - v_minus)),
        math.sqrt(two_m_over_h2 * (energy - v_plus)),
    )
