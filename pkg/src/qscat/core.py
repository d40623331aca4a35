"""Shared domain types and the flux-conservation (unitarity) check.

Complex amplitudes are plain Python ``complex`` values.  Natural units
(hbar = m = 1) are the default everywhere and can be overridden through
:class:`PhysicsContext`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError


@dataclass(frozen=True)
class PhysicsContext:
    """Values of hbar and the particle mass entering every wavenumber formula."""

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.hbar) and self.hbar > 0):
            raise InvalidInputError(f"hbar must be a positive real, got {self.hbar!r}")
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise InvalidInputError(f"mass must be a positive real, got {self.mass!r}")


NATURAL_UNITS = PhysicsContext()


@dataclass(frozen=True)
class ScatteringAmplitudes:
    """Complex transmission/reflection amplitude pair for one channel.

    Amplitudes follow the flux-normalised asymptotic convention (each plane
    wave carries a 1/sqrt(k) factor), so T = |t|^2 and R = |r|^2 hold even
    when the incoming and outgoing wavenumbers differ.
    """

    t: complex
    r: complex
    k_in: float
    k_out: float


@dataclass(frozen=True)
class Probabilities:
    transmission: float
    reflection: float


def _require_finite(name: str, z: complex) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidInputError(f"non-finite amplitude component in {name}: {z!r}")


def probabilities_from_amplitudes(a: ScatteringAmplitudes) -> Probabilities:
    """Squared moduli T = |t|^2 and R = |r|^2 of the amplitudes.

    Values are returned raw (no clamping) so that property tests see the
    actual computed numbers; clamping to [0, 1] is a display concern.
    """
    _require_finite("t", complex(a.t))
    _require_finite("r", complex(a.r))
    return Probabilities(abs(complex(a.t)) ** 2, abs(complex(a.r)) ** 2)


def unitarity_defect(p: Probabilities) -> float:
    """|T + R - 1|; zero for exact elastic scattering."""
    return abs(p.transmission + p.reflection - 1.0)
