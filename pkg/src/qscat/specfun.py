"""Complex special functions: principal-branch log-gamma and Gauss 2F1.

Only what the exact Eckart and Hulthen solutions need: log Gamma(z) for
complex z, and 2F1(a, b; c; z) with complex parameters and a real argument
in [0, 1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _kernels
from .errors import ConvergenceError, InvalidInputError, PoleError

# Lanczos rational approximation, g = 7, nine coefficients; relative accuracy
# around 1e-13 on the half-plane Re z >= 0.5 after the shift below.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


@dataclass(frozen=True)
class SeriesControl:
    """Convergence control for the hypergeometric power series."""

    rel_tol: float = 1e-15
    max_terms: int = 20000

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-6):
            raise InvalidInputError(f"rel_tol must lie in (0, 1e-6], got {self.rel_tol!r}")
        if self.max_terms < 100:
            raise InvalidInputError(f"max_terms must be >= 100, got {self.max_terms!r}")


DEFAULT_SERIES = SeriesControl()


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _lanczos_loggamma(z: complex) -> complex:
    # valid on Re z >= 0.5
    w = z - 1.0
    x = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        x += _LANCZOS_COEFFS[i] / (w + i)
    t = w + _LANCZOS_G + 0.5
    return _LOG_SQRT_TWO_PI + (w + 0.5) * cmath.log(t) - t + cmath.log(x)


def _log_sin_pi_upper(z: complex) -> complex:
    # analytic continuation of log sin(pi z) over Im z >= 0, anchored at z = 1/2;
    # writing sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}) keeps |e^{2 i pi z}| <= 1
    # there, so the principal log of the bracket never crosses a branch cut
    w = cmath.exp(2j * math.pi * z)
    return math.log(0.5) + 0.5j * math.pi - 1j * math.pi * z + cmath.log(1.0 - w)


def log_gamma(z) -> complex:
    """Principal branch of log Gamma(z).

    Lanczos approximation on Re z >= 0.5; the reflection formula (with an
    unwound log-sin) continues it to the left half-plane.  On the cut
    (negative real axis) the value is the limit from the upper half-plane.
    Relative accuracy is ~1e-13 for |z| <= 100.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidInputError(f"log_gamma argument must be finite, got {z!r}")
    if _is_nonpositive_integer(z):
        raise PoleError(f"log_gamma pole at non-positive integer z = {z}")
    if z.real >= 0.5:
        return _lanczos_loggamma(z)
    if z.imag >= 0.0:
        return _LOG_PI - _log_sin_pi_upper(z) - _lanczos_loggamma(1.0 - z)
    return log_gamma(z.conjugate()).conjugate()


def gamma(z) -> complex:
    """exp(log_gamma(z)); convenience for amplitude formulas."""
    return cmath.exp(log_gamma(z))


def gauss_2f1(a, b, c, z: float, ctrl: SeriesControl = DEFAULT_SERIES) -> complex:
    """Gauss hypergeometric 2F1(a, b; c; z) for real z in [0, 1).

    Direct power series with the term-ratio recurrence; terminates once the
    current term stays below rel_tol times the partial sum for three
    consecutive terms (guards against transient dips of the complex
    Pochhammer ratios).

    Raises PoleError when c is a non-positive integer and ConvergenceError
    (carrying the last term magnitude) when max_terms is exhausted.
    """
    a, b, c = complex(a), complex(b), complex(c)
    z = float(z)
    if not 0.0 <= z < 1.0:
        raise InvalidInputError(f"series argument must satisfy 0 <= z < 1, got {z!r}")
    if _is_nonpositive_integer(c):
        raise PoleError(f"gauss_2f1 pole: c = {c} is a non-positive integer")
    if z == 0.0:
        return 1.0 + 0.0j
    value, used, converged, last = _kernels.hyp2f1_series(
        a, b, c, z, ctrl.rel_tol, ctrl.max_terms
    )
    if not converged:
        raise ConvergenceError(
            f"2F1 series did not converge within {ctrl.max_terms} terms "
            f"(last term magnitude {last:.3e}); argument z = {z} may be too close to 1",
            estimate=value,
            last_term=last,
        )
    return value
