"""Closed-form scattering amplitudes and probabilities for the four potentials.

Each case maps to one function: delta, rectangular above/below the barrier,
Eckart transmission (plus its literature reflection formula), and the Hulthen
hypergeometric amplitudes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import PhysicsContext, ScatteringAmplitudes
from .errors import InvalidInputError, WrongCaseError
from .potentials import Eckart, Hulthen, asymptotic_wavenumbers
from .specfun import DEFAULT_SERIES, SeriesControl, gauss_2f1, log_gamma


def delta_amplitudes(alpha: float, energy: float, ctx: PhysicsContext) -> ScatteringAmplitudes:
    """Delta potential: t = k/(k - i k0), r = i k0/(k - i k0), k0 = m alpha / hbar^2."""
    if not (math.isfinite(energy) and energy > 0):
        raise InvalidInputError(f"scattering requires energy > 0, got {energy!r}")
    if not (math.isfinite(alpha) and alpha > 0):
        raise InvalidInputError(f"delta strength alpha must be positive, got {alpha!r}")
    k = math.sqrt(2.0 * ctx.mass * energy) / ctx.hbar
    k0 = ctx.mass * alpha / ctx.hbar**2
    denom = k - 1j * k0
    return ScatteringAmplitudes(t=k / denom, r=1j * k0 / denom, k_in=k, k_out=k)


def rectangular_above(
    v0: float, a: float, energy: float, ctx: PhysicsContext
) -> ScatteringAmplitudes:
    """Rectangular barrier with E > v0 > 0 (oscillatory interior).

    t = 4 k q e^{2ika} / [(k+q)^2 e^{2iqa} - (k-q)^2 e^{-2iqa}]
    r = 2i (k^2 - q^2) sin(2qa) e^{2ika} / [same denominator]
    """
    if not (v0 > 0 and a > 0):
        raise InvalidInputError(f"need v0 > 0 and a > 0, got v0={v0!r}, a={a!r}")
    if not energy > v0:
        raise WrongCaseError(
            f"energy {energy!r} is not above the barrier {v0!r}; use rectangular_below"
        )
    two_m_over_h2 = 2.0 * ctx.mass / ctx.hbar**2
    k = math.sqrt(two_m_over_h2 * energy)
    q = math.sqrt(two_m_over_h2 * (energy - v0))
    denom = (k + q) ** 2 * cmath.exp(2j * q * a) - (k - q) ** 2 * cmath.exp(-2j * q * a)
    phase = cmath.exp(2j * k * a)
    t = 4.0 * k * q * phase / denom
    r = 2j * (k**2 - q**2) * math.sin(2.0 * q * a) * phase / denom
    return ScatteringAmplitudes(t=t, r=r, k_in=k, k_out=k)


def rectangular_below(
    v0: float, a: float, energy: float, ctx: PhysicsContext
) -> ScatteringAmplitudes:
    """Rectangular barrier with 0 < E < v0 (tunneling).

    t = 2 i Q k e^{-2ika} / [(k^2 - Q^2) sinh(2Qa) + 2 i k Q cosh(2Qa)]
    r = (k^2 + Q^2) sinh(2Qa) e^{-2ika} / [same denominator]
    """
    if not (v0 > 0 and a > 0):
        raise InvalidInputError(f"need v0 > 0 and a > 0, got v0={v0!r}, a={a!r}")
    if not 0 < energy < v0:
        raise WrongCaseError(
            f"tunneling requires 0 < energy < v0, got energy={energy!r}, v0={v0!r}; "
            f"use rectangular_above for E > v0"
        )
    two_m_over_h2 = 2.0 * ctx.mass / ctx.hbar**2
    k = math.sqrt(two_m_over_h2 * energy)
    big_q = math.sqrt(two_m_over_h2 * (v0 - energy))
    sh = math.sinh(2.0 * big_q * a)
    ch = math.cosh(2.0 * big_q * a)
    denom = (k**2 - big_q**2) * sh + 2j * k * big_q * ch
    phase = cmath.exp(-2j * k * a)
    t = 2j * big_q * k * phase / denom
    r = (k**2 + big_q**2) * sh * phase / denom
    return ScatteringAmplitudes(t=t, r=r, k_in=k, k_out=k)


def _cos_of_principal_sqrt(d: float) -> float:
    # cos(pi sqrt(d)) with the imaginary-argument case rewritten as cosh
    if d >= 0.0:
        return math.cos(math.pi * math.sqrt(d))
    return math.cosh(math.pi * math.sqrt(-d))


def eckart_transmission(p: Eckart, energy: float, ctx: PhysicsContext) -> float:
    """Transmission probability for the Eckart profile.

    T = sinh(pi k- a) sinh(pi k+ a) / [sinh^2(pi kbar a) + cos^2(pi s)],
    s = sqrt(1/4 - 2 m v0 a^2 / hbar^2); cos(i x) is evaluated as cosh(x).
    """
    k_minus, k_plus = asymptotic_wavenumbers(p, energy, ctx)
    k_bar = 0.5 * (k_plus + k_minus)
    d = 0.25 - 2.0 * ctx.mass * p.v0 * p.a**2 / ctx.hbar**2
    c = _cos_of_principal_sqrt(d)
    num = math.sinh(math.pi * k_minus * p.a) * math.sinh(math.pi * k_plus * p.a)
    den = math.sinh(math.pi * k_bar * p.a) ** 2 + c**2
    return num / den


def eckart_transmission_amplitude(p: Eckart, energy: float, ctx: PhysicsContext) -> complex:
    """Gamma-function form of the Eckart transmission amplitude.

    t = -i/(sqrt(k+ k-) a) * G(i kbar a + 1/2 + s) G(i kbar a + 1/2 - s)
        / (G(i k+ a) G(i k- a))

    |t|^2 reproduces eckart_transmission; kept as an independent route that
    exercises log_gamma in situ.
    """
    k_minus, k_plus = asymptotic_wavenumbers(p, energy, ctx)
    k_bar = 0.5 * (k_plus + k_minus)
    s = cmath.sqrt(complex(0.25 - 2.0 * ctx.mass * p.v0 * p.a**2 / ctx.hbar**2))
    log_num = log_gamma(1j * k_bar * p.a + 0.5 + s) + log_gamma(1j * k_bar * p.a + 0.5 - s)
    log_den = log_gamma(1j * k_plus * p.a) + log_gamma(1j * k_minus * p.a)
    prefactor = -1j / (math.sqrt(k_plus * k_minus) * p.a)
    return prefactor * cmath.exp(log_num - log_den)


def eckart_reflection_paper(
    p: Eckart, energy: float, ctx: PhysicsContext, convention: str = "paper"
) -> float:
    """Literature reflection formula for the Eckart profile (diagnostic).

    R = [cosh(pi a (k - w)) - cos(pi b)] / [cosh(pi a (k + w)) - cos(pi b)]
    with w = sqrt(k+^2 + k-^2 - k^2) and b = sqrt(1 - 8 m v0 a^2 / hbar^2).

    The symbol k is ambiguous when the asymptotes differ: ``convention="paper"``
    takes k = sqrt(2 m E)/hbar verbatim, ``convention="asymptotic"`` reads it as
    the incoming k- (which makes w = k+); the two coincide whenever one
    asymptote is zero.  Neither reproduces 1 - T in general, and in the
    cosh branch (v0 > hbar^2/(8 m a^2)) the quotient can exceed 1, so
    comparison tables use (T, 1 - T) as the primary pair.
    """
    k_minus, k_plus = asymptotic_wavenumbers(p, energy, ctx)
    if convention == "paper":
        if energy <= 0:
            raise InvalidInputError(
                f"the verbatim convention k = sqrt(2mE)/hbar needs E > 0, got {energy!r}"
            )
        k = math.sqrt(2.0 * ctx.mass * energy) / ctx.hbar
    elif convention == "asymptotic":
        k = k_minus
    else:
        raise InvalidInputError(f"convention must be 'paper' or 'asymptotic', got {convention!r}")
    w_sq = k_plus**2 + k_minus**2 - k**2
    if w_sq < 0:
        raise InvalidInputError(
            f"reflection formula needs k+^2 + k-^2 - k^2 >= 0, got {w_sq!r}"
        )
    w = math.sqrt(w_sq)
    cb = _cos_of_principal_sqrt(1.0 - 8.0 * ctx.mass * p.v0 * p.a**2 / ctx.hbar**2)
    num = math.cosh(math.pi * p.a * (k - w)) - cb
    den = math.cosh(math.pi * p.a * (k + w)) - cb
    return num / den


@dataclass(frozen=True)
class HulthenParams:
    """Derived quantities entering the Hulthen hypergeometric amplitudes.

    The dispersion is k^2 = E^2 - m^2 and p^2 = (E + v0/q)^2 - m^2 (quadratic
    in the energy, unlike the other potentials); implemented verbatim.
    """

    mu: complex
    nu: complex
    lam: complex
    p: float
    k: float
    energy: float
    mass: float
    v0: float
    q: float
    a: float


def hulthen_params(p: Hulthen, energy: float, mass: float) -> HulthenParams:
    """Build mu = ik/a, nu = ip/a, lam = i v0/(a q) for a propagating channel."""
    if not (math.isfinite(mass) and mass > 0):
        raise InvalidInputError(f"mass must be positive, got {mass!r}")
    if not energy > mass:
        raise WrongCaseError(
            f"propagation requires energy > mass (k^2 = E^2 - m^2 > 0); "
            f"got energy={energy!r}, mass={mass!r}"
        )
    k = math.sqrt(energy**2 - mass**2)
    p_wave = math.sqrt((energy + p.v0 / p.q) ** 2 - mass**2)
    return HulthenParams(
        mu=1j * k / p.a,
        nu=1j * p_wave / p.a,
        lam=1j * p.v0 / (p.a * p.q),
        p=p_wave,
        k=k,
        energy=energy,
        mass=mass,
        v0=p.v0,
        q=p.q,
        a=p.a,
    )


def hulthen_amplitudes(
    p: Hulthen,
    energy: float,
    mass: float = 1.0,
    ctrl: SeriesControl = DEFAULT_SERIES,
) -> ScatteringAmplitudes:
    """Hypergeometric transmission/reflection amplitudes for the Hulthen barrier.

    Six distinct 2F1 factors recur across the two amplitudes; each gets a
    named intermediate (f1..f6) and the full assembly is frozen by golden
    tests.  Series non-convergence and c-parameter poles bubble up from
    gauss_2f1 (perturb the energy in that case).
    """
    par = hulthen_params(p, energy, mass)
    mu, nu, lam, q = par.mu, par.nu, par.lam, p.q

    f1 = gauss_2f1(1 + lam - mu - nu, 1 + lam - mu + nu, 2 - 2 * mu, q, ctrl)
    f2 = gauss_2f1(lam + mu - nu, lam + mu + nu, 1 + 2 * mu, q, ctrl)
    f3 = gauss_2f1(1 + lam + mu - nu, 1 + lam + mu + nu, 2 + 2 * mu, q, ctrl)
    f4 = gauss_2f1(lam - mu - nu, lam - mu + nu, 1 - 2 * mu, q, ctrl)
    f5 = gauss_2f1(1 - lam - mu - nu, 1 - lam - mu + nu, 2 - 2 * mu, q, ctrl)
    f6 = gauss_2f1(-lam - mu - nu, -lam - mu + nu, 1 - 2 * mu, q, ctrl)

    a_plus = lam**2 + 2 * lam * mu + mu**2 - nu**2
    a_minus = lam**2 - 2 * lam * mu + mu**2 - nu**2

    denom = (
        q * a_plus * f5 * f4
        + q * a_minus * f1 * f6
        - (2 * mu) * (1 - 2 * mu) * f4 * f6
    )
    t_num = (
        q * (1 + 2 * mu) * a_minus * f1 * f2
        - q * (1 - 2 * mu) * a_plus * f3 * f4
        - (1 - 2 * mu) * (2 * mu) * (1 + 2 * mu) * f2 * f4
    )
    r_num = (1 + 2 * mu) * f2 * f5 + (1 - 2 * mu) * f3 * f6

    one_minus_q_pow = cmath.exp(2 * lam * math.log(1.0 - q))
    q_pow_2mu = cmath.exp(2 * mu * math.log(q))
    t = one_minus_q_pow * q_pow_2mu / (1 + 2 * mu) * t_num / denom

    flux = math.sqrt((par.energy + par.k) / (par.energy - par.k))
    r = -q * q_pow_2mu * a_plus / (1 + 2 * mu) * flux * r_num / denom

    return ScatteringAmplitudes(t=t, r=r, k_in=par.k, k_out=par.k)
