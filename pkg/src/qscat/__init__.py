"""Exact, WKB, and rigorously bounded 1D quantum scattering probabilities.

Four canonical potentials (delta, rectangular, Eckart, Hulthen), closed-form
amplitudes, a semiclassical tunneling approximation, a sech^2 transfer-matrix
lower bound, resonance finding, and a sweep/CSV front end.
"""

from .core import (
    NATURAL_UNITS,
    PhysicsContext,
    Probabilities,
    ScatteringAmplitudes,
    probabilities_from_amplitudes,
    unitarity_defect,
)
from .potentials import (
    Delta,
    Eckart,
    Hulthen,
    PotentialSpec,
    Rectangular,
    Wavenumbers,
    asymptotic_values,
    asymptotic_wavenumbers,
    evaluate,
    wavenumbers,
)
from .exact import (
    HulthenParams,
    delta_amplitudes,
    eckart_reflection_paper,
    eckart_transmission,
    eckart_transmission_amplitude,
    hulthen_amplitudes,
    hulthen_params,
    rectangular_above,
    rectangular_below,
)
from .specfun import DEFAULT_SERIES, SeriesControl, gamma, gauss_2f1, log_gamma
from .wkb import (
    BarrierRegion,
    QuadratureControl,
    RegionSource,
    find_turning_points,
    fixed_limits,
    wkb_for_potential,
    wkb_transmission,
)
from .bound import (
    BoundResult,
    bound_for_potential,
    rectangular_bound_closed_form,
    transmission_bound,
)
from .resonance import (
    Kind,
    ResonanceListing,
    ResonanceReport,
    Source,
    analytic_resonances,
    numeric_resonances,
)
from .sweep import MethodResult, SweepRow, SweepSpec, evaluate_methods, run_sweep

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
