"""Hot numeric kernels: numba-jitted fast path with a pure-numpy fallback.

The Gauss hypergeometric power series dominates the runtime of the Hulthen
sweeps (hundreds of terms per point, six series per point), so it gets a
compiled kernel.  The backend is fixed at import time by the QSCAT_BACKEND
environment variable:

* unset        -> numba when importable, else numpy
* ``numba``    -> require the jitted kernel (ImportError if numba is absent)
* ``numpy``    -> blockwise vectorised fallback, no compilation

Both paths implement the identical termination rule (three consecutive terms
below rel_tol times the running sum), so they agree to the last few ulps;
each is individually deterministic.  ``benchmarks/bench_2f1.py`` compares
them head to head.
"""

from __future__ import annotations

import os

import numpy as np

_CONSECUTIVE_SMALL = 3
_BLOCK = 256


def _hyp2f1_series_scalar(a, b, c, z, rel_tol, max_terms):
    # term ratio: t_{n+1}/t_n = (a+n)(b+n) z / ((c+n)(n+1))
    s = 1.0 + 0.0j
    term = 1.0 + 0.0j
    small = 0
    n = 0
    while n < max_terms:
        term = term * ((a + n) * (b + n) * z / ((c + n) * (n + 1.0)))
        s = s + term
        if abs(term) < rel_tol * abs(s):
            small += 1
            if small == _CONSECUTIVE_SMALL:
                return s, n + 1, True, abs(term)
        else:
            small = 0
        n += 1
    return s, n, False, abs(term)


def _hyp2f1_series_numpy(a, b, c, z, rel_tol, max_terms):
    s = 1.0 + 0.0j
    term = 1.0 + 0.0j
    carry = 0
    n0 = 0
    while n0 < max_terms:
        ns = np.arange(n0, min(n0 + _BLOCK, max_terms), dtype=np.float64)
        ratios = (a + ns) * (b + ns) * z / ((c + ns) * (ns + 1.0))
        terms = term * np.cumprod(ratios)
        sums = s + np.cumsum(terms)
        flags = np.abs(terms) < rel_tol * np.abs(sums)
        # run length of consecutive True ending at each index, with carry-in
        idx = np.arange(flags.size)
        false_pos = np.where(~flags, idx, -1)
        last_false = np.maximum.accumulate(false_pos)
        runlen = idx - last_false
        runlen = np.where(last_false == -1, runlen + carry, runlen)
        hits = np.nonzero(runlen >= _CONSECUTIVE_SMALL)[0]
        if hits.size:
            j = int(hits[0])
            return complex(sums[j]), n0 + j + 1, True, float(np.abs(terms[j]))
        term = complex(terms[-1])
        s = complex(sums[-1])
        carry = int(runlen[-1]) if flags[-1] else 0
        n0 += flags.size
    return s, n0, False, abs(term)


def _pick_backend():
    choice = os.environ.get("QSCAT_BACKEND", "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(f"QSCAT_BACKEND must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numpy":
        return "numpy", _hyp2f1_series_numpy
    try:
        from numba import njit
    except ImportError:
        if choice == "numba":
            raise
        return "numpy", _hyp2f1_series_numpy
    return "numba", njit(cache=True)(_hyp2f1_series_scalar)


_BACKEND, _hyp2f1_impl = _pick_backend()


def active_backend() -> str:
    """Name of the kernel backend selected at import time ('numba' or 'numpy')."""
    return _BACKEND


def hyp2f1_series(
    a: complex, b: complex, c: complex, z: float, rel_tol: float, max_terms: int
) -> tuple[complex, int, bool, float]:
    """Raw Gauss series sum; returns (value, terms_used, converged, last_term_mag).

    No argument validation here; ``specfun.gauss_2f1`` is the checked entry point.
    """
    value, used, converged, last = _hyp2f1_impl(
        complex(a), complex(b), complex(c), float(z), float(rel_tol), int(max_terms)
    )
    return complex(value), int(used), bool(converged), float(last)
