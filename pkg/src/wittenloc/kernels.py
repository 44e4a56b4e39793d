"""Backend selection for the lattice-summation kernels.

Prefers the compiled extension; falls back to the NumPy implementation.
``WITTENLOC_BACKEND=python`` forces the fallback (useful for benchmarks
and debugging).
"""

import os

from . import _latkernels_py

if os.environ.get("WITTENLOC_BACKEND", "").lower() in ("python", "numpy"):
    _impl = _latkernels_py
    BACKEND = "numpy"
else:
    try:
        from . import _latkernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _latkernels_py
        BACKEND = "numpy"

power_sums = _impl.power_sums
weighted_power_sums = _impl.weighted_power_sums
sigma_product = _impl.sigma_product


def backend_name():
    """Name of the active kernel backend ('cython' or 'numpy')."""
    return BACKEND
