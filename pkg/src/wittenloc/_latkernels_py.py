"""NumPy implementations of the lattice-summation kernels.

Fallback backend used when the compiled extension is unavailable.  The
interfaces mirror ``_latkernels.pyx`` exactly.
"""

import numpy as np


def power_sums(points, exponents):
    """Sum of lam**-k over the points, for each k in exponents.

    Returns a dict {k: complex}.  Powers are built by iterated
    multiplication so a single pass serves all requested exponents.
    """
    exponents = sorted(set(int(k) for k in exponents))
    if not exponents:
        return {}
    inv = 1.0 / np.asarray(points, dtype=np.complex128)
    out = {}
    cur = np.ones_like(inv)
    for k in range(1, exponents[-1] + 1):
        cur = cur * inv
        if k in exponents:
            out[k] = complex(np.sum(cur))
    return out


def weighted_power_sums(points, weights, exponents):
    """Like power_sums but each term carries a real weight."""
    exponents = sorted(set(int(k) for k in exponents))
    if not exponents:
        return {}
    inv = 1.0 / np.asarray(points, dtype=np.complex128)
    w = np.asarray(weights, dtype=np.float64)
    out = {}
    cur = np.ones_like(inv)
    for k in range(1, exponents[-1] + 1):
        cur = cur * inv
        if k in exponents:
            out[k] = complex(np.sum(cur * w))
    return out


def sigma_product(z, points):
    """Product of (1 - z/lam) * exp(z/lam + z^2/(2 lam^2)) over the points."""
    z = complex(z)
    w = z / np.asarray(points, dtype=np.complex128)
    factors = (1.0 - w) * np.exp(w + 0.5 * w * w)
    return complex(np.prod(factors))
