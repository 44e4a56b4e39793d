#!/usr/bin/env python3
"""Benchmark the compiled lattice kernels against the NumPy fallback.

Times the two hot reductions (multi-exponent power sums and the sigma
factor product) on square-lattice point sets of growing radius, and the
end-to-end Eisenstein evaluation through each backend.

Run after installing the package:

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import importlib
import time

import numpy as np

from wittenloc import _latkernels_py
from wittenloc.lattice import Lattice, lattice_points, _taper_weights

try:
    _compiled = importlib.import_module("wittenloc._latkernels")
except ImportError:
    _compiled = None


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _compiled is None:
        print("compiled extension not available; showing NumPy numbers only")
    backends = [("numpy", _latkernels_py)]
    if _compiled is not None:
        backends.append(("cython", _compiled))

    lat = Lattice.square()
    exponents = list(range(4, 25, 2))
    print(f"{'radius':>8} {'points':>9} {'kernel':>22} "
          + " ".join(f"{name:>12}" for name, _ in backends)
          + ("  speedup" if _compiled else ""))
    for radius in (100.0, 200.0, 400.0):
        pts = lattice_points(lat, radius)
        w = _taper_weights(np.abs(pts), radius)
        rows = [
            ("power_sums[G4..G24]",
             lambda mod: best_of(args.repeat, mod.weighted_power_sums, pts, w,
                                 exponents)),
            ("sigma_product",
             lambda mod: best_of(args.repeat, mod.sigma_product, 0.3 + 0.1j,
                                 pts)),
        ]
        for label, runner in rows:
            times = [runner(mod) for _, mod in backends]
            line = f"{radius:>8.0f} {len(pts):>9} {label:>22} " + " ".join(
                f"{t * 1e3:>10.2f}ms" for t in times
            )
            if len(times) == 2 and times[1] > 0:
                line += f"  {times[0] / times[1]:>6.2f}x"
            print(line)

    # agreement check between the backends
    if _compiled is not None:
        pts = lattice_points(lat, 200.0)
        w = _taper_weights(np.abs(pts), 200.0)
        a = _latkernels_py.weighted_power_sums(pts, w, [4])[4]
        b = _compiled.weighted_power_sums(pts, w, [4])[4]
        print(f"\nbackend agreement |delta G4| = {abs(a - b):.3e}")


if __name__ == "__main__":
    main()
