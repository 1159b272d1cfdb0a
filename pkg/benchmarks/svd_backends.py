"""Timing comparison of the two sweep-kernel backends.

Runs the one-sided rotation sweeps behind the SVD once per backend (plain
numpy vs numba-compiled) across a range of square sizes and prints a table.
The first jit call pays compilation; it is timed separately so the steady
state is visible.  The crossover motivates the dispatch cutoff in
``einalg._jacobi`` (below it the jit call gains nothing over numpy).

Usage:  python3 benchmarks/svd_backends.py [--sizes 8 16 32 64 96] [--repeats 5]

Setting EINALG_DISABLE_NUMBA=1 in the environment would strip the jit
backend; this script needs both, so run it without the flag.
"""

import argparse
import time

import numpy as np

from einalg._jacobi import jit_kernel, sweep_rows_numpy

MAX_SWEEPS = 60
REL_TOL = 1e-14


def run_once(kernel, mat):
    wt = np.ascontiguousarray(mat.T)
    vt = np.eye(mat.shape[1], dtype=np.complex128)
    floor = (2.0**-52 * np.linalg.norm(mat)) ** 2
    start = time.perf_counter()
    sweeps = kernel(wt, vt, MAX_SWEEPS, REL_TOL, floor)
    elapsed = time.perf_counter() - start
    assert sweeps >= 0
    return elapsed


def best_of(kernel, mat, repeats):
    return min(run_once(kernel, mat) for _ in range(repeats))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 24, 32, 48, 64, 96])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    jit = jit_kernel()
    if jit is None:
        raise SystemExit(
            "numba backend unavailable (EINALG_DISABLE_NUMBA set, or numba missing)"
        )

    rng = np.random.default_rng(0)
    warm = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    compile_cost = run_once(jit, warm)
    print(f"jit first call (compile + run, 4x4): {compile_cost * 1e3:9.2f} ms")
    print()
    print(f"{'size':>6} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for n in args.sizes:
        mat = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        t_np = best_of(sweep_rows_numpy, mat, args.repeats)
        t_nb = best_of(jit, mat, args.repeats)
        print(f"{n:>6} {t_np * 1e3:>10.3f} {t_nb * 1e3:>10.3f} {t_np / t_nb:>8.2f}x")


if __name__ == "__main__":
    main()
