"""One-sided Jacobi rotation sweeps, the hot kernel behind the SVD.

The kernel orthogonalizes the rows of ``wt`` (the working matrix stored
transposed, so each "column" of the original matrix is a contiguous row) by
cyclic pairwise rotations, accumulating the same rotations into ``vt``.

Backend selection: one source function runs either as plain numpy or compiled
with numba ``@njit``.  Setting ``EINALG_DISABLE_NUMBA`` to a non-empty value
other than ``0`` forces the numpy path.  numba is imported lazily, on the
first call whose matrix is large enough for the compiled loop to matter
(``_JIT_MIN_DIM``; below it the numpy path finishes in well under a
millisecond, which is cheaper than cold-starting the JIT).  Both backends are
reachable directly for comparison; see ``benchmarks/svd_backends.py``.
"""

import os

import numpy as np

__all__ = ["sweep_rows", "sweep_rows_numpy", "jit_kernel", "numba_enabled"]

# Dispatch to the compiled backend from this leading dimension up.  The
# compiled loop wins at every size (see benchmarks/svd_backends.py), but below
# this the numpy path costs < 1 ms, so small one-shot callers never pay the
# numba import + compile latency.
_JIT_MIN_DIM = 16


def _sweep_rows(wt, vt, max_sweeps, rel_tol, abs_floor):
    # wt: (n, m) rows are the working columns; vt: (n, n) rows accumulate the
    # right factor.  Returns the number of sweeps before a clean pass, or -1
    # if max_sweeps was exhausted while rotations were still being applied.
    #
    # abs_floor is an absolute coupling threshold (squared machine noise on
    # the matrix scale).  Without it, pairs of numerically-annihilated columns
    # whose squared norms underflow would keep rotating on subnormal noise and
    # never converge.
    n = wt.shape[0]
    for sweep in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                app = np.vdot(wt[p], wt[p]).real
                aqq = np.vdot(wt[q], wt[q]).real
                apq = np.vdot(wt[p], wt[q])
                mag = abs(apq)
                if mag <= rel_tol * np.sqrt(app * aqq) or mag <= abs_floor:
                    continue
                rotated = True
                pc = np.conj(apq) / mag
                tau = (aqq - app) / (2.0 * mag)
                # Smaller root of t^2 + 2*tau*t - 1 = 0; hypot keeps huge tau finite.
                if tau >= 0.0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                rp = wt[p].copy()
                rq = wt[q].copy()
                wt[p] = c * rp - (s * pc) * rq
                wt[q] = s * rp + (c * pc) * rq
                rp = vt[p].copy()
                rq = vt[q].copy()
                vt[p] = c * rp - (s * pc) * rq
                vt[q] = s * rp + (c * pc) * rq
        if not rotated:
            return sweep
    return -1


sweep_rows_numpy = _sweep_rows

_flag = os.environ.get("EINALG_DISABLE_NUMBA", "").strip()
_disabled = _flag not in ("", "0")

# None: not attempted yet; False: unavailable (disabled or import failed).
_jit = None if not _disabled else False


def jit_kernel():
    """The numba-compiled backend, importing and compiling on first use.

    Returns None when the backend is disabled by environment flag or numba is
    not importable.
    """
    global _jit
    if _jit is None:
        try:
            import numba

            _jit = numba.njit(cache=True)(_sweep_rows)
        except ImportError:
            _jit = False
    return _jit or None


def numba_enabled() -> bool:
    return jit_kernel() is not None


def sweep_rows(wt, vt, max_sweeps, rel_tol, abs_floor):
    if wt.shape[0] >= _JIT_MIN_DIM:
        kernel = jit_kernel()
        if kernel is not None:
            return kernel(wt, vt, max_sweeps, rel_tol, abs_floor)
    return sweep_rows_numpy(wt, vt, max_sweeps, rel_tol, abs_floor)
