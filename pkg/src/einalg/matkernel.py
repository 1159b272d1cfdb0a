"""Self-contained dense complex matrix kernel: SVD, pseudoinverse, inverse.

The decomposition is a one-sided Jacobi SVD (see :mod:`einalg._jacobi` for the
hot sweep kernel and its backend selection), which is simple to make robust for
the small-to-moderate dense matrices this package targets and needs no LAPACK.

All tolerances are multiples of the standard numerical-rank threshold
``sigma_max * max(m, n) * 2**-52``: passing ``tol`` scales that default, so
``tol=1.0`` is the default behavior.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._jacobi import sweep_rows
from .errors import DomainError, NumericalError, ShapeError, SingularMatrixError

__all__ = ["Svd", "svd", "pinv_matrix", "inv_matrix", "numerical_rank"]

MAX_SWEEPS = 60
SWEEP_REL_TOL = 1e-14
_EPS = 2.0 ** -52


@dataclass(frozen=True)
class Svd:
    """Thin, truncated SVD ``a = u @ diag(s) @ v.conj().T``.

    ``u`` is m x r and ``v`` is n x r with orthonormal columns; ``s`` holds the
    r singular values above the truncation threshold, sorted descending.
    """

    u: np.ndarray
    s: np.ndarray
    v: np.ndarray

    @property
    def rank(self) -> int:
        return len(self.s)


def _as_matrix(mat) -> np.ndarray:
    mat = np.asarray(mat, dtype=np.complex128)
    if mat.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got ndim={mat.ndim}")
    if not np.all(np.isfinite(mat.real)) or not np.all(np.isfinite(mat.imag)):
        raise DomainError("matrix entries must be finite")
    return mat


def svd(mat, tol: float = 1.0) -> Svd:
    """Thin SVD truncated at ``tol * sigma_max * max(m, n) * 2**-52``."""
    mat = _as_matrix(mat)
    m, n = mat.shape
    if m < n:
        flipped = svd(mat.conj().T, tol=tol)
        return Svd(u=flipped.v, s=flipped.s, v=flipped.u)

    # Rows of wt are the columns of mat, so the sweep kernel works on
    # contiguous memory; vt rows accumulate the right singular directions.
    wt = np.ascontiguousarray(mat.T)
    vt = np.eye(n, dtype=np.complex128)
    abs_floor = (_EPS * np.linalg.norm(mat)) ** 2
    sweeps = sweep_rows(wt, vt, MAX_SWEEPS, SWEEP_REL_TOL, abs_floor)
    if sweeps < 0:
        raise NumericalError(
            f"rotation sweeps did not converge within {MAX_SWEEPS} passes"
        )

    norms = np.linalg.norm(wt, axis=1)
    order = np.argsort(-norms, kind="stable")
    sigma_max = norms[order[0]] if n else 0.0
    threshold = tol * sigma_max * max(m, n) * _EPS
    keep = order[norms[order] > threshold]
    s = norms[keep]
    u = wt[keep].T / s if len(keep) else np.zeros((m, 0), dtype=np.complex128)
    v = vt[keep].T if len(keep) else np.zeros((n, 0), dtype=np.complex128)
    return Svd(u=np.ascontiguousarray(u), s=s, v=np.ascontiguousarray(v))


def pinv_matrix(mat, tol: float = 1.0) -> np.ndarray:
    """Moore-Penrose pseudoinverse via the truncated SVD."""
    d = svd(mat, tol=tol)
    return (d.v / d.s) @ d.u.conj().T


def inv_matrix(mat) -> np.ndarray:
    """Inverse of a square, numerically full-rank matrix."""
    mat = _as_matrix(mat)
    m, n = mat.shape
    if m != n:
        raise ShapeError(f"inverse needs a square matrix, got {m} x {n}")
    d = svd(mat)
    if d.rank < n:
        raise SingularMatrixError(
            f"matrix is singular: numerical rank {d.rank} of {n}",
            rank=d.rank,
            sigma_min=float(d.s[-1]) if d.rank else 0.0,
        )
    return (d.v / d.s) @ d.u.conj().T


def numerical_rank(mat, tol: float = 1.0) -> int:
    """Number of singular values above the truncation threshold."""
    return svd(mat, tol=tol).rank
