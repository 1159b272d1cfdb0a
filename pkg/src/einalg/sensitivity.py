"""Multilinear solver and normalized-error bounds for perturbed systems.

A system ``a * x = d`` is solved by the particular solution ``x = a+ * d``
(the free null-space family is documented but never materialized).  The system
is consistent exactly when ``a a+ d = d``; the solver reports that residual.

For a perturbed system ``(a + u b v) * y = d + delta_d`` the closed-form bound

    ``E_n <= (1 + eps_D) |a|^3 (2 eps_A^2 |a+| + eps_A^3 |a| + eps_A^4 |a|^2 |a+|)
             + eps_D |a| |a+|``

limits the normalized solution change ``E_n = |y - x| / |x|`` whenever the
split parts of the coefficient perturbation satisfy ``|x_i|, |e_i| <=
eps_A |a|`` and ``|delta_d| <= eps_D |d|``.  :func:`measure_error` runs the
whole pipeline (solve, update the pseudoinverse, re-solve, infer the eps
values from the actual tensors) and reports the measured error next to the
bound; :func:`sweep` evaluates the bound across a grid of perturbation levels
and norm scalings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateSolutionError, DomainError, ShapeError
from .inverses import pinv
from .tensor import EinsteinTensor, einstein_product, fro_norm
from .woodbury import LowRankUpdate, decompose_update, update_pinv

__all__ = [
    "SolveResult",
    "PerturbationSpec",
    "BoundReport",
    "solve",
    "norm_bound",
    "measure_error",
    "sweep",
]

CONSISTENCY_TOL = 1e-10


@dataclass(frozen=True)
class SolveResult:
    """Particular solution plus the consistency verdict for ``a * x = d``."""

    x: EinsteinTensor
    consistent: bool
    consistency_residual: float


@dataclass(frozen=True)
class PerturbationSpec:
    """Relative perturbation levels of the coefficient tensor and right side."""

    eps_a: float
    eps_d: float

    def __post_init__(self):
        for name, value in (("eps_a", self.eps_a), ("eps_d", self.eps_d)):
            if not (math.isfinite(value) and value >= 0.0):
                raise DomainError(f"{name} must be finite and >= 0, got {value}")


@dataclass(frozen=True)
class BoundReport:
    """One perturbation scenario: norms, eps levels, bound, measured error.

    ``bound`` is always recomputable from the stored fields via
    :func:`norm_bound`.  ``measured_error`` is None for bound-only rows
    (e.g. sweep grids).
    """

    norm_a: float
    norm_a_pinv: float
    eps_a: float
    eps_d: float
    bound: float
    measured_error: float | None = None


def solve(a: EinsteinTensor, d: EinsteinTensor, tol: float = CONSISTENCY_TOL) -> SolveResult:
    """Solve ``a * x = d`` by the pseudoinverse and flag consistency.

    Returns ``x = a+ * d``; for an invertible coefficient this is the unique
    solution, otherwise it is the least-squares-style candidate and
    ``consistent`` records whether it solves the system exactly (residual
    ``|a a+ d - d| / max(1, |d|)`` at most ``tol``).
    """
    if a.row_dims != d.row_dims:
        raise ShapeError(
            f"coefficient row modes {a.row_dims} do not match right side {d.row_dims}"
        )
    a_pinv = pinv(a)
    x = einstein_product(a_pinv, d)
    residual = fro_norm(einstein_product(a, x) - d) / max(1.0, fro_norm(d))
    return SolveResult(x=x, consistent=residual <= tol, consistency_residual=residual)


def norm_bound(norm_a: float, norm_a_pinv: float, p: PerturbationSpec) -> float:
    """Closed-form normalized-error bound at the given norms and eps levels."""
    if norm_a < 0 or norm_a_pinv < 0:
        raise DomainError("norms must be non-negative")
    eps_a, eps_d = p.eps_a, p.eps_d
    coefficient_terms = (
        2.0 * eps_a**2 * norm_a_pinv
        + eps_a**3 * norm_a
        + eps_a**4 * norm_a**2 * norm_a_pinv
    )
    return (1.0 + eps_d) * norm_a**3 * coefficient_terms + eps_d * norm_a * norm_a_pinv


def measure_error(
    a: EinsteinTensor,
    d: EinsteinTensor,
    upd: LowRankUpdate,
    delta_d: EinsteinTensor,
    tol: float = 1e-8,
) -> BoundReport:
    """Solve the base and the perturbed system and compare error to bound.

    The perturbed pseudoinverse goes through the low-rank update machinery
    (:func:`~einalg.woodbury.update_pinv`), so identity-conforming
    perturbations take the fast path.  The eps levels are inferred from the
    actual tensors (``eps_a`` as the largest split-part norm over ``|a|``,
    ``eps_d = |delta_d| / |d|``) so that the reported bound is valid for the
    perturbation that actually happened.
    """
    if delta_d.shape != d.shape:
        raise ShapeError(
            f"right-side perturbation shape {delta_d.shape} != {d.shape}"
        )
    base = solve(a, d)
    norm_x = fro_norm(base.x)
    if norm_x == 0.0:
        raise DegenerateSolutionError("base solution is zero; E_n is undefined")

    a_pinv = pinv(a)
    updated = update_pinv(a, a_pinv, upd, tol=tol)
    y = einstein_product(updated.s_pinv, d + delta_d)

    parts = decompose_update(a, a_pinv, upd)
    norm_a = fro_norm(a)
    norm_d = fro_norm(d)
    eps_a = (
        max(
            fro_norm(parts.x1),
            fro_norm(parts.x2),
            fro_norm(parts.e1),
            fro_norm(parts.e2),
        )
        / norm_a
    )
    eps_d = fro_norm(delta_d) / norm_d if norm_d > 0 else 0.0
    spec = PerturbationSpec(eps_a=eps_a, eps_d=eps_d)
    norm_a_pinv = fro_norm(a_pinv)
    return BoundReport(
        norm_a=norm_a,
        norm_a_pinv=norm_a_pinv,
        eps_a=eps_a,
        eps_d=eps_d,
        bound=norm_bound(norm_a, norm_a_pinv, spec),
        measured_error=fro_norm(y - base.x) / norm_x,
    )


def sweep(
    a: EinsteinTensor,
    d: EinsteinTensor,
    eps_a_list,
    eps_d: float,
    alpha_grid,
) -> list[BoundReport]:
    """Evaluate the bound over scalings ``alpha * a`` for each eps level.

    Scaling by ``alpha`` multiplies the coefficient norm and divides the
    pseudoinverse norm, so both are derived analytically from one decomposition
    of ``a``.  Rows come back ordered by ``(eps_a, alpha)``; the bound does not
    depend on ``d`` (kept for interface symmetry with the system under study).
    """
    eps_a_list = sorted(float(e) for e in eps_a_list)
    alpha_grid = sorted(float(al) for al in alpha_grid)
    if not eps_a_list or not alpha_grid:
        raise DomainError("eps and alpha grids must be nonempty")
    if any(al <= 0 for al in alpha_grid):
        raise DomainError("alpha scalings must be positive")
    if a.row_dims != d.row_dims:
        raise ShapeError(
            f"coefficient row modes {a.row_dims} do not match right side {d.row_dims}"
        )
    norm_a = fro_norm(a)
    norm_a_pinv = fro_norm(pinv(a))
    reports = []
    for eps_a in eps_a_list:
        spec_template = PerturbationSpec(eps_a=eps_a, eps_d=float(eps_d))
        for alpha in alpha_grid:
            scaled_norm = alpha * norm_a
            scaled_pinv_norm = norm_a_pinv / alpha
            reports.append(
                BoundReport(
                    norm_a=scaled_norm,
                    norm_a_pinv=scaled_pinv_norm,
                    eps_a=eps_a,
                    eps_d=float(eps_d),
                    bound=norm_bound(scaled_norm, scaled_pinv_norm, spec_template),
                )
            )
    return reports
