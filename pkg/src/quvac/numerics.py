"""Dense complex-matrix substrate used by every other module.

Matrices are square numpy arrays of dtype complex128.  All functions are pure:
they never mutate their inputs and always return fresh arrays, so values can be
shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConvergenceFailure, DimensionMismatch, NotHermitian

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOL",
    "as_matrix",
    "identity",
    "zeros",
    "adjoint",
    "matmul",
    "trace",
    "hermiticity_defect",
    "hermitian_eig",
    "approx_equal",
    "max_abs_diff",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Absolute tolerances for the floating-point checks.

    eq_tol: entrywise matrix equality
    psd_tol: magnitude of an admissible negative eigenvalue
    herm_tol: admissible deviation from the adjoint
    trace_tol: admissible trace deviation

    The operator identities this package verifies hold exactly in exact
    arithmetic; these bounds only absorb double-precision roundoff, so values
    above 1e-6 are rejected.
    """

    eq_tol: float = 1e-10
    psd_tol: float = 1e-10
    herm_tol: float = 1e-9
    trace_tol: float = 1e-9

    def __post_init__(self):
        for name in ("eq_tol", "psd_tol", "herm_tol", "trace_tol"):
            value = getattr(self, name)
            if not 0.0 < value <= 1e-6:
                raise ValueError(f"{name} must lie in (0, 1e-6], got {value}")


DEFAULT_TOL = ToleranceConfig()


def as_matrix(entries) -> np.ndarray:
    """Coerce input to a square complex128 matrix, rejecting NaN/Inf entries."""
    m = np.array(entries, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128)


def zeros(dim: int) -> np.ndarray:
    return np.zeros((dim, dim), dtype=np.complex128)


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(m).T


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of two equal-dimension square matrices."""
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def trace(m: np.ndarray) -> complex:
    """Sum of diagonal entries."""
    return complex(np.trace(m))


def hermiticity_defect(m: np.ndarray) -> float:
    """Max entrywise deviation of a matrix from its adjoint."""
    return float(np.max(np.abs(m - adjoint(m))))


def hermitian_eig(m: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues sorted in
    descending order and eigenvectors as the corresponding columns.  Each
    eigenvector is phase-fixed so that its largest-magnitude component is
    real and positive, which makes the output deterministic away from
    degeneracies.  Within a degenerate cluster only the spanned subspace is
    meaningful, never the individual vectors.

    Raises:
        NotHermitian: the input deviates from its adjoint beyond herm_tol.
        ConvergenceFailure: the underlying iterative solver did not converge.
    """
    defect = hermiticity_defect(m)
    if defect > tol.herm_tol:
        raise NotHermitian(f"matrix is not Hermitian (defect {defect:.3e})")
    try:
        values, vectors = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigensolver failed: {exc}") from exc
    values = values[::-1].copy()
    vectors = vectors[:, ::-1].copy()
    for k in range(vectors.shape[1]):
        column = vectors[:, k]
        j = int(np.argmax(np.abs(column)))
        phase = column[j] / abs(column[j])
        vectors[:, k] = column * np.conj(phase)
    return values.astype(np.float64), vectors


def approx_equal(a: np.ndarray, b: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff the max entrywise absolute difference is within eq_tol."""
    return max_abs_diff(a, b) <= tol.eq_tol


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot compare shapes {a.shape} and {b.shape}")
    return float(np.max(np.abs(a - b)))
