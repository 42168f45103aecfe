"""Vacuum-extended qudit space: validated states, observables and projectors.

The Hilbert space is the direct sum of a d-dimensional qudit space and a
one-dimensional vacuum sector.  Basis convention, fixed globally: indices
0..d-1 are the qudit computational basis, index d is the vacuum.  Observables
act on the qudit sector only and annihilate the vacuum, so their extended
matrix carries an identically zero vacuum row and column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import (
    BadTrace,
    DimensionMismatch,
    InvalidDimension,
    InvalidState,
    NotHermitian,
    NotPositive,
    UnknownEigenvalue,
)
from .numerics import (
    DEFAULT_TOL,
    ToleranceConfig,
    as_matrix,
    hermitian_eig,
    hermiticity_defect,
    identity,
    zeros,
)

__all__ = [
    "ExtendedSpace",
    "DensityOperator",
    "Observable",
    "EigenvalueSelection",
    "Projector",
    "make_space",
    "vacuum_state",
    "embed_qudit_state",
    "validate_density",
    "make_observable",
    "selected_eigenvectors",
    "build_projector",
    "complement",
]

# Eigenvalues closer than this are treated as one degenerate cluster.
DEGENERACY_GAP = 1e-8


@dataclass(frozen=True)
class ExtendedSpace:
    """Dimension bookkeeping for the qudit-plus-vacuum space."""

    qudit_dim: int

    def __post_init__(self):
        d = self.qudit_dim
        if not isinstance(d, (int, np.integer)) or isinstance(d, bool):
            raise InvalidDimension(f"qudit dimension must be an integer, got {d!r}")
        if d < 2:
            raise InvalidDimension(f"qudit dimension must be >= 2, got {d}")
        object.__setattr__(self, "qudit_dim", int(d))

    @property
    def total_dim(self) -> int:
        return self.qudit_dim + 1

    @property
    def vac_index(self) -> int:
        return self.qudit_dim


def make_space(d: int) -> ExtendedSpace:
    """Extended space for a d-dimensional qudit (d >= 2)."""
    return ExtendedSpace(d)


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """A state on the extended space: Hermitian, PSD, unit trace.

    Construct through vacuum_state, embed_qudit_state or validate_density;
    the constructor itself only checks the dimension.
    """

    space: ExtendedSpace
    matrix: np.ndarray

    def __post_init__(self):
        n = self.space.total_dim
        if self.matrix.shape != (n, n):
            raise DimensionMismatch(
                f"state matrix shape {self.matrix.shape} does not match total dimension {n}"
            )


@dataclass(frozen=True, eq=False)
class Observable:
    """A qudit-sector observable extended by a zero vacuum row and column.

    spectrum lists (eigenvalue, multiplicity) pairs of the qudit block in
    descending order, with eigenvalues closer than DEGENERACY_GAP merged into
    one cluster.  qudit_eigenvectors holds the matching eigenvector columns.
    """

    space: ExtendedSpace
    matrix: np.ndarray
    spectrum: tuple[tuple[float, int], ...]
    qudit_eigenvalues: np.ndarray = field(repr=False)
    qudit_eigenvectors: np.ndarray = field(repr=False)

    def __post_init__(self):
        n = self.space.total_dim
        if self.matrix.shape != (n, n):
            raise DimensionMismatch(
                f"observable matrix shape {self.matrix.shape} does not match total dimension {n}"
            )
        vac = self.space.vac_index
        if np.any(self.matrix[vac, :] != 0) or np.any(self.matrix[:, vac] != 0):
            raise ValueError("observable must annihilate the vacuum (zero vacuum row/column)")


@dataclass(frozen=True)
class EigenvalueSelection:
    """Eigenvalues whose eigenspaces are marked for destruction.

    Values are matched against an observable's spectrum within match_tol;
    they must be pairwise distinct at that tolerance.  May be empty.
    """

    values: tuple[float, ...] = ()
    match_tol: float = 1e-8

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not self.match_tol > 0:
            raise ValueError(f"match_tol must be positive, got {self.match_tol}")
        for i, a in enumerate(values):
            for b in values[i + 1 :]:
                if abs(a - b) <= self.match_tol:
                    raise ValueError(
                        f"selection values {a} and {b} coincide within match_tol {self.match_tol}"
                    )


@dataclass(frozen=True, eq=False)
class Projector:
    """Orthogonal projector on the extended space.

    support lists the selected basis indices when the matrix is exactly
    diagonal with 0/1 entries, None otherwise.  Projectors built from an
    observable are always supported on the qudit sector; complements are not.
    """

    space: ExtendedSpace
    matrix: np.ndarray
    rank: int
    support: tuple[int, ...] | None = None

    def __post_init__(self):
        n = self.space.total_dim
        if self.matrix.shape != (n, n):
            raise DimensionMismatch(
                f"projector shape {self.matrix.shape} does not match total dimension {n}"
            )
        if hermiticity_defect(self.matrix) > DEFAULT_TOL.herm_tol:
            raise NotHermitian("projector matrix is not Hermitian")
        idempotency = float(np.max(np.abs(self.matrix @ self.matrix - self.matrix)))
        if idempotency > DEFAULT_TOL.eq_tol:
            raise ValueError(f"projector is not idempotent (defect {idempotency:.3e})")


def vacuum_state(space: ExtendedSpace) -> DensityOperator:
    """The pure vacuum state |vac><vac|."""
    m = zeros(space.total_dim)
    m[space.vac_index, space.vac_index] = 1.0
    return DensityOperator(space, m)


def _check_density(m: np.ndarray, tol: ToleranceConfig):
    """Raise the specific violated-invariant error, or return quietly."""
    defect = hermiticity_defect(m)
    if defect > tol.herm_tol:
        raise NotHermitian(f"matrix is not Hermitian (defect {defect:.3e})")
    min_eig = float(np.linalg.eigvalsh(m)[0])
    if min_eig < -tol.psd_tol:
        raise NotPositive(
            f"matrix is not positive semidefinite (most negative eigenvalue {min_eig:.3e})",
            min_eigenvalue=min_eig,
        )
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > tol.trace_tol:
        raise BadTrace(f"trace must be 1, got {tr}", trace=tr)


def validate_density(space: ExtendedSpace, m, tol: ToleranceConfig = DEFAULT_TOL) -> DensityOperator:
    """Validate a matrix on the extended space as a density operator.

    Never normalizes or repairs the input; a violation is always reported as
    NotHermitian, NotPositive or BadTrace.
    """
    m = as_matrix(m)
    n = space.total_dim
    if m.shape != (n, n):
        raise DimensionMismatch(f"expected a {n}x{n} matrix, got {m.shape}")
    _check_density(m, tol)
    return DensityOperator(space, m)


def embed_qudit_state(space: ExtendedSpace, qudit_matrix, tol: ToleranceConfig = DEFAULT_TOL) -> DensityOperator:
    """Embed a d-dimensional density matrix as the qudit block of the extended space.

    The vacuum row and column of the result are zero.  Raises InvalidState if
    the block is not a valid density matrix, naming the broken invariant.
    """
    q = as_matrix(qudit_matrix)
    d = space.qudit_dim
    if q.shape != (d, d):
        raise DimensionMismatch(f"expected a {d}x{d} qudit matrix, got {q.shape}")
    try:
        _check_density(q, tol)
    except (NotHermitian, NotPositive, BadTrace) as exc:
        raise InvalidState(f"qudit block is not a valid state: {exc}") from exc
    m = zeros(space.total_dim)
    m[:d, :d] = q
    return DensityOperator(space, m)


def _cluster_spectrum(values: np.ndarray) -> tuple[tuple[float, int], ...]:
    """Group descending eigenvalues into degenerate clusters."""
    spectrum = []
    start = 0
    for k in range(1, len(values) + 1):
        if k == len(values) or abs(values[k] - values[k - 1]) >= DEGENERACY_GAP:
            cluster = values[start:k]
            spectrum.append((float(np.mean(cluster)), len(cluster)))
            start = k
    return tuple(spectrum)


def make_observable(space: ExtendedSpace, qudit_matrix, tol: ToleranceConfig = DEFAULT_TOL) -> Observable:
    """Extend a Hermitian qudit matrix by a zero vacuum row and column.

    The qudit block is eigendecomposed once; the clustered spectrum and the
    eigenvector columns are stored for projector construction.
    """
    q = as_matrix(qudit_matrix)
    d = space.qudit_dim
    if q.shape != (d, d):
        raise DimensionMismatch(f"expected a {d}x{d} qudit matrix, got {q.shape}")
    values, vectors = hermitian_eig(q, tol)
    m = zeros(space.total_dim)
    m[:d, :d] = q
    return Observable(
        space=space,
        matrix=m,
        spectrum=_cluster_spectrum(values),
        qudit_eigenvalues=values,
        qudit_eigenvectors=vectors,
    )


def _matched_clusters(obs: Observable, selection: EigenvalueSelection) -> list[int]:
    """Indices of spectrum clusters matched by the selection, in spectrum order."""
    representatives = [value for value, _ in obs.spectrum]
    matched = set()
    for v in selection.values:
        distances = [abs(r - v) for r in representatives]
        k = int(np.argmin(distances))
        if distances[k] > selection.match_tol:
            raise UnknownEigenvalue(
                f"eigenvalue {v} not found in spectrum (nearest is {representatives[k]})",
                value=v,
                nearest=representatives[k],
            )
        matched.add(k)
    return sorted(matched)


def selected_eigenvectors(obs: Observable, selection: EigenvalueSelection) -> np.ndarray:
    """Orthonormal qudit eigenvector columns spanning the selected eigenspaces.

    Columns follow the spectrum order (eigenvalues descending); within a
    degenerate cluster only the spanned subspace is basis-independent.
    Shape is (d, k) where k is the summed multiplicity; k may be 0.
    """
    d = obs.space.qudit_dim
    starts = np.concatenate(([0], np.cumsum([mult for _, mult in obs.spectrum])))
    columns = [
        obs.qudit_eigenvectors[:, starts[k] : starts[k + 1]]
        for k in _matched_clusters(obs, selection)
    ]
    if not columns:
        return np.zeros((d, 0), dtype=np.complex128)
    return np.hstack(columns)


def build_projector(obs: Observable, selection: EigenvalueSelection) -> Projector:
    """Projector onto the span of the eigenvectors of the selected eigenvalues.

    Supported on the qudit sector only: the vacuum row and column are exactly
    zero even when 0 is selected, because the selection is matched against the
    qudit-block spectrum alone.  Raises UnknownEigenvalue for a value that
    matches no spectrum point within match_tol.
    """
    vectors = selected_eigenvectors(obs, selection)
    d = obs.space.qudit_dim
    m = zeros(obs.space.total_dim)
    m[:d, :d] = vectors @ np.conj(vectors).T
    return Projector(
        space=obs.space,
        matrix=m,
        rank=vectors.shape[1],
        support=_diagonal_support(m),
    )


def complement(space: ExtendedSpace, p: Projector) -> Projector:
    """The complementary projector identity - p; its support includes the vacuum."""
    m = identity(space.total_dim) - p.matrix
    return Projector(
        space=space,
        matrix=m,
        rank=space.total_dim - p.rank,
        support=_diagonal_support(m),
    )


def _diagonal_support(m: np.ndarray) -> tuple[int, ...] | None:
    """Basis indices of an exactly diagonal 0/1 matrix, None otherwise."""
    diag = np.diag(m)
    if np.any(m - np.diag(diag) != 0):
        return None
    support = []
    for i, x in enumerate(diag):
        if x == 1:
            support.append(i)
        elif x != 0:
            return None
    return tuple(support)
