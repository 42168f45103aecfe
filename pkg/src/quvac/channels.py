"""Quantum operations in Kraus form.

A channel is an ordered list of operation elements E_i acting on the extended
space; applying it sends rho to sum_i E_i rho E_i^dag.  A legitimate quantum
operation is trace-non-increasing (sum_i E_i^dag E_i <= identity in the
Loewner order) and completely positive; complete positivity is certified
through the Choi matrix, whose positive semidefiniteness is equivalent to it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, InvalidChannel
from .numerics import DEFAULT_TOL, ToleranceConfig, adjoint, as_matrix, identity, zeros
from .state_space import DensityOperator, ExtendedSpace

__all__ = [
    "KrausChannel",
    "ChannelReport",
    "ChoiMatrix",
    "apply",
    "completeness_defect",
    "choi",
    "choi_min_eigenvalue",
    "is_completely_positive",
    "classify",
    "compose",
    "prune",
    "channels_equal",
    "unitary_mix",
]


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """Ordered operation elements of a channel on the extended space.

    The constructor checks structure only (square, matching dimension, finite
    entries); the trace-non-increasing condition is checked by classify, so
    that channels read from files can be inspected even when they violate it.
    """

    space: ExtendedSpace
    elements: tuple[np.ndarray, ...]
    label: str = ""

    def __post_init__(self):
        elements = tuple(as_matrix(e) for e in self.elements)
        if not elements:
            raise ValueError("a channel needs at least one operation element")
        n = self.space.total_dim
        for e in elements:
            if e.shape != (n, n):
                raise DimensionMismatch(
                    f"element shape {e.shape} does not match total dimension {n}"
                )
        object.__setattr__(self, "elements", elements)


@dataclass(frozen=True)
class ChannelReport:
    """Classification of a channel against the quantum-operation conditions."""

    trace_preserving: bool
    trace_decreasing_strict: bool
    completely_positive: bool
    pure: bool
    min_choi_eigenvalue: float
    completeness_defect: float


@dataclass(frozen=True, eq=False)
class ChoiMatrix:
    """Unnormalized Choi matrix of a channel, dimension total_dim**2."""

    space: ExtendedSpace
    matrix: np.ndarray


def apply(ch: KrausChannel, state) -> np.ndarray:
    """Apply the channel: sum_i E_i rho E_i^dag.

    Accepts a DensityOperator or a raw square matrix (the map is linear on all
    endomorphisms, not just states).  Returns a raw matrix, never a validated
    DensityOperator: trace-decreasing channels legitimately produce
    subnormalized outputs.
    """
    m = state.matrix if isinstance(state, DensityOperator) else np.asarray(state, dtype=np.complex128)
    n = ch.space.total_dim
    if m.shape != (n, n):
        raise DimensionMismatch(f"state shape {m.shape} does not match total dimension {n}")
    out = zeros(n)
    for e in ch.elements:
        out += e @ m @ adjoint(e)
    return out


def _completeness_eigenvalues(ch: KrausChannel) -> np.ndarray:
    """Ascending eigenvalues of identity - sum_i E_i^dag E_i."""
    n = ch.space.total_dim
    s = zeros(n)
    for e in ch.elements:
        s += adjoint(e) @ e
    return np.linalg.eigvalsh(identity(n) - s)


def completeness_defect(ch: KrausChannel) -> float:
    """Max absolute eigenvalue of identity - sum_i E_i^dag E_i.

    Zero (within trace_tol) iff the channel is trace preserving.
    """
    eigs = _completeness_eigenvalues(ch)
    return float(max(abs(eigs[0]), abs(eigs[-1])))


def choi(ch: KrausChannel) -> ChoiMatrix:
    """Choi matrix J = sum_jk |j><k| (x) channel(|j><k|), unnormalized.

    Computed as sum_i vec(E_i) vec(E_i)^dag with column-stacking vec, which is
    the same matrix; its trace equals the summed squared Frobenius norms of
    the elements, a cheap cross-check.
    """
    n = ch.space.total_dim
    j = np.zeros((n * n, n * n), dtype=np.complex128)
    for e in ch.elements:
        w = e.reshape(-1, order="F")
        j += np.outer(w, np.conj(w))
    return ChoiMatrix(ch.space, j)


def choi_min_eigenvalue(choi_matrix: np.ndarray) -> float:
    """Smallest eigenvalue of a (Hermitian) Choi matrix.

    Accepts a raw matrix so that maps given directly in Choi form, with no
    Kraus representation, can be tested for complete positivity too.
    """
    return float(np.linalg.eigvalsh(choi_matrix)[0])


def is_completely_positive(ch: KrausChannel, tol: ToleranceConfig = DEFAULT_TOL):
    """(verdict, min Choi eigenvalue) for the channel.

    Any channel actually given in Kraus form is completely positive by
    construction, so this doubles as a self-test of the Choi and
    eigendecomposition code paths.
    """
    min_eig = choi_min_eigenvalue(choi(ch).matrix)
    return min_eig >= -tol.psd_tol, min_eig


def classify(ch: KrausChannel, tol: ToleranceConfig = DEFAULT_TOL) -> ChannelReport:
    """Classify a channel; raises InvalidChannel if it is not trace-non-increasing.

    The trace condition is checked as an eigenvalue bound on
    identity - sum E^dag E (the Loewner order), not entrywise.
    """
    eigs = _completeness_eigenvalues(ch)
    if eigs[0] < -tol.psd_tol:
        raise InvalidChannel(
            f"sum of E^dag E exceeds the identity (eigenvalue excess {-eigs[0]:.3e})"
        )
    defect = float(max(abs(eigs[0]), abs(eigs[-1])))
    trace_preserving = defect <= tol.trace_tol
    cp, min_choi = is_completely_positive(ch, tol)
    return ChannelReport(
        trace_preserving=trace_preserving,
        trace_decreasing_strict=not trace_preserving,
        completely_positive=cp,
        pure=len(ch.elements) == 1,
        min_choi_eigenvalue=min_choi,
        completeness_defect=defect,
    )


def compose(second: KrausChannel, first: KrausChannel) -> KrausChannel:
    """Sequential composition: apply first, then second.

    Elements are all pairwise products, second's index outermost.  Zero
    products are kept so the element list stays auditable; use prune to drop
    them.
    """
    if second.space != first.space:
        raise DimensionMismatch("cannot compose channels on different spaces")
    elements = tuple(f @ e for f in second.elements for e in first.elements)
    return KrausChannel(second.space, elements, label=f"({second.label} after {first.label})")


def prune(ch: KrausChannel, threshold: float = 1e-14) -> KrausChannel:
    """Drop elements with Frobenius norm below threshold."""
    kept = tuple(e for e in ch.elements if np.linalg.norm(e) >= threshold)
    if not kept:
        raise ValueError("pruning removed every element")
    return KrausChannel(ch.space, kept, label=ch.label)


def channels_equal(a: KrausChannel, b: KrausChannel, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Representation-independent equality via Choi matrices.

    Kraus element lists are not unique, so equality compares the Choi
    matrices entrywise, with the threshold scaled by the total dimension.
    """
    if a.space != b.space:
        raise DimensionMismatch("cannot compare channels on different spaces")
    diff = float(np.max(np.abs(choi(a).matrix - choi(b).matrix)))
    return diff <= tol.eq_tol * a.space.total_dim


def unitary_mix(ch: KrausChannel, weights: np.ndarray) -> KrausChannel:
    """Mix the element list: E'_j = sum_i weights[j, i] E_i.

    For unitary (or isometric) weights the resulting channel equals the
    original even though the element list differs.
    """
    w = np.asarray(weights, dtype=np.complex128)
    if w.ndim != 2 or w.shape[1] != len(ch.elements):
        raise DimensionMismatch(
            f"weights shape {w.shape} does not match element count {len(ch.elements)}"
        )
    stack = np.stack(ch.elements)
    mixed = np.einsum("ji,iab->jab", w, stack)
    return KrausChannel(ch.space, tuple(mixed), label=f"{ch.label} (mixed)")
