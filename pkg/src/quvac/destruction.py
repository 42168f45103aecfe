"""The destruction-of-states channel and its building blocks.

Destruction with no selection first measures the projector onto the marked
eigenspaces without reading the outcome, then replaces the marked component
by the vacuum.  In direct form:

    D(rho) = Q rho Q + tr(P rho P) |vac><vac|

where P projects onto the destroyed subspace and Q = identity - P.  The same
map has an explicit Kraus form whose elements are |vac><b| for an orthonormal
basis {b} of the destroyed subspace, plus Q itself; both forms are exposed
here and agree as channels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import KrausChannel
from .exceptions import DimensionMismatch
from .numerics import zeros
from .state_space import (
    DensityOperator,
    EigenvalueSelection,
    ExtendedSpace,
    Observable,
    Projector,
    build_projector,
    complement,
    selected_eigenvectors,
)

__all__ = [
    "supertrace_elements",
    "supertrace_apply",
    "supertrace_channel",
    "measure_no_selection",
    "DestructionSpec",
    "destruction_spec",
    "destruction_direct",
    "destruction_kraus",
    "destruction_probabilities",
]


def supertrace_elements(space: ExtendedSpace) -> list[np.ndarray]:
    """Operation elements |vac><i| for i over the full extended basis.

    Each element has a single unit entry at (vac_index, i), so the
    completeness sum is the identity with integer exactness.
    """
    elements = []
    for i in range(space.total_dim):
        f = zeros(space.total_dim)
        f[space.vac_index, i] = 1.0
        elements.append(f)
    return elements


def supertrace_apply(space: ExtendedSpace, m: np.ndarray) -> np.ndarray:
    """Map any endomorphism to its trace times |vac><vac|."""
    m = np.asarray(m, dtype=np.complex128)
    n = space.total_dim
    if m.shape != (n, n):
        raise DimensionMismatch(f"matrix shape {m.shape} does not match total dimension {n}")
    out = zeros(n)
    out[space.vac_index, space.vac_index] = np.trace(m)
    return out


def supertrace_channel(space: ExtendedSpace) -> KrausChannel:
    """The trace-into-vacuum map as a trace-preserving Kraus channel."""
    return KrausChannel(space, tuple(supertrace_elements(space)), label="supertrace")


def measure_no_selection(p: Projector, rho: DensityOperator) -> DensityOperator:
    """Measure the projector without selecting the outcome: P rho P + Q rho Q.

    Kills coherences between the projected subspace and its complement while
    preserving the trace.
    """
    if p.space != rho.space:
        raise DimensionMismatch("projector and state live on different spaces")
    q = complement(p.space, p)
    m = p.matrix @ rho.matrix @ p.matrix + q.matrix @ rho.matrix @ q.matrix
    return DensityOperator(p.space, m)


@dataclass(frozen=True, eq=False)
class DestructionSpec:
    """Everything needed to destroy a set of eigenspaces.

    basis holds orthonormal columns spanning the destroyed subspace on the
    extended space (vacuum components zero); projector is the matching
    orthogonal projector and complement its counterpart.  Within a degenerate
    eigenvalue cluster the basis is one valid choice among many; the resulting
    channel does not depend on that choice.
    """

    projector: Projector
    basis: np.ndarray
    complement: Projector
    label: str = "destruction"

    def __post_init__(self):
        n = self.projector.space.total_dim
        if self.basis.shape[0] != n:
            raise DimensionMismatch(
                f"basis column length {self.basis.shape[0]} does not match total dimension {n}"
            )

    @property
    def space(self) -> ExtendedSpace:
        return self.projector.space


def destruction_spec(obs: Observable, selection: EigenvalueSelection) -> DestructionSpec:
    """Build the destruction data for the selected eigenvalues of an observable."""
    p = build_projector(obs, selection)
    vectors = selected_eigenvectors(obs, selection)
    basis = np.zeros((obs.space.total_dim, vectors.shape[1]), dtype=np.complex128)
    basis[: obs.space.qudit_dim, :] = vectors
    values = ", ".join(repr(v) for v in selection.values)
    return DestructionSpec(
        projector=p,
        basis=basis,
        complement=complement(obs.space, p),
        label=f"destruction[{values}]",
    )


def destruction_direct(spec: DestructionSpec, rho: DensityOperator) -> DensityOperator:
    """Destruction in direct form: Q rho Q + supertrace(P rho P).

    The vacuum population grows by exactly the destroyed probability; the
    trace is preserved.
    """
    if spec.space != rho.space:
        raise DimensionMismatch("destruction spec and state live on different spaces")
    p = spec.projector.matrix
    q = spec.complement.matrix
    m = q @ rho.matrix @ q + supertrace_apply(spec.space, p @ rho.matrix @ p)
    return DensityOperator(spec.space, m)


def destruction_kraus(spec: DestructionSpec) -> KrausChannel:
    """Destruction as an explicit Kraus channel.

    Elements are |vac><b| for each destroyed-basis column b (in spectrum
    order), followed by the complement projector.  Elements that would vanish
    (basis vectors outside the destroyed subspace) are never materialized, so
    the channel has rank(P) + 1 elements and is trace preserving.
    """
    n = spec.space.total_dim
    vac = spec.space.vac_index
    elements = []
    for k in range(spec.basis.shape[1]):
        e = zeros(n)
        e[vac, :] = np.conj(spec.basis[:, k]) + 0.0  # + 0.0 clears negative zeros
        elements.append(e)
    elements.append(spec.complement.matrix.copy())
    return KrausChannel(spec.space, tuple(elements), label=spec.label)


def destruction_probabilities(spec: DestructionSpec, rho: DensityOperator):
    """(p_destroyed, p_survived): the chance the particle is destroyed vs kept.

    p_destroyed = Re tr(rho P), p_survived = Re tr(rho Q); they sum to one for
    a valid state and are clamped to [0, 1] against roundoff.
    """
    if spec.space != rho.space:
        raise DimensionMismatch("destruction spec and state live on different spaces")
    p_destroyed = float(np.real(np.trace(rho.matrix @ spec.projector.matrix)))
    p_survived = float(np.real(np.trace(rho.matrix @ spec.complement.matrix)))
    clamp = lambda x: min(max(x, 0.0), 1.0)
    return clamp(p_destroyed), clamp(p_survived)
