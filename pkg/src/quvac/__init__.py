"""Quantum operations on a single qudit extended by a vacuum sector.

The core objects are Kraus channels on the direct sum of a d-dimensional
qudit space and a one-dimensional vacuum, centered on the destruction-of-
states channel: measure a set of eigenspaces with no selection, then send the
measured component to the vacuum.  Both its direct form and its explicit
Kraus form are provided, together with machinery to verify that an arbitrary
Kraus-operator set is a legitimate quantum operation.
"""

from .channels import (
    ChannelReport,
    ChoiMatrix,
    KrausChannel,
    apply,
    channels_equal,
    choi,
    choi_min_eigenvalue,
    classify,
    completeness_defect,
    compose,
    is_completely_positive,
    prune,
    unitary_mix,
)
from .destruction import (
    DestructionSpec,
    destruction_direct,
    destruction_kraus,
    destruction_probabilities,
    destruction_spec,
    measure_no_selection,
    supertrace_apply,
    supertrace_channel,
    supertrace_elements,
)
from .numerics import (
    DEFAULT_TOL,
    ToleranceConfig,
    adjoint,
    approx_equal,
    hermitian_eig,
    matmul,
    trace,
)
from .state_space import (
    DensityOperator,
    EigenvalueSelection,
    ExtendedSpace,
    Observable,
    Projector,
    build_projector,
    complement,
    embed_qudit_state,
    make_observable,
    make_space,
    selected_eigenvectors,
    vacuum_state,
    validate_density,
)

__version__ = "0.1.0"
