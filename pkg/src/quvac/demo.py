"""Worked single-qubit destruction cases used by the CLI and the service.

The observable assigns +1 to |0> and -1 to |1>.  Case "i" destroys the +1
eigenspace, case "ii" the -1 eigenspace, case "iii" both (the whole qubit).
All resulting projector and element entries are exactly 0 or 1.
"""

from __future__ import annotations

import numpy as np

from .destruction import DestructionSpec, destruction_spec
from .exceptions import UnknownCase
from .state_space import EigenvalueSelection, make_observable, make_space

__all__ = ["QUBIT_CASES", "qubit_demo_spec"]

QUBIT_CASES = {
    "i": (1.0,),
    "ii": (-1.0,),
    "iii": (1.0, -1.0),
}


def qubit_demo_spec(case_id: str) -> DestructionSpec:
    """Destruction spec for one of the demo cases "i", "ii" or "iii"."""
    if case_id not in QUBIT_CASES:
        known = ", ".join(sorted(QUBIT_CASES))
        raise UnknownCase(f"unknown demo case {case_id!r} (known: {known})")
    space = make_space(2)
    obs = make_observable(space, np.diag([1.0, -1.0]))
    return destruction_spec(obs, EigenvalueSelection(QUBIT_CASES[case_id]))
