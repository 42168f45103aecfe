"""JSON payloads and files for channels, states and observables.

Complex numbers are stored as [re, im] pairs, matrices row-major, with an
explicit schema_version.  Python's float repr is the shortest string that
round-trips the exact double, so writing and re-reading a file reproduces
every matrix bit-exactly.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

import numpy as np

from .channels import KrausChannel
from .exceptions import DimensionMismatch, InvalidDimension, ParseError
from .numerics import DEFAULT_TOL, ToleranceConfig
from .state_space import DensityOperator, Observable, make_observable, make_space, validate_density

__all__ = [
    "SCHEMA_VERSION",
    "matrix_to_payload",
    "payload_to_matrix",
    "channel_to_payload",
    "channel_from_payload",
    "state_to_payload",
    "state_from_payload",
    "observable_from_payload",
    "load_payload",
    "save_payload",
    "load_channel",
    "save_channel",
    "load_state",
    "save_state",
    "load_observable",
]

SCHEMA_VERSION = 1


def matrix_to_payload(m: np.ndarray) -> list:
    """Row-major nested lists with [re, im] entry pairs."""
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def payload_to_matrix(obj: Any, where: str) -> np.ndarray:
    """Parse a nested-list matrix payload; `where` names it in error messages."""
    if not isinstance(obj, list) or not obj:
        raise ParseError(f"{where}: expected a non-empty list of rows")
    n = len(obj)
    m = np.zeros((n, n), dtype=np.complex128)
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"{where}: row {i} must be a list of {n} entries")
        for j, pair in enumerate(row):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
            ):
                raise ParseError(f"{where}: entry ({i},{j}) must be a [re, im] number pair")
            m[i, j] = complex(pair[0], pair[1])
    if not np.all(np.isfinite(m)):
        raise ParseError(f"{where}: entries must be finite")
    return m


def _check_header(payload: Mapping, what: str):
    if not isinstance(payload, Mapping):
        raise ParseError(f"{what}: expected a JSON object")
    version = payload.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ParseError(f"{what}: schema_version must be {SCHEMA_VERSION}, got {version!r}")
    d = payload.get("qudit_dim")
    if not isinstance(d, int) or isinstance(d, bool):
        raise ParseError(f"{what}: qudit_dim must be an integer, got {d!r}")
    return d


def _space_for(d: int, what: str):
    try:
        return make_space(d)
    except InvalidDimension as exc:
        raise ParseError(f"{what}: {exc}") from exc


def channel_to_payload(ch: KrausChannel) -> dict:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "qudit_dim": ch.space.qudit_dim,
        "elements": [matrix_to_payload(e) for e in ch.elements],
    }
    if ch.label:
        payload["label"] = ch.label
    return payload


def channel_from_payload(payload: Mapping) -> KrausChannel:
    d = _check_header(payload, "channel")
    space = _space_for(d, "channel")
    raw = payload.get("elements")
    if not isinstance(raw, list) or not raw:
        raise ParseError("channel: elements must be a non-empty list of matrices")
    elements = [payload_to_matrix(e, f"channel element {i}") for i, e in enumerate(raw)]
    label = payload.get("label", "")
    if not isinstance(label, str):
        raise ParseError(f"channel: label must be a string, got {label!r}")
    try:
        return KrausChannel(space, tuple(elements), label=label)
    except DimensionMismatch as exc:
        raise ParseError(f"channel: {exc}") from exc


def state_to_payload(rho: DensityOperator) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "qudit_dim": rho.space.qudit_dim,
        "matrix": matrix_to_payload(rho.matrix),
    }


def state_from_payload(payload: Mapping, tol: ToleranceConfig = DEFAULT_TOL) -> DensityOperator:
    """Parse and validate a state payload.

    Structural problems raise ParseError; a well-formed matrix that is not a
    valid density operator raises the specific violated-invariant error.
    """
    d = _check_header(payload, "state")
    space = _space_for(d, "state")
    m = payload_to_matrix(payload.get("matrix"), "state matrix")
    if m.shape[0] != space.total_dim:
        raise ParseError(
            f"state: matrix must be {space.total_dim}x{space.total_dim} (qudit plus vacuum), got {m.shape}"
        )
    return validate_density(space, m, tol)


def observable_from_payload(payload: Mapping, tol: ToleranceConfig = DEFAULT_TOL) -> Observable:
    """Parse an observable payload; the matrix is the d x d qudit block."""
    d = _check_header(payload, "observable")
    space = _space_for(d, "observable")
    m = payload_to_matrix(payload.get("matrix"), "observable matrix")
    if m.shape[0] != d:
        raise ParseError(f"observable: matrix must be {d}x{d} (qudit block only), got {m.shape}")
    return make_observable(space, m, tol)


def load_payload(path) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def save_payload(path, payload: Mapping):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def load_channel(path) -> KrausChannel:
    return channel_from_payload(load_payload(path))


def save_channel(path, ch: KrausChannel):
    save_payload(path, channel_to_payload(ch))


def load_state(path, tol: ToleranceConfig = DEFAULT_TOL) -> DensityOperator:
    return state_from_payload(load_payload(path), tol)


def save_state(path, rho: DensityOperator):
    save_payload(path, state_to_payload(rho))


def load_observable(path, tol: ToleranceConfig = DEFAULT_TOL) -> Observable:
    return observable_from_payload(load_payload(path), tol)
