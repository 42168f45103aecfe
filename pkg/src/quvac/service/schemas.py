"""Pydantic request/response models for the HTTP service.

Payload shapes mirror the on-disk JSON formats: complex entries are [re, im]
pairs, matrices row-major, schema_version explicit.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

ComplexPair = list[float]
MatrixPayload = list[list[ComplexPair]]


class ChannelPayload(BaseModel):
    schema_version: int = 1
    qudit_dim: int
    elements: list[MatrixPayload]
    label: str = ""


class StatePayload(BaseModel):
    schema_version: int = 1
    qudit_dim: int
    matrix: MatrixPayload


class ObservablePayload(BaseModel):
    schema_version: int = 1
    qudit_dim: int
    matrix: MatrixPayload


class VerifyRequest(BaseModel):
    channel: ChannelPayload


class VerifyResponse(BaseModel):
    valid: bool
    trace_preserving: bool
    trace_decreasing_strict: bool
    completely_positive: bool
    pure: bool
    min_choi_eigenvalue: float
    completeness_defect: float
    detail: str | None = None


class DestroyRequest(BaseModel):
    observable: ObservablePayload
    state: StatePayload
    eigenvalues: list[float] = Field(default_factory=list)
    emit_kraus: bool = False


class DestroyResponse(BaseModel):
    p_destroyed: float
    p_survived: float
    output_state: StatePayload
    kraus: ChannelPayload | None = None


class CompareRequest(BaseModel):
    channel_a: ChannelPayload
    channel_b: ChannelPayload


class CompareResponse(BaseModel):
    equal: bool
    max_choi_difference: float


class ChoiRequest(BaseModel):
    channel: ChannelPayload


class ChoiResponse(BaseModel):
    dim: int
    matrix: MatrixPayload
    eigenvalues: list[float]


class DemoResponse(BaseModel):
    case: str
    projector: MatrixPayload
    complement: MatrixPayload
    channel: ChannelPayload
