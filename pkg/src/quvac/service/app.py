"""FastAPI service wrapping the core library.

Domain results (an invalid channel, unequal channels) are ordinary 200
responses; malformed or semantically impossible inputs map to 422.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException

from .. import channels, destruction, serialization
from ..demo import QUBIT_CASES, qubit_demo_spec
from ..exceptions import (
    BadTrace,
    DimensionMismatch,
    InvalidChannel,
    InvalidState,
    NotHermitian,
    NotPositive,
    ParseError,
    UnknownEigenvalue,
)
from ..state_space import EigenvalueSelection
from .schemas import (
    ChannelPayload,
    ChoiRequest,
    ChoiResponse,
    CompareRequest,
    CompareResponse,
    DemoResponse,
    DestroyRequest,
    DestroyResponse,
    StatePayload,
    VerifyRequest,
    VerifyResponse,
)

_INPUT_ERRORS = (
    ParseError,
    DimensionMismatch,
    UnknownEigenvalue,
    NotHermitian,
    NotPositive,
    BadTrace,
    InvalidState,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="quvac",
        description="Destruction-of-states channels on a vacuum-extended qudit",
        version="0.1.0",
    )

    def _reject(exc: Exception):
        raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.post("/verify", response_model=VerifyResponse)
    def verify(request: VerifyRequest) -> VerifyResponse:
        try:
            ch = serialization.channel_from_payload(request.channel.model_dump())
        except ParseError as exc:
            _reject(exc)
        try:
            report = channels.classify(ch)
        except InvalidChannel as exc:
            cp, min_choi = channels.is_completely_positive(ch)
            return VerifyResponse(
                valid=False,
                trace_preserving=False,
                trace_decreasing_strict=False,
                completely_positive=cp,
                pure=len(ch.elements) == 1,
                min_choi_eigenvalue=min_choi,
                completeness_defect=channels.completeness_defect(ch),
                detail=str(exc),
            )
        return VerifyResponse(
            valid=report.completely_positive,
            trace_preserving=report.trace_preserving,
            trace_decreasing_strict=report.trace_decreasing_strict,
            completely_positive=report.completely_positive,
            pure=report.pure,
            min_choi_eigenvalue=report.min_choi_eigenvalue,
            completeness_defect=report.completeness_defect,
        )

    @app.post("/destroy", response_model=DestroyResponse)
    def destroy(request: DestroyRequest) -> DestroyResponse:
        try:
            obs = serialization.observable_from_payload(request.observable.model_dump())
            rho = serialization.state_from_payload(request.state.model_dump())
            selection = EigenvalueSelection(tuple(request.eigenvalues))
            spec = destruction.destruction_spec(obs, selection)
        except (_INPUT_ERRORS + (ValueError,)) as exc:
            _reject(exc)
        p_destroyed, p_survived = destruction.destruction_probabilities(spec, rho)
        out = destruction.destruction_direct(spec, rho)
        kraus = None
        if request.emit_kraus:
            kraus = ChannelPayload(
                **serialization.channel_to_payload(destruction.destruction_kraus(spec))
            )
        return DestroyResponse(
            p_destroyed=p_destroyed,
            p_survived=p_survived,
            output_state=StatePayload(**serialization.state_to_payload(out)),
            kraus=kraus,
        )

    @app.post("/compare", response_model=CompareResponse)
    def compare(request: CompareRequest) -> CompareResponse:
        try:
            a = serialization.channel_from_payload(request.channel_a.model_dump())
            b = serialization.channel_from_payload(request.channel_b.model_dump())
            if a.space != b.space:
                raise DimensionMismatch("channels have different dimensions")
            diff = float(np.max(np.abs(channels.choi(a).matrix - channels.choi(b).matrix)))
            equal = channels.channels_equal(a, b)
        except (ParseError, DimensionMismatch) as exc:
            _reject(exc)
        return CompareResponse(equal=equal, max_choi_difference=diff)

    @app.post("/choi", response_model=ChoiResponse)
    def choi(request: ChoiRequest) -> ChoiResponse:
        try:
            ch = serialization.channel_from_payload(request.channel.model_dump())
        except ParseError as exc:
            _reject(exc)
        j = channels.choi(ch).matrix
        eigenvalues = [float(v) for v in np.linalg.eigvalsh(j)[::-1]]
        return ChoiResponse(
            dim=j.shape[0],
            matrix=serialization.matrix_to_payload(j),
            eigenvalues=eigenvalues,
        )

    @app.get("/demo-qubit/{case_id}", response_model=DemoResponse)
    def demo_qubit(case_id: str) -> DemoResponse:
        if case_id not in QUBIT_CASES:
            known = ", ".join(sorted(QUBIT_CASES))
            raise HTTPException(status_code=404, detail=f"unknown case {case_id!r} (known: {known})")
        spec = qubit_demo_spec(case_id)
        ch = destruction.destruction_kraus(spec)
        return DemoResponse(
            case=case_id,
            projector=serialization.matrix_to_payload(spec.projector.matrix),
            complement=serialization.matrix_to_payload(spec.complement.matrix),
            channel=ChannelPayload(**serialization.channel_to_payload(ch)),
        )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    return app


app = create_app()
