from __future__ import annotations

from typing import Any

from fastapi import Body, FastAPI, HTTPException, Query
from fastapi.responses import RedirectResponse

from quintic_mirror.commands import get_command_registry, run_command
from quintic_mirror.errors import (
    DegenerateWeightsError,
    QuinticError,
    TruncationError,
    WeightParseError,
)
from quintic_mirror.models import CommandDefinitionResponse, RunConfig, RunReport
from quintic_mirror.quintic.instanton import instanton_numbers

# caller supplied something unusable, as opposed to a failed computation
INPUT_ERRORS = (WeightParseError, DegenerateWeightsError, TruncationError)

app = FastAPI(
    title="Quintic Mirror",
    version="0.1.0",
    description=(
        "Exact mirror-theorem computations for the quintic threefold: "
        "instanton numbers, mirror map, Yukawa coupling and the localization checks."
    ),
)


def _http_error(exc: QuinticError) -> HTTPException:
    status_code = 422 if isinstance(exc, INPUT_ERRORS) else 400
    detail: dict[str, Any] = {
        "error": type(exc).__name__,
        "message": str(exc),
        "details": exc.details(),
    }
    return HTTPException(status_code=status_code, detail=detail)


@app.get("/", include_in_schema=False)
def root() -> RedirectResponse:
    return RedirectResponse(url="/docs", status_code=307)


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.get("/v1/commands", response_model=list[CommandDefinitionResponse])
def list_commands() -> list[CommandDefinitionResponse]:
    responses = [
        CommandDefinitionResponse(
            name=definition.name,
            description=definition.description,
            accepted_params=list(definition.accepted_params),
            defaults=dict(definition.defaults),
        )
        for definition in get_command_registry().values()
    ]
    responses.sort(key=lambda item: item.name)
    return responses


@app.post(
    "/v1/run",
    response_model=RunReport,
    response_model_by_alias=True,
    summary="Run Command",
    description=(
        "Runs a registered command and returns its exact report. "
        "Rationals are 'num/den' strings and integers decimal strings."
    ),
)
def run(
    payload: RunConfig = Body(
        ...,
        openapi_examples={
            "instantons": {
                "summary": "Instanton Numbers",
                "description": "n_d through degree 3.",
                "value": {"command": "instantons", "q_order": 3},
            },
            "polynomiality": {
                "summary": "Polynomiality Check",
                "description": "Pairing of the localized series at the default weights.",
                "value": {"command": "verify-polynomiality", "q_order": 2, "z_order": 2},
            },
            "oracle": {
                "summary": "Lines On The Quintic",
                "description": "Schubert calculus count, independent of the mirror pipeline.",
                "value": {"command": "oracle-lines"},
            },
        },
    )
) -> RunReport:
    try:
        return run_command(payload)
    except QuinticError as exc:
        raise _http_error(exc) from exc


@app.get(
    "/v1/instantons",
    response_model=list[dict[str, str | int]],
    summary="Instanton Numbers",
    description="Rows {d, N_d, n_d} through max_degree; N_d as 'num/den', n_d as a decimal string.",
)
def instantons(
    max_degree: int = Query(
        3,
        ge=0,
        le=60,
        description="Highest degree d to compute.",
        examples=[3],
    ),
) -> list[dict[str, Any]]:
    try:
        rows = instanton_numbers(max_degree)
    except QuinticError as exc:
        raise _http_error(exc) from exc
    return [row.to_dict() for row in rows]
