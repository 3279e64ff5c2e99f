from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field

CommandName = Literal[
    "instantons",
    "mirror-map",
    "yukawa",
    "verify-ode",
    "verify-f0",
    "verify-sigma-model",
    "verify-asymptotics",
    "verify-polynomiality",
    "verify-recursion",
    "verify-covariance",
    "verify-uniqueness",
    "reconstruct",
    "oracle-lines",
    "oracle-cubic",
]

OutputFormat = Literal["pretty", "json", "csv"]


class RunConfig(BaseModel):
    command: CommandName = Field(
        description="Registered command name from GET /v1/commands.",
        examples=["instantons"],
    )
    q_order: int | None = Field(
        default=None,
        ge=0,
        le=60,
        description="Maximum q-degree (also accepted as max_degree/order on the CLI).",
    )
    z_order: int | None = Field(
        default=None,
        ge=0,
        le=60,
        description="Maximum z-degree for the two-variable checks.",
    )
    lambdas: str | None = Field(
        default=None,
        description="Five comma-separated rational torus weights summing to zero.",
        examples=["1,2,3,-1,-5"],
    )
    output: OutputFormat = "json"

    model_config = ConfigDict(
        json_schema_extra={
            "examples": [
                {"command": "instantons", "q_order": 3},
                {"command": "verify-polynomiality", "q_order": 2, "z_order": 2, "lambdas": "1,2,3,-1,-5"},
                {"command": "oracle-lines"},
            ]
        }
    )


class RunReport(BaseModel):
    command: str
    params: dict[str, Any]
    results: list[dict[str, Any]]
    passed: bool = Field(alias="pass")
    elapsed_ms: int

    model_config = ConfigDict(populate_by_name=True)

    def to_json_dict(self) -> dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)


class ErrorReport(BaseModel):
    error: str
    message: str
    details: dict[str, Any] = Field(default_factory=dict)


class CommandDefinitionResponse(BaseModel):
    name: str
    description: str
    accepted_params: list[str]
    defaults: dict[str, Any]
