from __future__ import annotations

from typing import Any

from fastapi import HTTPException
from mcp.server.fastmcp import FastMCP
from pydantic import ValidationError

from quintic_mirror import api
from quintic_mirror.models import RunConfig

mcp = FastMCP("Quintic Mirror")


@mcp.tool(description="List every runnable command with its accepted parameters and defaults.")
def list_commands() -> list[dict[str, Any]]:
    return [command.model_dump(mode="json") for command in api.list_commands()]


@mcp.tool(
    description=(
        "Run a registered command such as 'instantons' or 'verify-polynomiality'. "
        "params may hold q_order, z_order and lambdas."
    )
)
def run_command(command: str, params: dict[str, Any] | None = None) -> dict[str, Any]:
    try:
        config = RunConfig(command=command, **(params or {}))
    except ValidationError as exc:
        raise ValueError(str(exc)) from exc
    try:
        report = api.run(config)
    except HTTPException as exc:
        raise ValueError(str(exc.detail)) from exc
    return report.to_json_dict()


@mcp.tool(description="Instanton numbers n_d of the quintic threefold through max_degree.")
def instanton_numbers(max_degree: int = 3) -> list[dict[str, Any]]:
    try:
        return api.instantons(max_degree=max_degree)
    except HTTPException as exc:
        raise ValueError(str(exc.detail)) from exc


def main() -> None:
    mcp.run()


if __name__ == "__main__":
    main()
