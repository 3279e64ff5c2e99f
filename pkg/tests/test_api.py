from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from quintic_mirror.api import app
from quintic_mirror.commands import get_command, get_command_registry
from quintic_mirror.mcp_server import instanton_numbers, list_commands, run_command

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_list_commands():
    response = client.get("/v1/commands")
    assert response.status_code == 200
    names = [item["name"] for item in response.json()]
    assert names == sorted(get_command_registry())
    assert "verify-uniqueness" in names


def test_run_command():
    response = client.post("/v1/run", json={"command": "oracle-lines"})
    assert response.status_code == 200
    body = response.json()
    assert body["pass"] is True
    assert body["results"] == [{"lines": "2875"}]


def test_run_rejects_unknown_command():
    response = client.post("/v1/run", json={"command": "frobnicate"})
    assert response.status_code == 422


def test_run_rejects_bad_weights():
    response = client.post(
        "/v1/run", json={"command": "verify-polynomiality", "q_order": 1, "lambdas": "1,1,1"}
    )
    assert response.status_code == 422
    assert response.json()["detail"]["error"] == "WeightParseError"


def test_instantons_endpoint():
    response = client.get("/v1/instantons", params={"max_degree": 2})
    assert response.status_code == 200
    assert response.json() == [
        {"d": 1, "N_d": "2875/1", "n_d": "2875"},
        {"d": 2, "N_d": "4876875/8", "n_d": "609250"},
    ]


def test_registry_lookup():
    assert get_command("instantons").accepted_params == ("q_order",)
    with pytest.raises(KeyError, match="Known commands"):
        get_command("frobnicate")


def test_mcp_tools():
    assert {item["name"] for item in list_commands()} == set(get_command_registry())
    report = run_command("verify-ode", {"q_order": 3})
    assert report["pass"] is True
    assert instanton_numbers(1) == [{"d": 1, "N_d": "2875/1", "n_d": "2875"}]
    with pytest.raises(ValueError):
        run_command("verify-polynomiality", {"lambdas": "1,2,3"})
