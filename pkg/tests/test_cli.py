from __future__ import annotations

import json

import pytest

from quintic_mirror.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main, normalize_command


def _run_json(capsys, *argv: str) -> tuple[int, dict]:
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize(
    ("words", "name"),
    [
        (["verify", "ode"], "verify-ode"),
        (["verify-ode"], "verify-ode"),
        (["oracle", "lines"], "oracle-lines"),
        (["verify", "sigma-model"], "verify-sigma-model"),
        (["instantons"], "instantons"),
    ],
)
def test_normalize_command(words, name):
    assert normalize_command(words) == name


def test_instantons_json(capsys):
    code, payload = _run_json(capsys, "instantons", "--max-degree", "3")
    assert code == EXIT_OK
    assert payload["command"] == "instantons"
    assert payload["pass"] is True
    assert payload["params"] == {"max_degree": "3"}
    assert [row["n_d"] for row in payload["results"]] == ["2875", "609250", "317206375"]
    assert isinstance(payload["elapsed_ms"], int)


def test_instantons_degree_zero(capsys):
    code, payload = _run_json(capsys, "instantons", "--max-degree", "0")
    assert code == EXIT_OK
    assert payload["results"] == []


def test_verify_ode_two_words(capsys):
    code, payload = _run_json(capsys, "verify", "ode", "--order", "5")
    assert code == EXIT_OK
    assert payload["pass"] is True
    assert len(payload["results"]) == 6


def test_verify_recursion_runs_at_default_weights(capsys):
    code, payload = _run_json(capsys, "verify", "recursion", "--order", "2")
    assert code == EXIT_OK
    assert payload["pass"] is True
    assert len(payload["params"]["lambdas"]) == 5


def test_oracle_lines(capsys):
    code, payload = _run_json(capsys, "oracle", "lines")
    assert code == EXIT_OK
    assert payload["results"] == [{"lines": "2875"}]


def test_results_are_reproducible(capsys):
    _, first = _run_json(capsys, "yukawa", "--order", "3")
    _, second = _run_json(capsys, "yukawa", "--order", "3")
    assert json.dumps(first["results"]) == json.dumps(second["results"])
    assert first["results"][2] == {"d": 2, "K_d": "4876875/1"}


def test_csv_output(capsys):
    code = main(["instantons", "--max-degree", "2", "--csv"])
    lines = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert lines == ["d,N_d,n_d", "1,2875/1,2875", "2,4876875/8,609250"]


def test_pretty_output(capsys):
    code = main(["oracle", "cubic"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.startswith("oracle-cubic: PASS")
    assert "lines=27" in out


def test_bad_weights_exit_two(capsys):
    code, payload = _run_json(capsys, "verify", "polynomiality", "--lambdas", "1,2,x,4,-7")
    assert code == EXIT_USAGE
    assert payload["error"] == "WeightParseError"
    assert payload["details"]["position"] == 3


def test_degenerate_weights_exit_one(capsys):
    code, payload = _run_json(
        capsys, "verify", "recursion", "--q-order", "2", "--lambdas", "1,2,3,4,-10"
    )
    assert code == EXIT_FAILED
    assert payload["error"] == "DegenerateWeightsError"
    assert payload["details"]["pairs"]


@pytest.mark.parametrize(
    "argv",
    [["frobnicate"], ["instantons", "--max-degree", "-1"], ["instantons", "--json", "--csv"], []],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == EXIT_USAGE
