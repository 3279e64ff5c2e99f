"""Registry of runnable commands shared by the CLI, the HTTP API and the MCP server."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from quintic_mirror.algebra.cohomology import WeightSpec, parse_weights
from quintic_mirror.config import settings
from quintic_mirror.models import RunConfig, RunReport
from quintic_mirror.quintic.hypergeom import (
    extract_f0_f1,
    i_series,
    i_series_equivariant,
    verify_f0,
    verify_ode,
)
from quintic_mirror.quintic.instanton import instanton_numbers
from quintic_mirror.quintic.mirror import (
    build_mirror_map,
    j_series,
    mirror_coordinate,
    verify_asymptotics,
    yukawa,
)
from quintic_mirror.quintic.recursion import (
    extract_recursion,
    reconstruct,
    verify_covariance,
    verify_polynomiality,
    verify_uniqueness,
)
from quintic_mirror.quintic.schubert import count_lines_on_cubic_surface, count_lines_on_quintic
from quintic_mirror.quintic.sigma_model import verify_theorem_a
from quintic_mirror.reports import VerificationReport, exact

logger = logging.getLogger(__name__)


@dataclass
class CommandOutcome:
    params: dict[str, Any]
    results: list[dict[str, Any]]
    passed: bool


@dataclass(frozen=True)
class CommandDefinition:
    name: str
    description: str
    runner: Callable[[RunConfig], CommandOutcome]
    accepted_params: tuple[str, ...]
    defaults: dict[str, Any] = field(default_factory=dict)


def _order(config: RunConfig, default: int) -> int:
    return default if config.q_order is None else config.q_order


def _weights(config: RunConfig, default: str) -> WeightSpec:
    return parse_weights(config.lambdas or default)


def _from_report(report: VerificationReport) -> CommandOutcome:
    payload = report.to_dict()
    return CommandOutcome(payload["params"], payload["checks"], report.passed)


def _run_instantons(config: RunConfig) -> CommandOutcome:
    degree = _order(config, settings.instanton_order)
    rows = instanton_numbers(degree)
    passed = all(row.n_d > 0 for row in rows)
    if rows:
        passed = passed and rows[0].n_d == count_lines_on_quintic()
    return CommandOutcome({"max_degree": degree}, [row.to_dict() for row in rows], passed)


def _run_mirror_map(config: RunConfig) -> CommandOutcome:
    order = max(_order(config, settings.instanton_order), 1)
    f0, f1 = extract_f0_f1(order)
    m = build_mirror_map(order)
    forward, inverse = mirror_coordinate(order)
    results = [
        {
            "d": d,
            "f0": exact(f0.coefficient(d)),
            "f1": exact(f1.coefficient(d)),
            "g": exact(m.g.coefficient(d)),
            "Q_of_q": exact(forward.coefficient(d)),
            "q_of_Q": exact(inverse.coefficient(d)),
        }
        for d in range(order + 1)
    ]
    return CommandOutcome({"order": order, "coordinate": "Q = q*exp(f1/f0)"}, results, True)


def _run_yukawa(config: RunConfig) -> CommandOutcome:
    order = _order(config, settings.instanton_order)
    k = yukawa(j_series(order), order)
    results = [{"d": d, "K_d": exact(k.coefficient(d))} for d in range(order + 1)]
    return CommandOutcome({"order": order, "coordinate": "mirror coordinate Q"}, results, True)


def _run_verify_ode(config: RunConfig) -> CommandOutcome:
    order = _order(config, settings.instanton_order)
    return _from_report(verify_ode(i_series(order), order))


def _run_verify_f0(config: RunConfig) -> CommandOutcome:
    return _from_report(verify_f0(_order(config, 20)))


def _run_verify_sigma_model(config: RunConfig) -> CommandOutcome:
    order = _order(config, settings.sigma_order)
    z_order = 3 if config.z_order is None else config.z_order
    return _from_report(verify_theorem_a(order, z_order))


def _run_verify_asymptotics(config: RunConfig) -> CommandOutcome:
    return _from_report(verify_asymptotics(_order(config, settings.instanton_order)))


def _run_verify_polynomiality(config: RunConfig) -> CommandOutcome:
    order = _order(config, settings.equiv_order)
    z_order = order if config.z_order is None else config.z_order
    w = _weights(config, settings.lambdas)
    return _from_report(verify_polynomiality(i_series_equivariant(order, w), w, order, z_order))


def _run_verify_recursion(config: RunConfig) -> CommandOutcome:
    order = _order(config, settings.equiv_order)
    w = _weights(config, settings.recursion_lambdas)
    z = i_series_equivariant(order, w)
    data = extract_recursion(z, w, order)
    rebuilt = reconstruct(data, order)
    results: list[dict[str, Any]] = [
        {"check": f"C[{row['alpha']},{row['beta']}]({row['m']})", "pass": True, "C": exact(row["C"])}
        for row in data.rows()
    ]
    for alpha in range(len(w.lambdas)):
        for d in range(order + 1):
            same = rebuilt.coefficient(alpha, d) == z.coefficient(alpha, d)
            results.append({"check": f"reconstruct alpha={alpha + 1} q^{d}", "pass": same})
    passed = all(item["pass"] for item in results)
    return CommandOutcome({"q_order": order, "lambdas": w.as_strings()}, results, passed)


def _run_reconstruct(config: RunConfig) -> CommandOutcome:
    order = _order(config, settings.equiv_order)
    w = _weights(config, settings.recursion_lambdas)
    z = i_series_equivariant(order, w)
    rebuilt = reconstruct(extract_recursion(z, w, order), order)
    results = [
        {"alpha": alpha + 1, "d": d, "Z": exact(rebuilt.coefficient(alpha, d))}
        for alpha in range(len(w.lambdas))
        for d in range(order + 1)
    ]
    return CommandOutcome({"q_order": order, "lambdas": w.as_strings()}, results, rebuilt == z)


def _run_verify_covariance(config: RunConfig) -> CommandOutcome:
    order = _order(config, settings.equiv_order)
    z_order = order if config.z_order is None else config.z_order
    return _from_report(verify_covariance(_weights(config, settings.recursion_lambdas), order, z_order))


def _run_verify_uniqueness(config: RunConfig) -> CommandOutcome:
    order = _order(config, settings.equiv_order)
    w = _weights(config, settings.recursion_lambdas)
    return _from_report(verify_uniqueness(w, order, config.z_order))


def _run_oracle(count: Callable[[], int], expected: int, label: str) -> Callable[[RunConfig], CommandOutcome]:
    def runner(config: RunConfig) -> CommandOutcome:
        value = count()
        return CommandOutcome({"target": label}, [{"lines": str(value)}], value == expected)

    return runner


def get_command_registry() -> dict[str, CommandDefinition]:
    equivariant = ("q_order", "z_order", "lambdas")
    definitions = [
        CommandDefinition(
            "instantons",
            "Instanton numbers n_d of the quintic from the mirror theorem, with N_d.",
            _run_instantons,
            ("q_order",),
            {"q_order": settings.instanton_order},
        ),
        CommandDefinition(
            "mirror-map",
            "f0, f1, g = f1/f0 and the mirror coordinate Q = q*exp(g) with its inverse.",
            _run_mirror_map,
            ("q_order",),
            {"q_order": settings.instanton_order},
        ),
        CommandDefinition(
            "yukawa",
            "Yukawa coupling K(Q) in the mirror coordinate.",
            _run_yukawa,
            ("q_order",),
            {"q_order": settings.instanton_order},
        ),
        CommandDefinition(
            "verify-ode",
            "Picard-Fuchs equation for the hypergeometric series, degree by degree.",
            _run_verify_ode,
            ("q_order",),
            {"q_order": settings.instanton_order},
        ),
        CommandDefinition(
            "verify-f0",
            "Closed form, ODE recurrence and hypergeometric series agree on f0 and f1.",
            _run_verify_f0,
            ("q_order",),
            {"q_order": 20},
        ),
        CommandDefinition(
            "verify-sigma-model",
            "Residue computation of L(q,z) equals the pairing of hypergeometric series.",
            _run_verify_sigma_model,
            ("q_order", "z_order"),
            {"q_order": settings.sigma_order, "z_order": 3},
        ),
        CommandDefinition(
            "verify-asymptotics",
            "The mirror-transformed series is 1 + o(1/hbar) in the required sense.",
            _run_verify_asymptotics,
            ("q_order",),
            {"q_order": settings.instanton_order},
        ),
        CommandDefinition(
            "verify-polynomiality",
            "Pairing of the localized hypergeometric series has coefficients polynomial in hbar.",
            _run_verify_polynomiality,
            equivariant,
            {"q_order": settings.equiv_order, "lambdas": settings.lambdas},
        ),
        CommandDefinition(
            "verify-recursion",
            "Recursion coefficients by residues and exact reconstruction of the localized series.",
            _run_verify_recursion,
            ("q_order", "lambdas"),
            {"q_order": settings.equiv_order, "lambdas": settings.recursion_lambdas},
        ),
        CommandDefinition(
            "verify-covariance",
            "Mirror transform keeps the recursion coefficients and polynomiality.",
            _run_verify_covariance,
            equivariant,
            {"q_order": settings.equiv_order, "lambdas": settings.recursion_lambdas},
        ),
        CommandDefinition(
            "verify-uniqueness",
            "Polynomial solution of the recursion is fixed by its hbar^0 and hbar^-1 asymptotics.",
            _run_verify_uniqueness,
            equivariant,
            {"q_order": settings.equiv_order, "lambdas": settings.recursion_lambdas},
        ),
        CommandDefinition(
            "reconstruct",
            "Rebuild the localized series from extracted recursion data.",
            _run_reconstruct,
            ("q_order", "lambdas"),
            {"q_order": settings.equiv_order, "lambdas": settings.recursion_lambdas},
        ),
        CommandDefinition(
            "oracle-lines",
            "Schubert calculus count of lines on the quintic threefold (2875).",
            _run_oracle(count_lines_on_quintic, 2875, "quintic threefold"),
            (),
        ),
        CommandDefinition(
            "oracle-cubic",
            "Same engine on the cubic surface (27).",
            _run_oracle(count_lines_on_cubic_surface, 27, "cubic surface"),
            (),
        ),
    ]
    return {definition.name: definition for definition in definitions}


def get_command(name: str) -> CommandDefinition:
    registry = get_command_registry()
    definition = registry.get(name)
    if definition is None:
        raise KeyError(f"Unknown command '{name}'. Known commands: {', '.join(sorted(registry))}")
    return definition


def run_command(config: RunConfig) -> RunReport:
    definition = get_command(config.command)
    started = time.perf_counter()
    outcome = definition.runner(config)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    logger.info("command %s finished in %s ms (pass=%s)", config.command, elapsed_ms, outcome.passed)
    return RunReport(
        command=config.command,
        params=exact(outcome.params),
        results=outcome.results,
        passed=outcome.passed,
        elapsed_ms=elapsed_ms,
    )
