"""Session fixtures: the three bundled case studies, loaded once."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import pytest

from tristrat import (
    Axis,
    ParamSet,
    SituationTable,
    WeightVector,
    load_situation_table,
    load_weights,
    mask_from_ids,
)

DATA = Path(__file__).resolve().parents[1] / "data"

ACCEPTANCE_VERDICTS: list[str] = []


def pytest_terminal_summary(terminalreporter) -> None:
    """Echo one PASS or FAIL line per acceptance criterion after capture ends."""
    for line in ACCEPTANCE_VERDICTS:
        terminalreporter.write_line(line)


@dataclass(frozen=True)
class Case:
    """One bundled dataset: table plus both weight vectors."""

    table: SituationTable
    theta: WeightVector
    omega: WeightVector

    def clique(self, ids_text: str) -> int:
        wanted = tuple(part.strip() for part in ids_text.split(","))
        return mask_from_ids(wanted, self.table.agents)

    def strategy(self, ids_text: str) -> int:
        wanted = tuple(part.strip() for part in ids_text.split(","))
        return mask_from_ids(wanted, self.table.issues)


def load_case(name: str) -> Case:
    root = DATA / name
    with open(root / "table.csv", encoding="utf-8") as fh:
        table = load_situation_table(fh)
    with open(root / "agent_weights.csv", encoding="utf-8") as fh:
        theta = load_weights(fh, Axis.AGENTS, table.agents)
    with open(root / "issue_weights.csv", encoding="utf-8") as fh:
        omega = load_weights(fh, Axis.ISSUES, table.issues)
    return Case(table=table, theta=theta, omega=omega)


@pytest.fixture(scope="session")
def mideast() -> Case:
    return load_case("middle_east")


@pytest.fixture(scope="session")
def nba() -> Case:
    return load_case("nba")


@pytest.fixture(scope="session")
def gansu() -> Case:
    return load_case("gansu")


@pytest.fixture(scope="session")
def mideast_params() -> ParamSet:
    return ParamSet(
        mu="0.25",
        nu="-0.25",
        lam="0.73",
        tau="0.27",
        gamma_p="0.5",
        gamma_t="0.5",
        order_l=3,
        alpha_c="0.74",
        beta_c="0.65",
        alpha_n="0.33",
        beta_n="0.27",
        alpha_pair="0.5",
        beta_pair="0.34",
    )


@pytest.fixture(scope="session")
def nba_params() -> ParamSet:
    return ParamSet(
        mu="0.3",
        nu="-0.3",
        lam="0.94",
        tau="0.06",
        gamma_p="0.5",
        gamma_t="0.5",
        order_l=5,
    )


@pytest.fixture(scope="session")
def gansu_params() -> ParamSet:
    return ParamSet(
        mu="0.3",
        nu="-0.3",
        lam="0.72",
        tau="0.275",
        gamma_p="0.5",
        gamma_t="0.5",
        order_l=6,
    )
