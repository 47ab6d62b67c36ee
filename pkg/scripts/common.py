"""Shared case loading for the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from tristrat import (
    Axis,
    ParamSet,
    SituationTable,
    WeightVector,
    load_situation_table,
    load_weights,
    mask_from_ids,
)
from tristrat.cli import read_config

DATA = Path(__file__).resolve().parents[1] / "data"

CASE_NAMES = ("middle_east", "nba", "gansu")

PARAM_FIELDS = {
    "mu": "mu",
    "nu": "nu",
    "lambda": "lam",
    "tau": "tau",
    "gamma_p": "gamma_p",
    "gamma_t": "gamma_t",
    "L": "order_l",
    "alpha_c": "alpha_c",
    "beta_c": "beta_c",
    "alpha_n": "alpha_n",
    "beta_n": "beta_n",
    "alpha_pair": "alpha_pair",
    "beta_pair": "beta_pair",
}


@dataclass(frozen=True)
class Bundle:
    """One dataset with the cliques and thresholds its config declares."""

    table: SituationTable
    theta: WeightVector
    omega: WeightVector
    params: ParamSet
    cliques: tuple[int, ...]
    focus_issue: int | None
    config: dict[str, str]

    @property
    def clique(self) -> int:
        return self.cliques[0]


def _mask(ids_text: str, universe: Sequence[str]) -> int:
    wanted = tuple(part.strip() for part in ids_text.split(","))
    return mask_from_ids(wanted, universe)


def load_bundle(config_path: Path) -> Bundle:
    """Load the table, weights, cliques, and thresholds a config points at."""
    config = read_config(config_path)
    root = config_path.parent
    with open(root / config["table"], encoding="utf-8") as fh:
        table = load_situation_table(fh)
    with open(root / config["agent_weights"], encoding="utf-8") as fh:
        theta = load_weights(fh, Axis.AGENTS, table.agents)
    with open(root / config["issue_weights"], encoding="utf-8") as fh:
        omega = load_weights(fh, Axis.ISSUES, table.issues)
    if "cliques" in config:
        cliques = tuple(
            _mask(part, table.agents) for part in config["cliques"].split(";")
        )
    else:
        cliques = (_mask(config["clique"], table.agents),)
    focus = (
        table.issues.index(config["focus_issue"])
        if "focus_issue" in config
        else None
    )
    fields: dict[str, object] = {
        field: config[key] for key, field in PARAM_FIELDS.items() if key in config
    }
    if "order_l" in fields:
        fields["order_l"] = int(str(fields["order_l"]))
    return Bundle(
        table=table,
        theta=theta,
        omega=omega,
        params=ParamSet(**fields),  # type: ignore[arg-type]
        cliques=cliques,
        focus_issue=focus,
        config=config,
    )


def case_config(name: str) -> Path:
    return DATA / name / "case.cfg"
