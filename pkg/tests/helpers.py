"""Construction helpers shared across the test suite.

Small factories for tables, weight vectors, and seeded random instances.
Randomised tests draw instances through `random_instance` so that every
campaign is reproducible from its seed alone.
"""

from __future__ import annotations

import random
from fractions import Fraction

from tristrat import (
    Axis,
    ParamSet,
    Rating,
    SituationTable,
    WeightVector,
    mask_from_ids,
)

RATING_BY_TOKEN = {"+": Rating.SUPPORT, "0": Rating.NEUTRAL, "-": Rating.OPPOSE}


def F(value) -> Fraction:
    return Fraction(value)


def table_from_rows(rows: dict[str, str]) -> SituationTable:
    """Build a table from compact rows such as {"p1": "+0-"}."""
    agents = tuple(rows)
    width = len(next(iter(rows.values())))
    issues = tuple(f"t{j}" for j in range(1, width + 1))
    ratings = tuple(tuple(RATING_BY_TOKEN[ch] for ch in row) for row in rows.values())
    return SituationTable(agents=agents, issues=issues, ratings=ratings)


def weights_of(axis: Axis, ids, values) -> WeightVector:
    return WeightVector(axis=axis, ids=tuple(ids), values=tuple(Fraction(v) for v in values))


def mask_for(names, ids_text: str) -> int:
    """Mask for a comma-separated id list against a universe tuple."""
    wanted = tuple(part.strip() for part in ids_text.split(","))
    return mask_from_ids(wanted, tuple(names))


def random_instance(
    rng: random.Random,
    max_agents: int = 8,
    max_issues: int = 8,
    allow_zero_weights: bool = False,
) -> tuple[SituationTable, WeightVector, WeightVector]:
    """A random situation table with weight vectors on both axes."""
    m = rng.randint(1, max_agents)
    n = rng.randint(1, max_issues)
    agents = tuple(f"p{i}" for i in range(1, m + 1))
    issues = tuple(f"t{j}" for j in range(1, n + 1))
    ratings = tuple(
        tuple(Rating(rng.choice((-1, 0, 1))) for _ in issues) for _ in agents
    )
    table = SituationTable(agents=agents, issues=issues, ratings=ratings)
    theta = weights_of(Axis.AGENTS, agents, _masses(rng, m, allow_zero_weights))
    omega = weights_of(Axis.ISSUES, issues, _masses(rng, n, allow_zero_weights))
    return table, theta, omega


def _masses(rng: random.Random, size: int, allow_zero: bool) -> list[Fraction]:
    low = 0 if allow_zero else 1
    values = [rng.randint(low, 8) for _ in range(size)]
    if not any(values):
        values[rng.randrange(size)] = rng.randint(1, 8)
    return [Fraction(v, 10) for v in values]


def random_clique(rng: random.Random, table: SituationTable, theta: WeightVector) -> int:
    """A nonempty agent mask with positive weight mass."""
    while True:
        mask = rng.randrange(1, 1 << table.agent_count)
        if theta.mass(mask) > 0:
            return mask


def random_params(rng: random.Random, issue_count: int = 1) -> ParamSet:
    """Random thresholds spanning the full admissible ranges."""
    beta_c, alpha_c = sorted((rng.randint(10, 20), rng.randint(10, 20)))
    beta_n, alpha_n = sorted((rng.randint(0, 20), rng.randint(0, 20)))
    beta_pair, alpha_pair = sorted((rng.randint(0, 20), rng.randint(0, 20)))
    return ParamSet(
        mu=Fraction(rng.randint(0, 10), 10),
        nu=Fraction(-rng.randint(0, 10), 10),
        lam=Fraction(rng.randint(10, 20), 20),
        tau=Fraction(rng.randint(0, 10), 20),
        gamma_p=Fraction(0),
        gamma_t=Fraction(0),
        order_l=rng.randint(1, max(1, issue_count)),
        alpha_c=Fraction(alpha_c, 20),
        beta_c=Fraction(beta_c, 20),
        alpha_n=Fraction(alpha_n, 20),
        beta_n=Fraction(beta_n, 20),
        alpha_pair=Fraction(alpha_pair, 20),
        beta_pair=Fraction(beta_pair, 20),
    )
