"""Independent reference implementation used to cross-check the engine.

Everything here transcribes the definitional formulas directly: consistency
as one minus half the weighted rating distance from the overall rating, pair
conflict through the absolute share difference, non-consistency as the full
ordered double sum.  None of the closed forms or profile caching used by the
fast path appear here, so agreement between the two routes is meaningful.
Exact rational arithmetic throughout; "equal" always means exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ZeroMassError
from .model import (
    ParamSet,
    Rating,
    SituationTable,
    WeightVector,
    check_clique,
    check_strategy,
    iter_indices,
    popcount,
)
from .engine import StrategyKind

__all__ = [
    "OracleReport",
    "compare",
    "oracle_overall_rating",
    "oracle_cm_issue",
    "oracle_cm",
    "oracle_pair_conflict",
    "oracle_nm_issue",
    "oracle_nm",
    "oracle_feasible",
    "oracle_optimal",
]


def _share(theta: WeightVector, member: int, context: int) -> Fraction:
    total = theta.mass(context)
    if total == 0:
        raise ZeroMassError("context has zero total weight")
    return theta.weight(member) / total


def oracle_overall_rating(
    table: SituationTable, theta: WeightVector, clique: int, issue: int, params: ParamSet
) -> Rating:
    """Rating from the ideal-agent similarity difference, term by term."""
    check_clique(clique, table.agent_count)
    sa_pos = Fraction(0)
    sa_neg = Fraction(0)
    for p in iter_indices(clique):
        share = _share(theta, p, clique)
        r = int(table.rating(p, issue))
        sa_pos += share * Fraction(1 + r, 2)
        sa_neg += share * Fraction(1 - r, 2)
    diff = sa_pos - sa_neg
    if diff > params.mu:
        return Rating.SUPPORT
    if diff < params.nu:
        return Rating.OPPOSE
    return Rating.NEUTRAL


def oracle_cm_issue(
    table: SituationTable, theta: WeightVector, clique: int, issue: int, params: ParamSet
) -> Fraction:
    """Consistency as one minus half the weighted distance from the rating."""
    overall = int(oracle_overall_rating(table, theta, clique, issue, params))
    distance = Fraction(0)
    for p in iter_indices(clique):
        share = _share(theta, p, clique)
        distance += share * abs(int(table.rating(p, issue)) - overall)
    return 1 - distance / 2


def oracle_cm(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    strategy: int,
    params: ParamSet,
) -> Fraction:
    """Issue-weighted consistency over a strategy."""
    check_strategy(strategy, table.issue_count)
    total_weight = omega.mass(strategy)
    if total_weight == 0:
        raise ZeroMassError("strategy carries zero total weight")
    value = Fraction(0)
    for t in iter_indices(strategy):
        value += (omega.weight(t) / total_weight) * oracle_cm_issue(
            table, theta, clique, t, params
        )
    return value


def oracle_pair_conflict(
    table: SituationTable, theta: WeightVector, p: int, q: int, issue: int
) -> Fraction:
    """Pair conflict through the share-difference form."""
    pair = (1 << p) | (1 << q)
    if theta.mass(pair) == 0:
        raise ZeroMassError("agent pair carries zero total weight")
    distance = abs(int(table.rating(p, issue)) - int(table.rating(q, issue)))
    if distance == 0:
        return Fraction(0)
    gap = abs(_share(theta, p, pair) - _share(theta, q, pair))
    return distance * (1 - gap) / 2


def oracle_nm_issue(
    table: SituationTable, theta: WeightVector, clique: int, issue: int
) -> Fraction:
    """Non-consistency as the full ordered double sum over the clique."""
    check_clique(clique, table.agent_count)
    members = tuple(iter_indices(clique))
    total = Fraction(0)
    for p in members:
        for q in members:
            if p != q:
                total += oracle_pair_conflict(table, theta, p, q, issue)
    return total / Fraction(len(members) ** 2)


def oracle_nm(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    strategy: int,
) -> Fraction:
    """Issue-weighted non-consistency over a strategy."""
    check_strategy(strategy, table.issue_count)
    total_weight = omega.mass(strategy)
    if total_weight == 0:
        raise ZeroMassError("strategy carries zero total weight")
    value = Fraction(0)
    for t in iter_indices(strategy):
        value += (omega.weight(t) / total_weight) * oracle_nm_issue(table, theta, clique, t)
    return value


def oracle_feasible(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    params: ParamSet,
    kind: StrategyKind,
) -> frozenset[int]:
    """All feasible strategies by direct filtering, no shared state.

    A clique below the gamma_p gate admits no feasible strategy, so the
    result is simply empty here; the engine raises instead to keep the
    failure visible.
    """
    check_clique(clique, table.agent_count)
    if Fraction(popcount(clique), table.agent_count) < params.gamma_p:
        return frozenset()
    out = []
    for mask in range(1, 1 << table.issue_count):
        if kind is StrategyKind.CONSISTENCY:
            ok = oracle_cm(table, theta, omega, clique, mask, params) >= params.lam
        else:
            ok = oracle_nm(table, theta, omega, clique, mask) <= params.tau
        if ok:
            out.append(mask)
    return frozenset(out)


def oracle_optimal(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    params: ParamSet,
    kind: StrategyKind,
    feasible: Iterable[int] | None = None,
) -> tuple[frozenset[int], Fraction | None]:
    """Extremal feasible strategies above the gamma_t size gate.

    Returns the argmax (consistency) or argmin (non-consistency) set and the
    shared extremal degree, or an empty set and None when no feasible
    strategy is large enough.  An empty result is a legitimate outcome, not
    an error.
    """
    if feasible is None:
        feasible = oracle_feasible(table, theta, omega, clique, params, kind)
    n = table.issue_count
    candidates = [m for m in feasible if Fraction(popcount(m), n) >= params.gamma_t]
    if not candidates:
        return frozenset(), None
    if kind is StrategyKind.CONSISTENCY:
        degrees = {m: oracle_cm(table, theta, omega, clique, m, params) for m in candidates}
        best = max(degrees.values())
    else:
        degrees = {m: oracle_nm(table, theta, omega, clique, m) for m in candidates}
        best = min(degrees.values())
    return frozenset(m for m, d in degrees.items() if d == best), best


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one engine-versus-oracle comparison."""

    quantity: str
    engine: object
    oracle: object
    equal: bool


def compare(quantity: str, engine_value: object, oracle_value: object) -> OracleReport:
    """Exact comparison of an engine value with its oracle counterpart."""
    return OracleReport(quantity, engine_value, oracle_value, engine_value == oracle_value)
