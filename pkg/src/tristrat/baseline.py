"""Unweighted baseline model of Xu for comparison runs.

Xu's consistency model ignores agent and issue weights: similarity to the
ideal supporter or opponent is one minus the mean absolute rating distance,
the overall rating compares the two similarities by sign, per-issue
consistency is one minus half the mean distance from the overall rating, and
a strategy's consistency is the plain average over its issues.  Strategy
selection keeps the L issues with the highest per-issue consistency and
accepts the bundle when its average reaches lam.

The weighted engine degenerates to this model exactly under uniform
weights with mu = nu = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GateError, ValidationError
from .model import (
    ParamSet,
    Rating,
    SituationTable,
    check_clique,
    check_strategy,
    iter_indices,
    mask_from_indices,
    popcount,
)

__all__ = [
    "XuRanking",
    "xu_similarity",
    "xu_rating",
    "xu_rating_vector",
    "xu_cm_issue",
    "xu_cm_set",
    "xu_ranking",
    "xu_feasible_L",
]


def xu_similarity(table: SituationTable, clique: int, issue: int, sign: int) -> Fraction:
    """Unweighted similarity of a clique to the ideal supporter or opponent."""
    if sign not in (1, -1):
        raise ValidationError("sign must be +1 or -1")
    check_clique(clique, table.agent_count)
    if not 0 <= issue < table.issue_count:
        raise ValidationError(f"issue index {issue} out of range")
    members = tuple(iter_indices(clique))
    distance = sum(abs(int(table.rating(p, issue)) - sign) for p in members)
    return 1 - Fraction(distance, 2 * len(members))


def xu_rating(table: SituationTable, clique: int, issue: int) -> Rating:
    """Sign comparison of the two ideal-agent similarities."""
    pos = xu_similarity(table, clique, issue, 1)
    neg = xu_similarity(table, clique, issue, -1)
    if pos > neg:
        return Rating.SUPPORT
    if pos < neg:
        return Rating.OPPOSE
    return Rating.NEUTRAL


def xu_rating_vector(table: SituationTable, clique: int) -> tuple[Rating, ...]:
    return tuple(xu_rating(table, clique, t) for t in range(table.issue_count))


def xu_cm_issue(table: SituationTable, clique: int, issue: int) -> Fraction:
    """Per-issue consistency: one minus half the mean distance from the rating."""
    overall = int(xu_rating(table, clique, issue))
    members = tuple(iter_indices(clique))
    distance = sum(abs(int(table.rating(p, issue)) - overall) for p in members)
    return 1 - Fraction(distance, 2 * len(members))


def xu_cm_set(table: SituationTable, clique: int, strategy: int) -> Fraction:
    """Plain average of per-issue consistency over a strategy."""
    check_strategy(strategy, table.issue_count)
    issues = tuple(iter_indices(strategy))
    return sum(
        (xu_cm_issue(table, clique, t) for t in issues), Fraction(0)
    ) / len(issues)


@dataclass(frozen=True)
class XuRanking:
    """Issues ranked by per-issue consistency, best first.

    ``issues`` is a permutation of the issue indices and ``degrees`` the
    matching consistency values, non-increasing.  Equal degrees are broken
    by ascending issue index, so the ranking is deterministic; use
    :meth:`boundary_ties` to see which excluded issues tie with the cut.
    """

    clique: int
    issues: tuple[int, ...]
    degrees: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.issues) != len(self.degrees):
            raise ValidationError("ranking needs one degree per issue")
        if any(a < b for a, b in zip(self.degrees, self.degrees[1:])):
            raise ValidationError("ranking degrees must be non-increasing")

    def top_mask(self, order: int) -> int:
        if not 1 <= order <= len(self.issues):
            raise ValidationError(f"order must lie in [1, {len(self.issues)}]")
        return mask_from_indices(self.issues[:order])

    def boundary_ties(self, order: int) -> tuple[int, ...]:
        """Excluded issues whose degree ties the last kept one.

        Nonempty means other equally ranked bundles exist; the reported one
        is the deterministic ascending-index choice.
        """
        if not 1 <= order <= len(self.issues):
            raise ValidationError(f"order must lie in [1, {len(self.issues)}]")
        cut = self.degrees[order - 1]
        return tuple(
            t for t, d in zip(self.issues[order:], self.degrees[order:]) if d == cut
        )


def xu_ranking(table: SituationTable, clique: int) -> XuRanking:
    """Rank all issues for a clique, ties broken by ascending index."""
    check_clique(clique, table.agent_count)
    degrees = [xu_cm_issue(table, clique, t) for t in range(table.issue_count)]
    order = tuple(sorted(range(table.issue_count), key=lambda t: (-degrees[t], t)))
    return XuRanking(clique, order, tuple(degrees[t] for t in order))


def xu_feasible_L(
    table: SituationTable, clique: int, params: ParamSet
) -> tuple[int, Fraction] | None:
    """Dominant L-issue strategy, or None when it misses the lam threshold.

    The clique must pass the gamma_p size gate; that failure raises rather
    than returning None, so the two outcomes stay distinguishable.
    """
    check_clique(clique, table.agent_count)
    if Fraction(popcount(clique), table.agent_count) < params.gamma_p:
        raise GateError(
            f"clique holds {popcount(clique)} of {table.agent_count} agents, "
            f"below the gamma_p gate of {params.gamma_p}"
        )
    ranking = xu_ranking(table, clique)
    mask = ranking.top_mask(params.order_l)
    degree = xu_cm_set(table, clique, mask)
    if degree >= params.lam:
        return mask, degree
    return None
