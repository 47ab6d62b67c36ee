"""Weighted consistency measures and the trisections they induce.

For a clique G and an issue t the clique splits into supporting, neutral and
opposing coalitions whose weight shares (rho+, rho0, rho-) sum to one.  Two
ideal agents bracket the scale: one supporting everything, one opposing
everything.  The weighted similarity of G to each ideal agent,

    SA+(G, t) = sum_p theta(p | G) * (1 + r(p, t)) / 2
    SA-(G, t) = sum_p theta(p | G) * (1 - r(p, t)) / 2,

always satisfies SA+ + SA- = 1 and SA+ - SA- = rho+ - rho-.  The overall
rating of the clique compares that difference with thresholds mu and nu, and
the consistency measure CM(G, t) collapses to a closed form in the powers:

    rating +1:  CM = rho+ + rho0 / 2
    rating  0:  CM = rho0 + (rho+ + rho-) / 2
    rating -1:  CM = rho- + rho0 / 2

which always lies in [1/2, 1].  Strategy-level consistency is the
issue-weighted average of per-issue values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalError, ValidationError
from .model import (
    ParamSet,
    Rating,
    SituationTable,
    WeightVector,
    check_clique,
    check_strategy,
    conditional_weight,
    full_mask,
    iter_indices,
    powers,
)

__all__ = [
    "CliqueState",
    "IssueTrisection",
    "sa_agent",
    "sa_clique",
    "overall_rating",
    "rating_vector",
    "cm_issue",
    "cm_strategy",
    "issue_consistency_profile",
    "classify_clique_c",
    "issue_trisection_c",
]

_SIGNS = (1, -1)


class CliqueState(enum.Enum):
    """Three-way classification of a clique or an issue."""

    ALLIANCE = "alliance"
    NEUTRAL = "neutral"
    CONFLICT = "conflict"


@dataclass(frozen=True)
class IssueTrisection:
    """Disjoint issue masks covering the whole issue axis."""

    alliance: int
    neutral: int
    conflict: int

    def __post_init__(self) -> None:
        if self.alliance & self.neutral or self.alliance & self.conflict or self.neutral & self.conflict:
            raise InternalError("trisection parts overlap")

    def state_of(self, issue: int) -> CliqueState:
        bit = 1 << issue
        if self.alliance & bit:
            return CliqueState.ALLIANCE
        if self.conflict & bit:
            return CliqueState.CONFLICT
        return CliqueState.NEUTRAL


def _check_sign(sign: int) -> None:
    if sign not in _SIGNS:
        raise ValidationError("sign must be +1 or -1")


def sa_agent(table: SituationTable, agent: int, issue: int, sign: int) -> Fraction:
    """Similarity of one agent to the ideal supporter (+1) or opponent (-1)."""
    _check_sign(sign)
    if not 0 <= agent < table.agent_count:
        raise ValidationError(f"agent index {agent} out of range")
    if not 0 <= issue < table.issue_count:
        raise ValidationError(f"issue index {issue} out of range")
    return Fraction(1 + sign * int(table.rating(agent, issue)), 2)


def sa_clique(
    table: SituationTable, theta: WeightVector, clique: int, issue: int, sign: int
) -> Fraction:
    """Weighted similarity of a clique to an ideal agent."""
    _check_sign(sign)
    check_clique(clique, table.agent_count)
    total = Fraction(0)
    for p in iter_indices(clique):
        share = conditional_weight(theta, 1 << p, clique)
        total += share * sa_agent(table, p, issue, sign)
    return total


def _rating_from_diff(diff: Fraction, params: ParamSet) -> Rating:
    if diff > params.mu:
        return Rating.SUPPORT
    if diff < params.nu:
        return Rating.OPPOSE
    return Rating.NEUTRAL


def overall_rating(
    table: SituationTable, theta: WeightVector, clique: int, issue: int, params: ParamSet
) -> Rating:
    """Three-way rating of the clique on one issue.

    Support when the similarity difference SA+ - SA- exceeds mu, opposition
    when it falls below nu, neutral inside the closed band [nu, mu].  The
    difference equals rho+ - rho-, which is what gets computed.
    """
    pos, _, neg = powers(table, theta, clique, issue)
    return _rating_from_diff(pos - neg, params)


def rating_vector(
    table: SituationTable, theta: WeightVector, clique: int, params: ParamSet
) -> tuple[Rating, ...]:
    """Overall rating of the clique on every issue of the table."""
    return tuple(
        overall_rating(table, theta, clique, t, params) for t in range(table.issue_count)
    )


def _cm_from_powers(pos: Fraction, neu: Fraction, neg: Fraction, params: ParamSet) -> tuple[Rating, Fraction]:
    rating = _rating_from_diff(pos - neg, params)
    if rating is Rating.SUPPORT:
        value = pos + neu / 2
    elif rating is Rating.OPPOSE:
        value = neg + neu / 2
    else:
        value = neu + (pos + neg) / 2
    if not Fraction(1, 2) <= value <= 1:
        raise InternalError(f"consistency degree {value} escaped [1/2, 1]")
    return rating, value


def cm_issue(
    table: SituationTable, theta: WeightVector, clique: int, issue: int, params: ParamSet
) -> Fraction:
    """Consistency of a clique on one issue, in [1/2, 1]."""
    pos, neu, neg = powers(table, theta, clique, issue)
    return _cm_from_powers(pos, neu, neg, params)[1]


def issue_consistency_profile(
    table: SituationTable, theta: WeightVector, clique: int, params: ParamSet
) -> tuple[tuple[Rating, Fraction], ...]:
    """Per-issue (rating, consistency) pairs, computed in one pass.

    Strategy scans reuse this profile so each issue is measured once no
    matter how many strategies contain it.
    """
    out = []
    for t in range(table.issue_count):
        pos, neu, neg = powers(table, theta, clique, t)
        out.append(_cm_from_powers(pos, neu, neg, params))
    return tuple(out)


def cm_strategy(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    strategy: int,
    params: ParamSet,
) -> Fraction:
    """Issue-weighted consistency of a clique on a strategy."""
    check_strategy(strategy, table.issue_count)
    total = Fraction(0)
    for t in iter_indices(strategy):
        share = conditional_weight(omega, 1 << t, strategy)
        total += share * cm_issue(table, theta, clique, t, params)
    return total


def classify_clique_c(degree: Fraction, params: ParamSet) -> CliqueState:
    """Alliance at or above alpha_c, conflict at or below beta_c."""
    if not Fraction(1, 2) <= degree <= 1:
        raise ValidationError(f"consistency degree {degree} outside [1/2, 1]")
    if degree >= params.alpha_c:
        return CliqueState.ALLIANCE
    if degree <= params.beta_c:
        return CliqueState.CONFLICT
    return CliqueState.NEUTRAL


def issue_trisection_c(
    table: SituationTable, theta: WeightVector, clique: int, params: ParamSet
) -> IssueTrisection:
    """Classify every issue by the clique's consistency on it."""
    alliance = neutral = conflict = 0
    for t, (_, degree) in enumerate(issue_consistency_profile(table, theta, clique, params)):
        state = classify_clique_c(degree, params)
        if state is CliqueState.ALLIANCE:
            alliance |= 1 << t
        elif state is CliqueState.CONFLICT:
            conflict |= 1 << t
        else:
            neutral |= 1 << t
    trisection = IssueTrisection(alliance, neutral, conflict)
    if (alliance | neutral | conflict) != full_mask(table.issue_count):
        raise InternalError("issue trisection does not cover the issue axis")
    return trisection
