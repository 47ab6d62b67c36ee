"""Pairwise conflict and the non-consistency measure.

The conflict between two agents on an issue weighs their rating distance by
how evenly the pair's weight is split:

    ca_t(p, q) = |r(p, t) - r(q, t)| * min(theta(p | pq), theta(q | pq))

where theta(x | pq) conditions on the two-agent set.  The measure is
symmetric, zero on the diagonal, and reaches 1 exactly for opposite ratings
with equally weighted agents.  It vanishes exactly when the ratings agree or
one agent carries the whole pair weight.

The non-consistency of a clique on an issue averages pair conflict over all
ordered agent pairs of the clique (diagonal included, contributing zero):

    nm(G, t) = sum_{(p,q) in G x G} ca_t(p, q) / #G^2

and lies in [0, 1/2].  Strategy-level values are issue-weighted averages.
Low non-consistency is good: alliance thresholds sit below conflict
thresholds here, mirrored from the consistency side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalError, ValidationError, ZeroMassError
from .model import (
    ParamSet,
    SituationTable,
    WeightVector,
    check_clique,
    check_strategy,
    conditional_weight,
    full_mask,
    iter_indices,
)
from .consistency import CliqueState, IssueTrisection

__all__ = [
    "PairConflictMatrix",
    "PairTrisection",
    "pair_conflict",
    "pair_conflict_set",
    "conflict_matrix_for_issue",
    "conflict_matrix_for_set",
    "pair_trisection",
    "nm_issue",
    "nm_strategy",
    "issue_nonconsistency_profile",
    "classify_clique_n",
    "issue_trisection_n",
]


def pair_conflict(
    table: SituationTable, theta: WeightVector, p: int, q: int, issue: int
) -> Fraction:
    """Conflict degree of an agent pair on one issue, in [0, 1]."""
    for agent in (p, q):
        if not 0 <= agent < table.agent_count:
            raise ValidationError(f"agent index {agent} out of range")
    if not 0 <= issue < table.issue_count:
        raise ValidationError(f"issue index {issue} out of range")
    pair = (1 << p) | (1 << q)
    if theta.mass(pair) == 0:
        raise ZeroMassError("agent pair carries zero total weight")
    distance = abs(int(table.rating(p, issue)) - int(table.rating(q, issue)))
    if distance == 0:
        return Fraction(0)
    share = min(
        conditional_weight(theta, 1 << p, pair),
        conditional_weight(theta, 1 << q, pair),
    )
    return distance * share


def pair_conflict_set(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    p: int,
    q: int,
    strategy: int,
) -> Fraction:
    """Issue-weighted conflict of an agent pair over a strategy."""
    check_strategy(strategy, table.issue_count)
    total = Fraction(0)
    for t in iter_indices(strategy):
        share = conditional_weight(omega, 1 << t, strategy)
        total += share * pair_conflict(table, theta, p, q, t)
    return total


@dataclass(frozen=True)
class PairConflictMatrix:
    """Symmetric agent-by-agent conflict matrix with zero diagonal."""

    agents: tuple[str, ...]
    scope: str
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.agents)
        if len(self.entries) != m or any(len(row) != m for row in self.entries):
            raise InternalError("conflict matrix is not square")
        for i in range(m):
            if self.entries[i][i] != 0:
                raise InternalError("conflict matrix diagonal must be zero")
            for j in range(i + 1, m):
                value = self.entries[i][j]
                if value != self.entries[j][i]:
                    raise InternalError("conflict matrix must be symmetric")
                if not 0 <= value <= 1:
                    raise InternalError("conflict entries must lie in [0, 1]")

    @property
    def size(self) -> int:
        return len(self.agents)


def _build_matrix(table: SituationTable, scope: str, entry) -> PairConflictMatrix:
    m = table.agent_count
    rows = [[Fraction(0)] * m for _ in range(m)]
    for p in range(m):
        for q in range(p + 1, m):
            value = entry(p, q)
            rows[p][q] = value
            rows[q][p] = value
    return PairConflictMatrix(table.agents, scope, tuple(tuple(row) for row in rows))


def conflict_matrix_for_issue(
    table: SituationTable, theta: WeightVector, issue: int
) -> PairConflictMatrix:
    """Pair conflict of every agent pair on one issue."""
    if not 0 <= issue < table.issue_count:
        raise ValidationError(f"issue index {issue} out of range")
    return _build_matrix(
        table, table.issues[issue], lambda p, q: pair_conflict(table, theta, p, q, issue)
    )


def conflict_matrix_for_set(
    table: SituationTable, theta: WeightVector, omega: WeightVector, strategy: int
) -> PairConflictMatrix:
    """Issue-weighted pair conflict of every agent pair over a strategy."""
    check_strategy(strategy, table.issue_count)
    scope = "{" + ",".join(table.issues[t] for t in iter_indices(strategy)) + "}"
    return _build_matrix(
        table, scope, lambda p, q: pair_conflict_set(table, theta, omega, p, q, strategy)
    )


@dataclass(frozen=True)
class PairTrisection:
    """Unordered agent pairs (i <= j) split into three relations.

    Reflexive pairs carry zero conflict, so they land in the alliance part
    whenever beta_pair >= 0, which is always.  The three parts cover every
    unordered pair.
    """

    alliance: frozenset[tuple[int, int]]
    neutral: frozenset[tuple[int, int]]
    conflict: frozenset[tuple[int, int]]


def pair_trisection(
    matrix: PairConflictMatrix, alpha_pair: Fraction, beta_pair: Fraction
) -> PairTrisection:
    """Three-way split of agent pairs: alliance at or below beta_pair,
    conflict at or above alpha_pair."""
    if not 0 <= beta_pair <= alpha_pair <= 1:
        raise ValidationError("need 0 <= beta_pair <= alpha_pair <= 1")
    alliance, neutral, conflict = set(), set(), set()
    for i in range(matrix.size):
        for j in range(i, matrix.size):
            value = matrix.entries[i][j]
            if value <= beta_pair:
                alliance.add((i, j))
            elif value >= alpha_pair:
                conflict.add((i, j))
            else:
                neutral.add((i, j))
    return PairTrisection(frozenset(alliance), frozenset(neutral), frozenset(conflict))


def nm_issue(table: SituationTable, theta: WeightVector, clique: int, issue: int) -> Fraction:
    """Non-consistency of a clique on one issue, in [0, 1/2].

    Ordered-pair average over the clique; computed from unordered pairs
    since the matrix is symmetric with zero diagonal.
    """
    check_clique(clique, table.agent_count)
    members = tuple(iter_indices(clique))
    total = Fraction(0)
    for a, p in enumerate(members):
        for q in members[a + 1 :]:
            total += pair_conflict(table, theta, p, q, issue)
    value = 2 * total / Fraction(len(members) ** 2)
    if not 0 <= value <= Fraction(1, 2):
        raise InternalError(f"non-consistency degree {value} escaped [0, 1/2]")
    return value


def issue_nonconsistency_profile(
    table: SituationTable, theta: WeightVector, clique: int
) -> tuple[Fraction, ...]:
    """Per-issue non-consistency, computed once for strategy scans."""
    return tuple(nm_issue(table, theta, clique, t) for t in range(table.issue_count))


def nm_strategy(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    strategy: int,
) -> Fraction:
    """Issue-weighted non-consistency of a clique on a strategy."""
    check_strategy(strategy, table.issue_count)
    total = Fraction(0)
    for t in iter_indices(strategy):
        share = conditional_weight(omega, 1 << t, strategy)
        total += share * nm_issue(table, theta, clique, t)
    return total


def classify_clique_n(degree: Fraction, params: ParamSet) -> CliqueState:
    """Alliance at or below beta_n, conflict at or above alpha_n.

    Inverted relative to the consistency side: small non-consistency means
    agreement.
    """
    if not 0 <= degree <= Fraction(1, 2):
        raise ValidationError(f"non-consistency degree {degree} outside [0, 1/2]")
    if degree <= params.beta_n:
        return CliqueState.ALLIANCE
    if degree >= params.alpha_n:
        return CliqueState.CONFLICT
    return CliqueState.NEUTRAL


def issue_trisection_n(
    table: SituationTable, theta: WeightVector, clique: int, params: ParamSet
) -> IssueTrisection:
    """Classify every issue by the clique's non-consistency on it."""
    alliance = neutral = conflict = 0
    for t, degree in enumerate(issue_nonconsistency_profile(table, theta, clique)):
        state = classify_clique_n(degree, params)
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
