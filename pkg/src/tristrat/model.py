"""Core data model for weighted three-way conflict analysis.

A *situation table* records how m agents rate n issues on the three-valued
scale -1 (oppose), 0 (neutral), +1 (support).  Agents and issues both carry
non-negative rational weights.  Weights never need to sum to one: every
derived quantity conditions a weight total on a context, so any global
scaling cancels.

Agent subsets (cliques) and issue subsets (strategies) are represented as
bitmasks over the positional index of the table axis.  Bit ``i`` of a clique
mask selects ``table.agents[i]``; bit ``j`` of a strategy mask selects
``table.issues[j]``.  All arithmetic is exact, using :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyCliqueError,
    EmptyStrategyError,
    SubsetViolationError,
    ValidationError,
    ZeroMassError,
)

__all__ = [
    "Axis",
    "Rating",
    "SituationTable",
    "WeightVector",
    "ParamSet",
    "conditional_weight",
    "coalitions",
    "powers",
    "mask_from_indices",
    "mask_from_ids",
    "indices_of_mask",
    "ids_of_mask",
    "iter_indices",
    "full_mask",
    "popcount",
    "check_clique",
    "check_strategy",
]


class Axis(enum.Enum):
    """The two axes of a situation table."""

    AGENTS = "agents"
    ISSUES = "issues"


class Rating(enum.IntEnum):
    """Three-valued attitude of an agent towards an issue."""

    OPPOSE = -1
    NEUTRAL = 0
    SUPPORT = 1

    @property
    def symbol(self) -> str:
        return {-1: "-", 0: "0", 1: "+"}[int(self)]


# ---------------------------------------------------------------------------
# Bitmask helpers


def mask_from_indices(indices: Iterable[int]) -> int:
    """Build a subset mask from positional indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def iter_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def indices_of_mask(mask: int) -> tuple[int, ...]:
    return tuple(iter_indices(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(size: int) -> int:
    return (1 << size) - 1


def mask_from_ids(ids: Iterable[str], universe: Sequence[str]) -> int:
    """Build a subset mask from identifiers drawn from ``universe``.

    Raises a validation error on unknown or repeated identifiers.
    """
    mask = 0
    for ident in ids:
        try:
            i = universe.index(ident)
        except ValueError:
            raise ValidationError(f"unknown identifier {ident!r}") from None
        bit = 1 << i
        if mask & bit:
            raise ValidationError(f"identifier {ident!r} listed twice")
        mask |= bit
    return mask


def ids_of_mask(mask: int, universe: Sequence[str]) -> tuple[str, ...]:
    return tuple(universe[i] for i in iter_indices(mask))


def _check_subset(mask: int, size: int, what: str) -> None:
    if mask < 0 or mask >> size:
        raise ValidationError(f"{what} mask {mask:#x} is outside the table axis")


def check_clique(mask: int, agent_count: int) -> None:
    """Validate a clique mask: within range and nonempty."""
    _check_subset(mask, agent_count, "clique")
    if mask == 0:
        raise EmptyCliqueError("clique must contain at least one agent")


def check_strategy(mask: int, issue_count: int) -> None:
    """Validate a strategy mask: within range and nonempty."""
    _check_subset(mask, issue_count, "strategy")
    if mask == 0:
        raise EmptyStrategyError("strategy must contain at least one issue")


# ---------------------------------------------------------------------------
# Situation table


@dataclass(frozen=True)
class SituationTable:
    """Immutable m x n table of three-valued ratings.

    ``ratings[i][j]`` is the attitude of ``agents[i]`` towards ``issues[j]``.
    """

    agents: tuple[str, ...]
    issues: tuple[str, ...]
    ratings: tuple[tuple[Rating, ...], ...]

    def __post_init__(self) -> None:
        if not self.agents:
            raise ValidationError("table needs at least one agent")
        if not self.issues:
            raise ValidationError("table needs at least one issue")
        if len(set(self.agents)) != len(self.agents):
            raise ValidationError("duplicate agent identifiers")
        if len(set(self.issues)) != len(self.issues):
            raise ValidationError("duplicate issue identifiers")
        if len(self.ratings) != len(self.agents):
            raise ValidationError("one rating row per agent required")
        for row in self.ratings:
            if len(row) != len(self.issues):
                raise ValidationError("one rating per issue required in every row")
            for value in row:
                if not isinstance(value, Rating):
                    raise ValidationError(f"rating {value!r} is not a Rating")

    @property
    def agent_count(self) -> int:
        return len(self.agents)

    @property
    def issue_count(self) -> int:
        return len(self.issues)

    def rating(self, agent: int, issue: int) -> Rating:
        return self.ratings[agent][issue]

    def agent_index(self, ident: str) -> int:
        try:
            return self.agents.index(ident)
        except ValueError:
            raise ValidationError(f"unknown agent {ident!r}") from None

    def issue_index(self, ident: str) -> int:
        try:
            return self.issues.index(ident)
        except ValueError:
            raise ValidationError(f"unknown issue {ident!r}") from None


# ---------------------------------------------------------------------------
# Weights


@dataclass(frozen=True)
class WeightVector:
    """Non-negative rational weights over one axis of a table.

    The vector must cover every identifier of its axis exactly once and
    carry positive total weight.  Individual weights may be zero.
    """

    axis: Axis
    ids: tuple[str, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.ids) != len(self.values):
            raise ValidationError("one weight per identifier required")
        if len(set(self.ids)) != len(self.ids):
            raise ValidationError("duplicate identifiers in weight vector")
        for ident, value in zip(self.ids, self.values):
            if not isinstance(value, Fraction):
                raise ValidationError(f"weight of {ident!r} is not a Fraction")
            if value < 0:
                raise ValidationError(f"negative weight for {ident!r}")
        if sum(self.values) == 0:
            raise ZeroMassError("weight vector has zero total weight")

    @classmethod
    def uniform(cls, axis: Axis, ids: Sequence[str]) -> "WeightVector":
        """Equal weight on every identifier; the unweighted degenerate case."""
        return cls(axis, tuple(ids), tuple(Fraction(1) for _ in ids))

    @property
    def size(self) -> int:
        return len(self.ids)

    def weight(self, index: int) -> Fraction:
        return self.values[index]

    def mass(self, mask: int) -> Fraction:
        """Total weight of the subset selected by ``mask``."""
        return sum((self.values[i] for i in iter_indices(mask)), Fraction(0))


def conditional_weight(weights: WeightVector, inner: int, context: int) -> Fraction:
    """Weight share of ``inner`` within ``context``.

    ``inner`` must be a subset of ``context`` and the context must carry
    positive total weight.  Conditioning renormalises, so weight vectors
    never need to sum to one.
    """
    _check_subset(context, weights.size, "context")
    if inner & ~context:
        raise SubsetViolationError("inner set is not contained in its context")
    denominator = weights.mass(context)
    if denominator == 0:
        raise ZeroMassError("context has zero total weight")
    return weights.mass(inner) / denominator


# ---------------------------------------------------------------------------
# Coalitions and powers


def coalitions(table: SituationTable, clique: int, issue: int) -> tuple[int, int, int]:
    """Split a clique by its stance on one issue.

    Returns masks ``(supporters, neutrals, opponents)``; they partition the
    clique.
    """
    check_clique(clique, table.agent_count)
    if not 0 <= issue < table.issue_count:
        raise ValidationError(f"issue index {issue} out of range")
    pos = neu = neg = 0
    for i in iter_indices(clique):
        r = table.rating(i, issue)
        if r is Rating.SUPPORT:
            pos |= 1 << i
        elif r is Rating.NEUTRAL:
            neu |= 1 << i
        else:
            neg |= 1 << i
    return pos, neu, neg


def powers(
    table: SituationTable, theta: WeightVector, clique: int, issue: int
) -> tuple[Fraction, Fraction, Fraction]:
    """Weight shares of the supporting, neutral and opposing coalitions.

    The three shares are the conditional weights of the coalitions within
    the clique; they are non-negative and sum to one.
    """
    pos, neu, neg = coalitions(table, clique, issue)
    return (
        conditional_weight(theta, pos, clique),
        conditional_weight(theta, neu, clique),
        conditional_weight(theta, neg, clique),
    )


# ---------------------------------------------------------------------------
# Parameters


def _exact(value: object, name: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"{name} must be exact (int, str or Fraction), not {value!r}")
    try:
        return Fraction(value)  # type: ignore[arg-type]
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValidationError(f"{name} is not a valid rational: {value!r}") from None


@dataclass(frozen=True)
class ParamSet:
    """Thresholds steering ratings, trisections and strategy selection.

    =============  =============================  ==================
    field          role                           admissible range
    =============  =============================  ==================
    mu             support threshold              [0, 1]
    nu             opposition threshold           [-1, 0]
    lam            consistency feasibility        [1/2, 1]
    tau            non-consistency feasibility    [0, 1/2]
    gamma_p        minimum clique share           [0, 1]
    gamma_t        minimum strategy share         [0, 1]
    order_l        strategy cardinality bound     >= 1
    alpha_c        clique/issue alliance (cons.)  beta_c <= alpha_c
    beta_c         clique/issue conflict (cons.)  [1/2, 1]
    alpha_n        clique/issue conflict (ncons)  beta_n <= alpha_n
    beta_n         clique/issue alliance (ncons)  [0, 1]
    alpha_pair     agent-pair conflict            beta_pair <= alpha_pair
    beta_pair      agent-pair alliance            [0, 1]
    =============  =============================  ==================

    Values must be exact rationals; strings such as ``"0.25"`` or ``"3/4"``
    are parsed exactly, floats are rejected.
    """

    mu: Fraction = Fraction(0)
    nu: Fraction = Fraction(0)
    lam: Fraction = Fraction(1, 2)
    tau: Fraction = Fraction(1, 2)
    gamma_p: Fraction = Fraction(0)
    gamma_t: Fraction = Fraction(0)
    order_l: int = 1
    alpha_c: Fraction = Fraction(1)
    beta_c: Fraction = Fraction(1, 2)
    alpha_n: Fraction = Fraction(1)
    beta_n: Fraction = Fraction(0)
    alpha_pair: Fraction = Fraction(1)
    beta_pair: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for f in fields(self):
            if f.name == "order_l":
                continue
            object.__setattr__(self, f.name, _exact(getattr(self, f.name), f.name))
        if not isinstance(self.order_l, int) or isinstance(self.order_l, bool):
            raise ValidationError("order_l must be an integer")
        checks = [
            (Fraction(0) <= self.mu <= 1, "mu must lie in [0, 1]"),
            (Fraction(-1) <= self.nu <= 0, "nu must lie in [-1, 0]"),
            (Fraction(1, 2) <= self.lam <= 1, "lam must lie in [1/2, 1]"),
            (Fraction(0) <= self.tau <= Fraction(1, 2), "tau must lie in [0, 1/2]"),
            (Fraction(0) <= self.gamma_p <= 1, "gamma_p must lie in [0, 1]"),
            (Fraction(0) <= self.gamma_t <= 1, "gamma_t must lie in [0, 1]"),
            (self.order_l >= 1, "order_l must be at least 1"),
            (
                Fraction(1, 2) <= self.beta_c <= self.alpha_c <= 1,
                "need 1/2 <= beta_c <= alpha_c <= 1",
            ),
            (
                Fraction(0) <= self.beta_n <= self.alpha_n <= 1,
                "need 0 <= beta_n <= alpha_n <= 1",
            ),
            (
                Fraction(0) <= self.beta_pair <= self.alpha_pair <= 1,
                "need 0 <= beta_pair <= alpha_pair <= 1",
            ),
        ]
        for ok, message in checks:
            if not ok:
                raise ValidationError(message)
