"""Strategy enumeration and feasible / optimal strategy selection.

Strategies are nonempty issue subsets.  Enumeration walks them in canonical
order (ascending cardinality, then ascending bitmask value) using Gosper's
hack per cardinality class, so results are deterministic and reproducible.
Full enumeration is capped at 24 issues by default; larger tables need an
explicit override or a cardinality bound.

A clique may select strategies only when it passes the size gate
#G / #P >= gamma_p; selection on a gated-out clique raises, which keeps the
failure distinct from an empty feasible set.  Optimal strategies are the
extremal feasible strategies among those passing the strategy size gate
#J / #T >= gamma_t; an empty optimal set is a legitimate outcome.

Scans honour the ``TRISTRAT_THREADS`` environment variable by partitioning
the enumeration into contiguous chunks handled by a thread pool.  Chunks are
merged in order, so output is identical for any worker count.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .errors import CapacityError, GateError, ValidationError, ZeroMassError
from .model import (
    Axis,
    ParamSet,
    SituationTable,
    WeightVector,
    check_clique,
    iter_indices,
    popcount,
)
from .consistency import issue_consistency_profile
from .conflict import issue_nonconsistency_profile

__all__ = [
    "DEFAULT_ISSUE_CAP",
    "THREADS_ENV_VAR",
    "StrategyKind",
    "FeasibleSet",
    "OptimalSet",
    "enumerate_strategies",
    "clique_gate",
    "feasible_c",
    "feasible_n",
    "optimal_c",
    "optimal_n",
    "worker_count",
]

DEFAULT_ISSUE_CAP = 24
THREADS_ENV_VAR = "TRISTRAT_THREADS"


class StrategyKind(enum.Enum):
    """Which measure drives feasibility: consistency or non-consistency."""

    CONSISTENCY = "c"
    NON_CONSISTENCY = "n"


def _k_subsets(n: int, k: int) -> Iterator[int]:
    # Gosper's hack: all k-subsets of n bits in ascending mask order.
    limit = 1 << n
    mask = (1 << k) - 1
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def enumerate_strategies(
    issue_count: int,
    order: int | None = None,
    cap: int = DEFAULT_ISSUE_CAP,
    allow_over_cap: bool = False,
) -> Iterator[int]:
    """Yield strategy masks in canonical order.

    With ``order`` set, only strategies of that exact cardinality are
    produced.  Without it, all nonempty subsets are walked, which requires
    ``issue_count`` at or below the cap unless explicitly overridden.
    """
    if issue_count < 1:
        raise ValidationError("need at least one issue")
    if order is not None:
        if not 1 <= order <= issue_count:
            raise ValidationError(f"order must lie in [1, {issue_count}]")
        yield from _k_subsets(issue_count, order)
        return
    if issue_count > cap and not allow_over_cap:
        raise CapacityError(
            f"{issue_count} issues exceed the enumeration cap of {cap}; "
            "bound the cardinality or override explicitly"
        )
    for k in range(1, issue_count + 1):
        yield from _k_subsets(issue_count, k)


def clique_gate(clique: int, agent_count: int, gamma_p: Fraction) -> bool:
    """Whether the clique meets the minimum relative size gamma_p."""
    check_clique(clique, agent_count)
    return Fraction(popcount(clique), agent_count) >= gamma_p


def worker_count(workers: int | None = None) -> int:
    """Resolve the scan worker count, consulting TRISTRAT_THREADS."""
    if workers is None:
        raw = os.environ.get(THREADS_ENV_VAR, "1")
        try:
            workers = int(raw)
        except ValueError:
            raise ValidationError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from None
    if workers < 1:
        raise ValidationError("worker count must be at least 1")
    return workers


@dataclass(frozen=True)
class FeasibleSet:
    """Feasible strategies of one clique, with their degrees.

    Entries are (strategy mask, degree) in canonical order.  Degrees are the
    exact measure values that cleared the threshold.
    """

    kind: StrategyKind
    clique: int
    params: ParamSet
    strategies: tuple[tuple[int, Fraction], ...]

    @property
    def count(self) -> int:
        return len(self.strategies)

    def masks(self) -> tuple[int, ...]:
        return tuple(mask for mask, _ in self.strategies)

    def degree_of(self, mask: int) -> Fraction:
        for candidate, degree in self.strategies:
            if candidate == mask:
                return degree
        raise ValidationError(f"strategy {mask:#x} is not in the feasible set")

    def order_subset(self, order: int) -> "FeasibleSet":
        """Restrict to strategies of one exact cardinality."""
        if order < 1:
            raise ValidationError("order must be at least 1")
        kept = tuple(entry for entry in self.strategies if popcount(entry[0]) == order)
        return replace(self, strategies=kept)


@dataclass(frozen=True)
class OptimalSet:
    """All extremal feasible strategies; possibly none."""

    kind: StrategyKind
    strategies: tuple[int, ...]
    extremal_degree: Fraction | None

    def __post_init__(self) -> None:
        if (self.extremal_degree is None) != (len(self.strategies) == 0):
            raise ValidationError("extremal degree must be present exactly for nonempty sets")

    @property
    def is_empty(self) -> bool:
        return not self.strategies


def _chunks(items: Sequence[int], parts: int) -> list[Sequence[int]]:
    size, extra = divmod(len(items), parts)
    out = []
    start = 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        if start < stop:
            out.append(items[start:stop])
        start = stop
    return out


def _scan(
    table: SituationTable,
    omega: WeightVector,
    per_issue: Sequence[Fraction],
    keep: Callable[[Fraction], bool],
    order: int | None,
    cap: int,
    allow_over_cap: bool,
    workers: int | None,
) -> tuple[tuple[int, Fraction], ...]:
    if omega.axis is not Axis.ISSUES:
        raise ValidationError("issue weights required for strategy scans")
    weighted = tuple(omega.weight(t) * per_issue[t] for t in range(table.issue_count))

    def degree(mask: int) -> Fraction:
        numerator = Fraction(0)
        denominator = Fraction(0)
        for t in iter_indices(mask):
            numerator += weighted[t]
            denominator += omega.weight(t)
        if denominator == 0:
            raise ZeroMassError("strategy carries zero total weight")
        return numerator / denominator

    def scan_one(masks: Sequence[int]) -> list[tuple[int, Fraction]]:
        out = []
        for mask in masks:
            value = degree(mask)
            if keep(value):
                out.append((mask, value))
        return out

    resolved = worker_count(workers)
    masks = enumerate_strategies(table.issue_count, order, cap, allow_over_cap)
    if resolved == 1:
        return tuple(scan_one(list(masks)))
    chunks = _chunks(list(masks), resolved)
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(scan_one, chunks))
    return tuple(entry for part in parts for entry in part)


def _require_gate(table: SituationTable, clique: int, params: ParamSet) -> None:
    if not clique_gate(clique, table.agent_count, params.gamma_p):
        raise GateError(
            f"clique holds {popcount(clique)} of {table.agent_count} agents, "
            f"below the gamma_p gate of {params.gamma_p}"
        )


def feasible_c(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    params: ParamSet,
    order: int | None = None,
    cap: int = DEFAULT_ISSUE_CAP,
    allow_over_cap: bool = False,
    workers: int | None = None,
) -> FeasibleSet:
    """Strategies whose consistency degree reaches lam, in canonical order."""
    _require_gate(table, clique, params)
    profile = issue_consistency_profile(table, theta, clique, params)
    per_issue = tuple(degree for _, degree in profile)
    entries = _scan(
        table, omega, per_issue, lambda d: d >= params.lam, order, cap, allow_over_cap, workers
    )
    return FeasibleSet(StrategyKind.CONSISTENCY, clique, params, entries)


def feasible_n(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    params: ParamSet,
    order: int | None = None,
    cap: int = DEFAULT_ISSUE_CAP,
    allow_over_cap: bool = False,
    workers: int | None = None,
) -> FeasibleSet:
    """Strategies whose non-consistency degree stays within tau."""
    _require_gate(table, clique, params)
    per_issue = issue_nonconsistency_profile(table, theta, clique)
    entries = _scan(
        table, omega, per_issue, lambda d: d <= params.tau, order, cap, allow_over_cap, workers
    )
    return FeasibleSet(StrategyKind.NON_CONSISTENCY, clique, params, entries)


def _optimal(
    feasible: FeasibleSet,
    issue_count: int,
    params: ParamSet,
    kind: StrategyKind,
    pick: Callable[[Sequence[Fraction]], Fraction],
) -> OptimalSet:
    if feasible.kind is not kind:
        raise ValidationError(
            f"feasible set of kind {feasible.kind.value!r} passed to the "
            f"{kind.value!r} selector"
        )
    candidates = [
        (mask, degree)
        for mask, degree in feasible.strategies
        if Fraction(popcount(mask), issue_count) >= params.gamma_t
    ]
    if not candidates:
        return OptimalSet(kind, (), None)
    best = pick([degree for _, degree in candidates])
    winners = tuple(mask for mask, degree in candidates if degree == best)
    return OptimalSet(kind, winners, best)


def optimal_c(feasible: FeasibleSet, issue_count: int, params: ParamSet) -> OptimalSet:
    """Highest-consistency strategies above the gamma_t size gate."""
    return _optimal(feasible, issue_count, params, StrategyKind.CONSISTENCY, max)


def optimal_n(feasible: FeasibleSet, issue_count: int, params: ParamSet) -> OptimalSet:
    """Lowest non-consistency strategies above the gamma_t size gate."""
    return _optimal(feasible, issue_count, params, StrategyKind.NON_CONSISTENCY, min)
