"""Parameter sweeps over exact rational grids.

Grids are built from inclusive start/stop/step triples that must divide
exactly; no floating point drift can occur.  Each grid cell re-runs the
engine at the perturbed parameters and records the focus-issue rating and
consistency (for mu/nu sweeps), feasible counts at full and bounded
cardinality, and both optimal sets.  Cells hold exact values; rendering
happens at the edges.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .errors import ValidationError
from .model import ParamSet, Rating, SituationTable, WeightVector
from .consistency import cm_issue, overall_rating
from .engine import (
    FeasibleSet,
    OptimalSet,
    StrategyKind,
    feasible_c,
    feasible_n,
    optimal_c,
    optimal_n,
)

__all__ = ["SweepCell", "SweepGrid", "grid_values", "sweep_mu_nu", "sweep_scalar"]


def grid_values(start: Fraction, stop: Fraction, step: Fraction) -> tuple[Fraction, ...]:
    """Inclusive arithmetic grid; the span must be an exact multiple of step.

    A zero-length grid (start equal to stop) yields the single start value.
    """
    start, stop, step = Fraction(start), Fraction(stop), Fraction(step)
    if start == stop:
        return (start,)
    if step == 0:
        raise ValidationError("step must be nonzero for a non-degenerate grid")
    count = (stop - start) / step
    if count.denominator != 1 or count < 0:
        raise ValidationError(
            f"grid [{start}, {stop}] is not an exact multiple of step {step}"
        )
    return tuple(start + k * step for k in range(int(count) + 1))


@dataclass(frozen=True)
class SweepCell:
    """Engine outcomes at one grid point.

    ``rating`` and ``cm`` describe the focus issue and are only present for
    mu/nu sweeps.  ``counts`` and ``optimal`` are keyed by ``"feasible"``
    and ``"feasible_order"`` respectively ``"optimal"`` and
    ``"optimal_order"``.
    """

    params: ParamSet
    rating: Rating | None
    cm: Fraction | None
    counts: Mapping[str, int]
    optimal: Mapping[str, tuple[int, ...]]


@dataclass(frozen=True)
class SweepGrid:
    """Axes and cells of one sweep; cells are keyed by axis value tuples."""

    axes: tuple[tuple[str, tuple[Fraction, ...]], ...]
    cells: Mapping[tuple[Fraction, ...], SweepCell]


def _cell_outcomes(
    feasible: FeasibleSet, issue_count: int, params: ParamSet, kind: StrategyKind
) -> tuple[Mapping[str, int], Mapping[str, tuple[int, ...]]]:
    select = optimal_c if kind is StrategyKind.CONSISTENCY else optimal_n
    bounded = feasible.order_subset(params.order_l)
    full: OptimalSet = select(feasible, issue_count, params)
    ordered: OptimalSet = select(bounded, issue_count, params)
    counts = {"feasible": feasible.count, "feasible_order": bounded.count}
    optimal = {"optimal": full.strategies, "optimal_order": ordered.strategies}
    return MappingProxyType(counts), MappingProxyType(optimal)


def sweep_mu_nu(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    focus_issue: int,
    base_params: ParamSet,
    mu_values: tuple[Fraction, ...],
    nu_values: tuple[Fraction, ...],
    workers: int | None = None,
) -> SweepGrid:
    """Consistency-side sweep over a mu x nu grid.

    Every cell records the clique's rating and consistency on the focus
    issue plus feasible counts and optimal sets at full and bounded
    cardinality.
    """
    if not 0 <= focus_issue < table.issue_count:
        raise ValidationError(f"issue index {focus_issue} out of range")
    cells: dict[tuple[Fraction, ...], SweepCell] = {}
    for mu in mu_values:
        for nu in nu_values:
            params = replace(base_params, mu=mu, nu=nu)
            feasible = feasible_c(table, theta, omega, clique, params, workers=workers)
            counts, optimal = _cell_outcomes(
                feasible, table.issue_count, params, StrategyKind.CONSISTENCY
            )
            cells[(mu, nu)] = SweepCell(
                params=params,
                rating=overall_rating(table, theta, clique, focus_issue, params),
                cm=cm_issue(table, theta, clique, focus_issue, params),
                counts=counts,
                optimal=optimal,
            )
    return SweepGrid((("mu", tuple(mu_values)), ("nu", tuple(nu_values))), cells)


def sweep_scalar(
    table: SituationTable,
    theta: WeightVector,
    omega: WeightVector,
    clique: int,
    kind: StrategyKind,
    base_params: ParamSet,
    values: tuple[Fraction, ...],
    workers: int | None = None,
) -> SweepGrid:
    """Sweep the feasibility threshold of one kind: lam or tau."""
    name = "lam" if kind is StrategyKind.CONSISTENCY else "tau"
    scan = feasible_c if kind is StrategyKind.CONSISTENCY else feasible_n
    cells: dict[tuple[Fraction, ...], SweepCell] = {}
    for value in values:
        params = replace(base_params, **{name: value})
        feasible = scan(table, theta, omega, clique, params, workers=workers)
        counts, optimal = _cell_outcomes(feasible, table.issue_count, params, kind)
        cells[(value,)] = SweepCell(
            params=params, rating=None, cm=None, counts=counts, optimal=optimal
        )
    return SweepGrid(((name, tuple(values)),), cells)
