"""Feasible and optimal strategy families for one bundled dataset.

Enumerates every nonempty issue subset for the configured clique, reports
how many pass each feasibility test, lists the members grouped by
cardinality, and prints the optimal strategies with their degrees, both
over the whole family and restricted to the configured order.
"""

from __future__ import annotations

import argparse

from common import CASE_NAMES, case_config, load_bundle

from tristrat import (
    StrategyKind,
    enumerate_strategies,
    feasible_c,
    feasible_n,
    optimal_c,
    optimal_n,
    popcount,
)
from tristrat.render import format_degree, format_subset


def report(kind: StrategyKind, feasible, issues, params, select, list_all: bool):
    order = params.order_l
    subset = feasible.order_subset(order)
    threshold = f"lambda = {params.lam}" if kind is StrategyKind.CONSISTENCY else f"tau = {params.tau}"
    print(f"\n[{kind.value}] {threshold}")
    print(f"  feasible: {feasible.count}   feasible at order {order}: {subset.count}")
    if list_all:
        by_size: dict[int, list[str]] = {}
        for mask, degree in feasible.strategies:
            label = f"{format_subset(mask, issues)} ({format_degree(degree)})"
            by_size.setdefault(popcount(mask), []).append(label)
        for size in sorted(by_size):
            print(f"  size {size}: {', '.join(by_size[size])}")
    else:
        names = ", ".join(format_subset(mask, issues) for mask in subset.masks())
        print(f"  order-{order} members: {names or '(none)'}")
    for title, family in (("optimal", feasible), (f"optimal at order {order}", subset)):
        best = select(family, len(issues), params)
        winners = ", ".join(format_subset(mask, issues) for mask in best.strategies)
        line = f"  {title}: {winners or '(none)'}"
        if best.extremal_degree is not None:
            line += f" at {format_degree(best.extremal_degree)}"
        print(line)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--case", choices=CASE_NAMES, default="nba")
    parser.add_argument(
        "--kind", choices=("c", "n", "both"), default="both",
        help="which feasibility test to run",
    )
    parser.add_argument(
        "--list", action="store_true",
        help="list every feasible strategy instead of only the order subset",
    )
    parser.add_argument(
        "--workers", type=int, default=None,
        help="worker threads for the scan (default: automatic)",
    )
    args = parser.parse_args(argv)

    bundle = load_bundle(case_config(args.case))
    table, theta, omega = bundle.table, bundle.theta, bundle.omega
    clique, params = bundle.clique, bundle.params
    issues = table.issues

    total = sum(1 for _ in enumerate_strategies(table.issue_count))
    at_order = sum(
        1 for _ in enumerate_strategies(table.issue_count, order=params.order_l)
    )
    print(f"case {args.case}: clique {format_subset(clique, table.agents)}")
    print(f"strategies: {total} nonempty, {at_order} at order <= {params.order_l}")

    if args.kind in ("c", "both"):
        family = feasible_c(
            table, theta, omega, clique, params, workers=args.workers
        )
        report(StrategyKind.CONSISTENCY, family, issues, params, optimal_c, args.list)
    if args.kind in ("n", "both"):
        family = feasible_n(
            table, theta, omega, clique, params, workers=args.workers
        )
        report(
            StrategyKind.NON_CONSISTENCY, family, issues, params, optimal_n, args.list
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
