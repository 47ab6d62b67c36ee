"""Unweighted baseline versus the weighted model on the labour dispute.

For each configured clique this prints both rating vectors side by side
with the issues where they diverge, the per-issue consistency degrees of
the baseline, its full issue ranking with the dominant fixed-order
strategy, and the weighted feasible family with exact degrees.
"""

from __future__ import annotations

import argparse

from common import DATA, load_bundle

from tristrat import (
    feasible_c,
    rating_vector,
    xu_cm_issue,
    xu_feasible_L,
    xu_ranking,
    xu_rating_vector,
)
from tristrat.render import format_degree, format_rating, format_subset


def vector_text(vector) -> str:
    return "(" + ",".join(format_rating(r) for r in vector) + ")"


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.parse_args(argv)

    bundle = load_bundle(DATA / "nba" / "baseline.cfg")
    table, theta, omega = bundle.table, bundle.theta, bundle.omega
    params = bundle.params
    issues = table.issues
    print(
        f"mu = {params.mu}, nu = {params.nu}, lambda = {params.lam},"
        f" order {params.order_l}"
    )

    for clique in bundle.cliques:
        print(f"\nclique {format_subset(clique, table.agents)}")
        base = xu_rating_vector(table, clique)
        ours = rating_vector(table, theta, clique, params)
        divergent = [
            issues[t] for t, (a, b) in enumerate(zip(base, ours)) if a is not b
        ]
        print(f"  baseline ratings: {vector_text(base)}")
        print(f"  weighted ratings: {vector_text(ours)}")
        print(f"  diverging issues: {', '.join(divergent) or '(none)'}")

        cms = ", ".join(
            f"{issues[t]}={format_degree(xu_cm_issue(table, clique, t))}"
            for t in range(table.issue_count)
        )
        print(f"  baseline per-issue consistency: {cms}")

        ranking = xu_ranking(table, clique)
        print(
            "  baseline ranking: "
            + " >= ".join(
                f"{issues[t]} ({format_degree(value)})"
                for t, value in zip(ranking.issues, ranking.degrees)
            )
        )
        dominant = xu_feasible_L(table, clique, params)
        if dominant is None:
            print(f"  no order-{params.order_l} strategy clears lambda")
        else:
            mask, degree = dominant
            ties = ranking.boundary_ties(params.order_l)
            note = ""
            if len(ties) > 1:
                note = " (boundary tie among " + ", ".join(
                    issues[t] for t in ties
                ) + ")"
            print(
                f"  dominant order-{params.order_l} strategy:"
                f" {format_subset(mask, issues)} at {format_degree(degree)}{note}"
            )

        family = feasible_c(table, theta, omega, clique, params)
        print(f"  weighted feasible family ({family.count} strategies):")
        for mask, degree in family.strategies:
            print(f"    {format_subset(mask, issues):<20} {format_degree(degree)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
