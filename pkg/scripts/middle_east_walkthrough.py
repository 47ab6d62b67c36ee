"""Step-by-step tour of the Middle East mediation dataset.

Walks the configured four-agent clique through every measure the library
exposes: conditional weights, per-issue power triples and ratings,
consistency and non-consistency degrees, the pairwise conflict structure
on the focus issue, both issue trisections, and finally the feasible and
optimal strategy families on each side.
"""

from __future__ import annotations

import argparse

from common import case_config, load_bundle

from tristrat import (
    cm_issue,
    conditional_weight,
    conflict_matrix_for_issue,
    feasible_c,
    feasible_n,
    issue_trisection_c,
    issue_trisection_n,
    iter_indices,
    nm_issue,
    optimal_c,
    optimal_n,
    overall_rating,
    pair_trisection,
    popcount,
    powers,
)
from tristrat.render import format_degree, format_rating, format_subset


def print_feasible(feasible, issues, params, select):
    for mask, degree in feasible.strategies:
        print(f"  {format_subset(mask, issues):<24} {format_degree(degree)}")
    subset = feasible.order_subset(params.order_l)
    names = ", ".join(format_subset(mask, issues) for mask in subset.masks())
    print(f"  order-{params.order_l} members: {names or '(none)'}")
    best = select(feasible, len(issues), params)
    winners = ", ".join(format_subset(mask, issues) for mask in best.strategies)
    print(f"  optimal: {winners or '(none)'}", end="")
    if best.extremal_degree is not None:
        print(f" at {format_degree(best.extremal_degree)}", end="")
    print()


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.parse_args(argv)

    bundle = load_bundle(case_config("middle_east"))
    table, theta, omega = bundle.table, bundle.theta, bundle.omega
    clique, params = bundle.clique, bundle.params
    issues = table.issues

    members = tuple(iter_indices(clique))
    names = format_subset(clique, table.agents)
    print(f"clique {names} ({popcount(clique)} of {table.agent_count} agents)")
    print("conditional weights inside the clique:")
    for p in members:
        share = conditional_weight(theta, 1 << p, clique)
        print(f"  {table.agents[p]}: {format_degree(share)}")

    print("\nper-issue measures:")
    print(f"  {'issue':<6} {'support':>9} {'neutral':>9} {'oppose':>9}"
          f"  rating {'cm':>9} {'nm':>9}")
    for t in range(table.issue_count):
        rho = powers(table, theta, clique, t)
        rating = overall_rating(table, theta, clique, t, params)
        cm = cm_issue(table, theta, clique, t, params)
        nm = nm_issue(table, theta, clique, t)
        cells = " ".join(f"{format_degree(part):>9}" for part in rho)
        print(f"  {issues[t]:<6} {cells}  {format_rating(rating):>6}"
              f" {format_degree(cm):>9} {format_degree(nm):>9}")

    focus = bundle.focus_issue if bundle.focus_issue is not None else 0
    print(f"\npair conflicts on {issues[focus]}:")
    matrix = conflict_matrix_for_issue(table, theta, focus)
    for p in range(table.agent_count):
        for q in range(p + 1, table.agent_count):
            value = matrix.entries[p][q]
            print(f"  ({table.agents[p]},{table.agents[q]}): {format_degree(value)}")
    tri = pair_trisection(matrix, params.alpha_pair, params.beta_pair)
    for label, pairs in (
        ("alliance", tri.alliance),
        ("neutral", tri.neutral),
        ("conflict", tri.conflict),
    ):
        text = ",".join(
            f"({table.agents[p]},{table.agents[q]})"
            for p, q in sorted(pairs)
            if p != q
        )
        print(f"  {label} pairs: {text or '(none)'}")

    for label, tri_fn in (
        ("consistency", issue_trisection_c),
        ("non-consistency", issue_trisection_n),
    ):
        split = tri_fn(table, theta, clique, params)
        print(f"\nissue trisection by {label}:")
        for part, mask in (
            ("alliance", split.alliance),
            ("neutral", split.neutral),
            ("conflict", split.conflict),
        ):
            print(f"  {part}: {format_subset(mask, issues)}")

    print(f"\nfeasible strategies, consistency side (lambda = {params.lam}):")
    print_feasible(
        feasible_c(table, theta, omega, clique, params), issues, params, optimal_c
    )
    print(f"\nfeasible strategies, non-consistency side (tau = {params.tau}):")
    print_feasible(
        feasible_n(table, theta, omega, clique, params), issues, params, optimal_n
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
