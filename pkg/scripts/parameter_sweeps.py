"""Threshold sensitivity sweeps driven by the bundled sweep configs.

Each config declares one sweep: a mu x nu grid that tracks how the rating
and the feasible family on the focus issue respond to the band edges, or a
single lambda or tau axis that tracks how the families grow and shrink.
The defaults run all three sweeps shipped with the labour dispute case.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from common import DATA, load_bundle

from tristrat import StrategyKind, grid_values, parse_rational, sweep_mu_nu, sweep_scalar
from tristrat.render import decimal_string, format_rating, format_subset

DEFAULT_CONFIGS = (
    DATA / "nba" / "sweep_mu_nu.cfg",
    DATA / "nba" / "sweep_lambda.cfg",
    DATA / "nba" / "sweep_tau.cfg",
)


def axis_values(config: dict[str, str], name: str):
    return grid_values(
        parse_rational(config[f"{name}_from"]),
        parse_rational(config[f"{name}_to"]),
        parse_rational(config[f"{name}_step"]),
    )


def winners(masks, issues) -> str:
    return ", ".join(format_subset(mask, issues) for mask in masks) or "(none)"


def run_mu_nu(bundle, workers: int | None) -> None:
    table = bundle.table
    issues = table.issues
    if bundle.focus_issue is None:
        raise SystemExit("the mu x nu sweep needs a focus_issue config key")
    mus = axis_values(bundle.config, "mu")
    nus = axis_values(bundle.config, "nu")
    grid = sweep_mu_nu(
        table, bundle.theta, bundle.omega, bundle.clique,
        bundle.focus_issue, bundle.params, mus, nus, workers=workers,
    )
    order = bundle.params.order_l
    print(f"focus issue {issues[bundle.focus_issue]}, order {order}")
    header = f"{'mu':>5} {'nu':>5}  rating {'cm':>6} {'FS':>4} {'FS_L':>4}  optimal"
    print(header)
    for mu in mus:
        for nu in nus:
            cell = grid.cells[(mu, nu)]
            print(
                f"{decimal_string(mu, 1):>5} {decimal_string(nu, 1):>5}"
                f"  {format_rating(cell.rating):>6} {decimal_string(cell.cm, 2):>6}"
                f" {cell.counts['feasible']:>4} {cell.counts['feasible_order']:>4}"
                f"  {winners(cell.optimal['optimal_order'], issues)}"
            )


def run_scalar(bundle, name: str, workers: int | None) -> None:
    issues = bundle.table.issues
    kind = (
        StrategyKind.CONSISTENCY if name == "lambda" else StrategyKind.NON_CONSISTENCY
    )
    values = axis_values(bundle.config, name)
    grid = sweep_scalar(
        bundle.table, bundle.theta, bundle.omega, bundle.clique,
        kind, bundle.params, values, workers=workers,
    )
    order = bundle.params.order_l
    print(f"{name} sweep, order {order}")
    print(f"{name:>6} {'FS':>4} {'FS_L':>4}  optimal / optimal at order {order}")
    for value in values:
        cell = grid.cells[(value,)]
        print(
            f"{decimal_string(value, 2):>6}"
            f" {cell.counts['feasible']:>4} {cell.counts['feasible_order']:>4}"
            f"  {winners(cell.optimal['optimal'], issues)}"
            f" / {winners(cell.optimal['optimal_order'], issues)}"
        )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "configs", nargs="*", type=Path, default=list(DEFAULT_CONFIGS),
        help="sweep config files (default: the three bundled labour sweeps)",
    )
    parser.add_argument(
        "--workers", type=int, default=None,
        help="worker threads per scan (default: automatic)",
    )
    args = parser.parse_args(argv)

    for path in args.configs:
        bundle = load_bundle(path)
        sweep_name = bundle.config.get("sweep")
        print(f"== {path} ==")
        if sweep_name == "mu_nu":
            run_mu_nu(bundle, args.workers)
        elif sweep_name in ("lambda", "tau"):
            run_scalar(bundle, sweep_name, args.workers)
        else:
            raise SystemExit(f"{path}: config key 'sweep' must be mu_nu, lambda, or tau")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
