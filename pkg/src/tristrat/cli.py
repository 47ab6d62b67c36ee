"""Command line front end.

Four subcommands: ``analyze`` reports per-issue measures and trisections for
one clique, ``strategies`` enumerates feasible and optimal strategies,
``sweep`` runs parameter sweeps from a config file, and ``baseline-xu`` runs
the unweighted baseline side by side with the weighted model.

Runs are configured by a flat ``key = value`` config file (``#`` starts a
comment) plus command line overrides.  ``--json PATH`` additionally writes a
machine-readable document with exact numerator/denominator pairs; its bytes
are independent of the ``TRISTRAT_THREADS`` worker count.

Exit codes: 0 success, 2 validation failure, 3 enumeration capacity
exceeded, 4 clique below the selection gate.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields
from fractions import Fraction
from math import comb
from pathlib import Path

from .errors import EXIT_VALIDATION, TristratError, ValidationError
from .model import (
    Axis,
    ParamSet,
    SituationTable,
    WeightVector,
    full_mask,
    ids_of_mask,
    iter_indices,
    mask_from_ids,
    popcount,
)
from .tableio import load_situation_table, load_weights, parse_rational
from .consistency import (
    IssueTrisection,
    classify_clique_c,
    cm_strategy,
    issue_consistency_profile,
    issue_trisection_c,
    sa_clique,
)
from .conflict import (
    classify_clique_n,
    conflict_matrix_for_issue,
    issue_nonconsistency_profile,
    issue_trisection_n,
    nm_strategy,
    pair_trisection,
)
from .engine import (
    DEFAULT_ISSUE_CAP,
    FeasibleSet,
    StrategyKind,
    feasible_c,
    feasible_n,
    optimal_c,
    optimal_n,
)
from .baseline import xu_cm_issue, xu_feasible_L, xu_ranking, xu_rating_vector
from .model import powers as clique_powers
from .render import decimal_string, degree_json, format_degree, format_subset
from .sensitivity import SweepGrid, grid_values, sweep_mu_nu, sweep_scalar

_PARAM_KEYS = {
    "mu": "mu",
    "nu": "nu",
    "lambda": "lam",
    "tau": "tau",
    "gamma_p": "gamma_p",
    "gamma_t": "gamma_t",
    "L": "order_l",
    "alpha_c": "alpha_c",
    "beta_c": "beta_c",
    "alpha_n": "alpha_n",
    "beta_n": "beta_n",
    "alpha_pair": "alpha_pair",
    "beta_pair": "beta_pair",
}
_GRID_KEYS = {
    f"{name}_{part}" for name in ("mu", "nu", "lambda", "tau") for part in ("from", "to", "step")
}
_CONFIG_KEYS = (
    {"table", "agent_weights", "issue_weights", "clique", "cliques", "focus_issue", "kind", "sweep"}
    | set(_PARAM_KEYS)
    | _GRID_KEYS
)


def read_config(path: Path) -> dict[str, str]:
    """Parse a flat key = value config file."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"{path}: line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ValidationError(f"{path}: line {lineno}: unknown key {key!r}")
        if key in values:
            raise ValidationError(f"{path}: line {lineno}: key {key!r} repeated")
        if not value:
            raise ValidationError(f"{path}: line {lineno}: empty value for {key!r}")
        values[key] = value
    return values


def _split_ids(text: str) -> tuple[str, ...]:
    parts = tuple(part.strip() for part in text.split(","))
    if any(not part for part in parts):
        raise ValidationError(f"malformed identifier list: {text!r}")
    return parts


@dataclass
class RunSetup:
    """Everything a subcommand needs, resolved from config plus flags."""

    table: SituationTable
    theta: WeightVector
    omega: WeightVector
    theta_source: str
    omega_source: str
    params: ParamSet
    clique: int | None
    cliques: tuple[int, ...]
    focus_issue: int | None
    kind: str
    config: dict[str, str]
    allow_over_cap: bool
    order_given: bool
    self_check: bool


def _resolve_path(value: str, base: Path | None) -> Path:
    path = Path(value)
    if not path.is_absolute() and base is not None:
        path = base / path
    return path


def build_setup(args: argparse.Namespace) -> RunSetup:
    config: dict[str, str] = {}
    base: Path | None = None
    if args.config:
        config_path = Path(args.config)
        config = read_config(config_path)
        base = config_path.parent

    table_ref = args.table or config.get("table")
    if table_ref is None:
        raise ValidationError("no table given; use --table or the 'table' config key")
    table_path = _resolve_path(table_ref, None if args.table else base)
    with open(table_path, encoding="utf-8") as stream:
        table = load_situation_table(stream)

    def weights_for(flag: str | None, key: str, axis: Axis, ids: tuple[str, ...]):
        ref = flag or config.get(key)
        if ref is None:
            return WeightVector.uniform(axis, ids), "uniform"
        path = _resolve_path(ref, None if flag else base)
        with open(path, encoding="utf-8") as stream:
            return load_weights(stream, axis, ids), str(path)

    theta, theta_source = weights_for(
        args.agent_weights, "agent_weights", Axis.AGENTS, table.agents
    )
    omega, omega_source = weights_for(
        args.issue_weights, "issue_weights", Axis.ISSUES, table.issues
    )

    kwargs: dict[str, object] = {}
    for key, field in _PARAM_KEYS.items():
        if key in config:
            if field == "order_l":
                try:
                    kwargs[field] = int(config[key])
                except ValueError:
                    raise ValidationError(f"config key L must be an integer") from None
            else:
                kwargs[field] = parse_rational(config[key], where=f"config key {key}")
    order_flag = getattr(args, "order", None)
    if order_flag is not None:
        kwargs["order_l"] = order_flag
    params = ParamSet(**kwargs)  # type: ignore[arg-type]
    if params.order_l > table.issue_count:
        raise ValidationError(
            f"order {params.order_l} exceeds the {table.issue_count} issues of the table"
        )

    clique_ref = args.clique or config.get("clique")
    clique = mask_from_ids(_split_ids(clique_ref), table.agents) if clique_ref else None

    cliques: tuple[int, ...] = ()
    if "cliques" in config:
        cliques = tuple(
            mask_from_ids(_split_ids(part), table.agents)
            for part in config["cliques"].split(";")
            if part.strip()
        )

    focus_ref = config.get("focus_issue")
    focus_issue = table.issue_index(focus_ref) if focus_ref else None

    kind = getattr(args, "kind", None) or config.get("kind", "both")
    if kind not in ("c", "n", "both"):
        raise ValidationError(f"kind must be 'c', 'n' or 'both', got {kind!r}")

    return RunSetup(
        table=table,
        theta=theta,
        omega=omega,
        theta_source=theta_source,
        omega_source=omega_source,
        params=params,
        clique=clique,
        cliques=cliques,
        focus_issue=focus_issue,
        kind=kind,
        config=config,
        allow_over_cap=getattr(args, "max_issues_override", False),
        order_given=order_flag is not None or "L" in config,
        self_check=getattr(args, "self_check", False),
    )


def _require_clique(setup: RunSetup) -> int:
    if setup.clique is None:
        raise ValidationError("no clique given; use --clique or the 'clique' config key")
    return setup.clique


# ---------------------------------------------------------------------------
# Shared rendering


def _aligned(headers: tuple[str, ...], rows: list[tuple[str, ...]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return lines


def _params_json(params: ParamSet) -> dict:
    out: dict[str, object] = {}
    for f in fields(params):
        value = getattr(params, f.name)
        out[f.name] = value if f.name == "order_l" else degree_json(value)
    return out


def _trisection_json(trisection: IssueTrisection, issues: tuple[str, ...]) -> dict:
    return {
        "alliance": list(ids_of_mask(trisection.alliance, issues)),
        "neutral": list(ids_of_mask(trisection.neutral, issues)),
        "conflict": list(ids_of_mask(trisection.conflict, issues)),
    }


def _common_json(command: str, setup: RunSetup) -> dict:
    return {
        "command": command,
        "agents": list(setup.table.agents),
        "issues": list(setup.table.issues),
        "agent_weights": setup.theta_source,
        "issue_weights": setup.omega_source,
        "params": _params_json(setup.params),
    }


def _strategy_entries_json(setup: RunSetup, entries) -> list[dict]:
    return [
        {
            "strategy": list(ids_of_mask(mask, setup.table.issues)),
            "degree": degree_json(degree),
        }
        for mask, degree in entries
    ]


def _optimal_json(setup: RunSetup, optimal) -> dict:
    return {
        "strategies": [list(ids_of_mask(m, setup.table.issues)) for m in optimal.strategies],
        "degree": None if optimal.extremal_degree is None else degree_json(optimal.extremal_degree),
    }


# ---------------------------------------------------------------------------
# analyze


def cmd_analyze(setup: RunSetup) -> tuple[list[str], dict]:
    table, theta, omega, params = setup.table, setup.theta, setup.omega, setup.params
    clique = _require_clique(setup)
    profile = issue_consistency_profile(table, theta, clique, params)
    nm_profile = issue_nonconsistency_profile(table, theta, clique)
    everything = full_mask(table.issue_count)
    cm_all = cm_strategy(table, theta, omega, clique, everything, params)
    nm_all = nm_strategy(table, theta, omega, clique, everything)
    state_c = classify_clique_c(cm_all, params)
    state_n = classify_clique_n(nm_all, params)
    tri_c = issue_trisection_c(table, theta, clique, params)
    tri_n = issue_trisection_n(table, theta, clique, params)

    rows = []
    issues_report = []
    for t in range(table.issue_count):
        pos, neu, neg = clique_powers(table, theta, clique, t)
        sa_pos = sa_clique(table, theta, clique, t, 1)
        sa_neg = sa_clique(table, theta, clique, t, -1)
        rating, cm = profile[t]
        nm = nm_profile[t]
        rows.append(
            (
                table.issues[t],
                format_degree(pos),
                format_degree(neu),
                format_degree(neg),
                format_degree(sa_pos),
                format_degree(sa_neg),
                rating.symbol,
                format_degree(cm),
                decimal_string(nm),
            )
        )
        issues_report.append(
            {
                "issue": table.issues[t],
                "powers": {
                    "support": degree_json(pos),
                    "neutral": degree_json(neu),
                    "oppose": degree_json(neg),
                },
                "sa": {"support": degree_json(sa_pos), "oppose": degree_json(sa_neg)},
                "rating": rating.symbol,
                "cm": degree_json(cm),
                "nm": degree_json(nm),
            }
        )

    lines = [
        f"clique: {format_subset(clique, table.agents)}"
        f" ({popcount(clique)} of {table.agent_count} agents)",
        f"agent weights: {setup.theta_source}",
        f"issue weights: {setup.omega_source}",
        "",
    ]
    lines += _aligned(
        ("issue", "rho+", "rho0", "rho-", "sa+", "sa-", "rating", "cm", "nm"), rows
    )
    lines += [
        "",
        f"rating vector: ({','.join(r.symbol for r, _ in profile)})",
        f"clique state over all issues: consistency {state_c.value}"
        f" (degree {format_degree(cm_all)}),"
        f" non-consistency {state_n.value} (degree {decimal_string(nm_all)})",
        "issue trisection by consistency:"
        f" alliance={format_subset(tri_c.alliance, table.issues)}"
        f" neutral={format_subset(tri_c.neutral, table.issues)}"
        f" conflict={format_subset(tri_c.conflict, table.issues)}",
        "issue trisection by non-consistency:"
        f" alliance={format_subset(tri_n.alliance, table.issues)}"
        f" neutral={format_subset(tri_n.neutral, table.issues)}"
        f" conflict={format_subset(tri_n.conflict, table.issues)}",
    ]

    doc = _common_json("analyze", setup)
    doc["clique"] = list(ids_of_mask(clique, table.agents))
    doc["issues_report"] = issues_report
    doc["rating_vector"] = [r.symbol for r, _ in profile]
    doc["clique_state"] = {
        "consistency": {"state": state_c.value, "degree": degree_json(cm_all)},
        "non_consistency": {"state": state_n.value, "degree": degree_json(nm_all)},
    }
    doc["issue_trisection"] = {
        "consistency": _trisection_json(tri_c, table.issues),
        "non_consistency": _trisection_json(tri_n, table.issues),
    }

    if setup.focus_issue is not None:
        t = setup.focus_issue
        matrix = conflict_matrix_for_issue(table, theta, t)
        split = pair_trisection(matrix, params.alpha_pair, params.beta_pair)
        lines += ["", f"pair conflict on {table.issues[t]}:"]
        header = ("",) + table.agents
        matrix_rows = [
            (table.agents[p],) + tuple(format_degree(v) for v in matrix.entries[p])
            for p in range(table.agent_count)
        ]
        lines += _aligned(header, matrix_rows)

        def pair_names(pairs):
            return sorted(f"({table.agents[i]},{table.agents[j]})" for i, j in pairs)

        lines.append(
            f"pair trisection: alliance={','.join(pair_names(split.alliance)) or '-'}"
            f" neutral={','.join(pair_names(split.neutral)) or '-'}"
            f" conflict={','.join(pair_names(split.conflict)) or '-'}"
        )
        doc["pair_conflict"] = {
            "issue": table.issues[t],
            "matrix": [[degree_json(v) for v in row] for row in matrix.entries],
            "trisection": {
                part: sorted(
                    [table.agents[i], table.agents[j]] for i, j in getattr(split, part)
                )
                for part in ("alliance", "neutral", "conflict")
            },
        }

    if setup.self_check:
        lines.append(_self_check_analyze(setup, clique, profile, nm_profile))
    return lines, doc


def _self_check_analyze(setup, clique, profile, nm_profile) -> str:
    from . import oracle

    table, theta, params = setup.table, setup.theta, setup.params
    checks = 0
    for t in range(table.issue_count):
        rating, cm = profile[t]
        reports = [
            oracle.compare(
                f"rating[{t}]",
                rating,
                oracle.oracle_overall_rating(table, theta, clique, t, params),
            ),
            oracle.compare(
                f"cm[{t}]", cm, oracle.oracle_cm_issue(table, theta, clique, t, params)
            ),
            oracle.compare(
                f"nm[{t}]", nm_profile[t], oracle.oracle_nm_issue(table, theta, clique, t)
            ),
        ]
        for report in reports:
            checks += 1
            if not report.equal:
                raise TristratError(
                    f"self-check failed on {report.quantity}: "
                    f"engine {report.engine} vs reference {report.oracle}"
                )
    return f"self-check: {checks} comparisons against the reference path, all exact"


# ---------------------------------------------------------------------------
# strategies


def cmd_strategies(setup: RunSetup, optimal_only: bool) -> tuple[list[str], dict]:
    table, theta, omega, params = setup.table, setup.theta, setup.omega, setup.params
    clique = _require_clique(setup)
    n = table.issue_count
    order = params.order_l
    bounded_only = n > DEFAULT_ISSUE_CAP and not setup.allow_over_cap and setup.order_given
    doc = _common_json("strategies", setup)
    doc["clique"] = list(ids_of_mask(clique, table.agents))
    doc["order"] = order
    counts = {"st_order": comb(n, order)}
    lines = [f"clique: {format_subset(clique, table.agents)}"]
    if bounded_only:
        lines.append(
            f"{n} issues exceed the full-enumeration cap of {DEFAULT_ISSUE_CAP};"
            f" scanning order-{order} strategies only"
        )
        lines.append(f"strategies of order {order}: {counts['st_order']}")
    else:
        counts["st"] = (1 << n) - 1
        lines.append(f"strategies: {counts['st']} total, {counts['st_order']} of order {order}")

    kinds = {"c": (StrategyKind.CONSISTENCY,), "n": (StrategyKind.NON_CONSISTENCY,)}.get(
        setup.kind, (StrategyKind.CONSISTENCY, StrategyKind.NON_CONSISTENCY)
    )
    for kind in kinds:
        if kind is StrategyKind.CONSISTENCY:
            scan = feasible_c
            select, label, key, show = optimal_c, "consistency", "fs_c", format_degree
        else:
            scan = feasible_n
            select, label, key, show = optimal_n, "non-consistency", "fs_n", decimal_string
        section: dict[str, object] = {}
        lines.append("")
        if bounded_only:
            bounded = scan(table, theta, omega, clique, params, order=order)
            fs = None
            best = None
            best_bounded = select(bounded, n, params)
            counts[f"{key}_order"] = bounded.count
            lines.append(f"[{label}] feasible of order {order}: {bounded.count}")
        else:
            fs = scan(table, theta, omega, clique, params, allow_over_cap=setup.allow_over_cap)
            bounded = fs.order_subset(order)
            best = select(fs, n, params)
            best_bounded = select(bounded, n, params)
            counts[key] = fs.count
            counts[f"{key}_order"] = bounded.count
            lines.append(f"[{label}] feasible: {fs.count}, of order {order}: {bounded.count}")
        if not optimal_only:
            shown = fs if fs is not None else bounded
            rows = [
                (format_subset(mask, table.issues), show(degree))
                for mask, degree in shown.strategies
            ]
            lines += _aligned(("strategy", "degree"), rows) if rows else ["(none)"]
            if fs is not None:
                section["feasible"] = _strategy_entries_json(setup, fs.strategies)
            section["feasible_order"] = _strategy_entries_json(setup, bounded.strategies)
        for tag, chosen in (("optimal", best), (f"optimal of order {order}", best_bounded)):
            if chosen is None:
                continue
            rendered = (
                " ".join(format_subset(m, table.issues) for m in chosen.strategies)
                if chosen.strategies
                else "(none)"
            )
            degree_text = (
                "" if chosen.extremal_degree is None else f" degree {show(chosen.extremal_degree)}"
            )
            lines.append(f"{tag}: {rendered}{degree_text}")
        if best is not None:
            section["optimal"] = _optimal_json(setup, best)
        section["optimal_order"] = _optimal_json(setup, best_bounded)
        doc["consistency" if kind is StrategyKind.CONSISTENCY else "non_consistency"] = section

        if setup.self_check and fs is not None and best is not None:
            lines.append(_self_check_strategies(setup, clique, kind, fs, best))

    doc["counts"] = counts
    count_text = "counts:"
    if "st" in counts:
        count_text += f" ST={counts['st']}"
    count_text += f" ST_{order}={counts['st_order']}"
    for key, tag in (("fs_c", "FS_C"), ("fs_n", "FS_N")):
        if key in counts:
            count_text += f" {tag}={counts[key]}"
        if f"{key}_order" in counts:
            count_text += f" {tag}_{order}={counts[f'{key}_order']}"
    lines.append("")
    lines.append(count_text)
    return lines, doc


def _self_check_strategies(setup, clique, kind, fs: FeasibleSet, best) -> str:
    from . import oracle

    table, theta, omega, params = setup.table, setup.theta, setup.omega, setup.params
    expected = oracle.oracle_feasible(table, theta, omega, clique, params, kind)
    if set(fs.masks()) != expected:
        raise TristratError(f"self-check failed: feasible sets differ for kind {kind.value!r}")
    expected_best, expected_degree = oracle.oracle_optimal(
        table, theta, omega, clique, params, kind, feasible=expected
    )
    if set(best.strategies) != expected_best or best.extremal_degree != expected_degree:
        raise TristratError(f"self-check failed: optimal sets differ for kind {kind.value!r}")
    return f"self-check: feasible and optimal sets match the reference path ({fs.count} members)"


# ---------------------------------------------------------------------------
# sweep


def _grid_from_config(setup: RunSetup, name: str) -> tuple[Fraction, ...]:
    triple = []
    for part in ("from", "to", "step"):
        key = f"{name}_{part}"
        if key not in setup.config:
            raise ValidationError(f"sweep requires config key {key!r}")
        triple.append(parse_rational(setup.config[key], where=f"config key {key}"))
    return grid_values(*triple)


def _sweep_cells_json(setup: RunSetup, grid: SweepGrid) -> list[dict]:
    issues = setup.table.issues
    cells = []
    for point, cell in grid.cells.items():
        entry: dict[str, object] = {
            "point": {name: degree_json(value) for (name, _), value in zip(grid.axes, point)},
            "counts": dict(cell.counts),
            "optimal": {
                key: [list(ids_of_mask(m, issues)) for m in masks]
                for key, masks in cell.optimal.items()
            },
        }
        if cell.rating is not None:
            entry["rating"] = cell.rating.symbol
        if cell.cm is not None:
            entry["cm"] = degree_json(cell.cm)
        cells.append(entry)
    return cells


def cmd_sweep(setup: RunSetup) -> tuple[list[str], dict]:
    table, theta, omega, params = setup.table, setup.theta, setup.omega, setup.params
    clique = _require_clique(setup)
    sweep_name = setup.config.get("sweep")
    if sweep_name not in ("mu_nu", "lambda", "tau"):
        raise ValidationError("config key 'sweep' must be one of mu_nu, lambda, tau")

    doc = _common_json("sweep", setup)
    doc["clique"] = list(ids_of_mask(clique, table.agents))
    doc["sweep"] = sweep_name
    issues = table.issues

    def show_optimal(masks: tuple[int, ...]) -> str:
        return " ".join(format_subset(m, issues) for m in masks) if masks else "(none)"

    if sweep_name == "mu_nu":
        if setup.focus_issue is None:
            raise ValidationError("mu_nu sweep requires the 'focus_issue' config key")
        grid = sweep_mu_nu(
            table,
            theta,
            omega,
            clique,
            setup.focus_issue,
            params,
            _grid_from_config(setup, "mu"),
            _grid_from_config(setup, "nu"),
        )
        doc["focus_issue"] = issues[setup.focus_issue]
        rows = [
            (
                format_degree(mu),
                format_degree(nu),
                cell.rating.symbol,
                decimal_string(cell.cm),
                str(cell.counts["feasible"]),
                str(cell.counts["feasible_order"]),
                show_optimal(cell.optimal["optimal"]),
                show_optimal(cell.optimal["optimal_order"]),
            )
            for (mu, nu), cell in grid.cells.items()
        ]
        lines = [f"mu x nu sweep, focus issue {issues[setup.focus_issue]}:"]
        lines += _aligned(
            ("mu", "nu", "rating", "cm", "FS", f"FS_{params.order_l}", "optimal", "optimal_L"),
            rows,
        )
    else:
        kind = StrategyKind.CONSISTENCY if sweep_name == "lambda" else StrategyKind.NON_CONSISTENCY
        grid = sweep_scalar(
            table, theta, omega, clique, kind, params, _grid_from_config(setup, sweep_name)
        )
        rows = [
            (
                format_degree(point[0]),
                str(cell.counts["feasible"]),
                str(cell.counts["feasible_order"]),
                show_optimal(cell.optimal["optimal"]),
                show_optimal(cell.optimal["optimal_order"]),
            )
            for point, cell in grid.cells.items()
        ]
        lines = [f"{sweep_name} sweep:"]
        lines += _aligned(
            (sweep_name, "FS", f"FS_{params.order_l}", "optimal", "optimal_L"), rows
        )

    doc["axes"] = [
        {"name": name, "values": [degree_json(v) for v in values]} for name, values in grid.axes
    ]
    doc["cells"] = _sweep_cells_json(setup, grid)
    return lines, doc


# ---------------------------------------------------------------------------
# baseline-xu


def cmd_baseline(setup: RunSetup) -> tuple[list[str], dict]:
    table, theta, omega, params = setup.table, setup.theta, setup.omega, setup.params
    cliques = setup.cliques or ((setup.clique,) if setup.clique is not None else ())
    if not cliques:
        raise ValidationError("no clique given; use --clique or the 'cliques' config key")

    doc = _common_json("baseline-xu", setup)
    doc["order"] = params.order_l
    reports = []
    lines: list[str] = []
    for clique in cliques:
        ratings = xu_rating_vector(table, clique)
        ranking = xu_ranking(table, clique)
        dominant = xu_feasible_L(table, clique, params)
        ties = ranking.boundary_ties(params.order_l)
        cms = [xu_cm_issue(table, clique, t) for t in range(table.issue_count)]

        lines.append(f"clique {format_subset(clique, table.agents)} (unweighted baseline)")
        lines += _aligned(
            ("issue", "cm", "rating"),
            [
                (table.issues[t], format_degree(cms[t]), ratings[t].symbol)
                for t in range(table.issue_count)
            ],
        )
        if dominant is None:
            lines.append(f"dominant order-{params.order_l} strategy misses lambda")
        else:
            mask, degree = dominant
            lines.append(
                f"dominant order-{params.order_l} strategy:"
                f" {format_subset(mask, table.issues)} degree {format_degree(degree)}"
            )
        if ties:
            lines.append(
                "note: ranking ties at the cardinality boundary, equally ranked"
                f" alternates exist: {','.join(table.issues[t] for t in ties)}"
            )

        report: dict[str, object] = {
            "clique": list(ids_of_mask(clique, table.agents)),
            "ratings": [r.symbol for r in ratings],
            "cm": [degree_json(v) for v in cms],
            "ranking": [table.issues[t] for t in ranking.issues],
            "dominant": None
            if dominant is None
            else {
                "strategy": list(ids_of_mask(dominant[0], table.issues)),
                "degree": degree_json(dominant[1]),
            },
            "alternates": [table.issues[t] for t in ties],
        }

        profile = issue_consistency_profile(table, theta, clique, params)
        fs = feasible_c(table, theta, omega, clique, params, allow_over_cap=setup.allow_over_cap)
        lines.append("weighted model at the configured parameters:")
        lines.append(f"  rating vector: ({','.join(r.symbol for r, _ in profile)})")
        lines.append(f"  feasible strategies ({fs.count}):")
        rows = [
            ("  " + format_subset(mask, table.issues), decimal_string(degree))
            for mask, degree in fs.strategies
        ]
        lines += _aligned(("  strategy", "degree"), rows) if rows else ["  (none)"]
        lines.append("")
        report["comparison"] = {
            "ratings": [r.symbol for r, _ in profile],
            "feasible": _strategy_entries_json(setup, fs.strategies),
        }
        reports.append(report)

    doc["cliques"] = reports
    return lines, doc


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tristrat",
        description="Weighted three-way conflict analysis over three-valued situation tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="flat key = value config file")
        p.add_argument("--table", help="situation table CSV (overrides config)")
        p.add_argument("--agent-weights", help="agent weight CSV (default: uniform)")
        p.add_argument("--issue-weights", help="issue weight CSV (default: uniform)")
        p.add_argument("--clique", help="comma-separated agent identifiers")
        p.add_argument("--json", metavar="PATH", help="also write a machine-readable document")
        p.add_argument("--self-check", action="store_true", help=argparse.SUPPRESS)

    analyze = sub.add_parser("analyze", help="per-issue measures and trisections for a clique")
    add_common(analyze)

    strategies = sub.add_parser("strategies", help="feasible and optimal strategies")
    add_common(strategies)
    strategies.add_argument("--kind", choices=("c", "n", "both"), help="measure kind")
    strategies.add_argument("--order", type=int, help="cardinality bound L")
    strategies.add_argument(
        "--optimal", action="store_true", help="report optimal strategies only"
    )
    strategies.add_argument(
        "--max-issues-override",
        action="store_true",
        help="enumerate past the 24-issue cap",
    )

    sweep = sub.add_parser("sweep", help="parameter sweeps from a config file")
    add_common(sweep)
    sweep.add_argument("--order", type=int, help="cardinality bound L")

    baseline = sub.add_parser("baseline-xu", help="unweighted baseline comparison")
    add_common(baseline)
    baseline.add_argument("--order", type=int, help="cardinality bound L")

    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup = build_setup(args)
    if args.command == "analyze":
        lines, doc = cmd_analyze(setup)
    elif args.command == "strategies":
        lines, doc = cmd_strategies(setup, optimal_only=args.optimal)
    elif args.command == "sweep":
        lines, doc = cmd_sweep(setup)
    else:
        lines, doc = cmd_baseline(setup)
    print("\n".join(lines))
    if args.json:
        payload = json.dumps(doc, indent=2, sort_keys=True) + "\n"
        Path(args.json).write_bytes(payload.encode("utf-8"))
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        return run(argv)
    except TristratError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
