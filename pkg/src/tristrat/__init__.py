"""Weighted three-way conflict analysis over three-valued situation tables.

Agents rate issues as support, neutral or oppose; agents and issues carry
rational weights.  The package measures clique consistency and pairwise
non-consistency, trisects cliques, issues and agent pairs into alliance,
neutral and conflict regions, and enumerates feasible and optimal issue
strategies.  All arithmetic is exact.
"""

from __future__ import annotations

from .errors import (
    CapacityError,
    EmptyCliqueError,
    EmptyStrategyError,
    GateError,
    InternalError,
    ParseError,
    SubsetViolationError,
    TristratError,
    ValidationError,
    ZeroMassError,
)
from .model import (
    Axis,
    ParamSet,
    Rating,
    SituationTable,
    WeightVector,
    check_clique,
    check_strategy,
    coalitions,
    conditional_weight,
    full_mask,
    ids_of_mask,
    indices_of_mask,
    iter_indices,
    mask_from_ids,
    mask_from_indices,
    popcount,
    powers,
)
from .tableio import dump_situation_table, load_situation_table, load_weights, parse_rational
from .consistency import (
    CliqueState,
    IssueTrisection,
    classify_clique_c,
    cm_issue,
    cm_strategy,
    issue_consistency_profile,
    issue_trisection_c,
    overall_rating,
    rating_vector,
    sa_agent,
    sa_clique,
)
from .conflict import (
    PairConflictMatrix,
    PairTrisection,
    classify_clique_n,
    conflict_matrix_for_issue,
    conflict_matrix_for_set,
    issue_nonconsistency_profile,
    issue_trisection_n,
    nm_issue,
    nm_strategy,
    pair_conflict,
    pair_conflict_set,
    pair_trisection,
)
from .engine import (
    DEFAULT_ISSUE_CAP,
    THREADS_ENV_VAR,
    FeasibleSet,
    OptimalSet,
    StrategyKind,
    clique_gate,
    enumerate_strategies,
    feasible_c,
    feasible_n,
    optimal_c,
    optimal_n,
    worker_count,
)
from .baseline import (
    XuRanking,
    xu_cm_issue,
    xu_cm_set,
    xu_feasible_L,
    xu_ranking,
    xu_rating,
    xu_rating_vector,
    xu_similarity,
)
from .sensitivity import SweepCell, SweepGrid, grid_values, sweep_mu_nu, sweep_scalar

__version__ = "0.1.0"
