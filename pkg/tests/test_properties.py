"""Property-based invariants of the measures, scans and serializers."""

from dataclasses import replace
from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tristrat import (
    Axis,
    ParamSet,
    Rating,
    SituationTable,
    StrategyKind,
    WeightVector,
    cm_issue,
    cm_strategy,
    conditional_weight,
    dump_situation_table,
    enumerate_strategies,
    feasible_c,
    feasible_n,
    full_mask,
    issue_trisection_c,
    issue_trisection_n,
    load_situation_table,
    nm_issue,
    nm_strategy,
    optimal_c,
    optimal_n,
    overall_rating,
    pair_conflict,
    pair_trisection,
    conflict_matrix_for_issue,
    popcount,
    powers,
    rating_vector,
    sa_clique,
    xu_cm_issue,
    xu_cm_set,
    xu_rating_vector,
)
from tristrat.oracle import (
    oracle_cm,
    oracle_cm_issue,
    oracle_feasible,
    oracle_nm,
    oracle_nm_issue,
    oracle_optimal,
    oracle_overall_rating,
    oracle_pair_conflict,
)
from tristrat.render import round_half_away

# ---------------------------------------------------------------------------
# Generators

RATING_VALUES = st.sampled_from((Rating.OPPOSE, Rating.NEUTRAL, Rating.SUPPORT))


@st.composite
def tables(draw, max_agents=5, max_issues=5):
    m = draw(st.integers(1, max_agents))
    n = draw(st.integers(1, max_issues))
    rows = draw(
        st.lists(
            st.lists(RATING_VALUES, min_size=n, max_size=n).map(tuple),
            min_size=m,
            max_size=m,
        ).map(tuple)
    )
    agents = tuple(f"p{i}" for i in range(1, m + 1))
    issues = tuple(f"t{j}" for j in range(1, n + 1))
    return SituationTable(agents, issues, rows)


def _weights(draw, axis, ids):
    values = draw(
        st.lists(st.integers(1, 9), min_size=len(ids), max_size=len(ids))
    )
    return WeightVector(axis, tuple(ids), tuple(Fraction(v, 10) for v in values))


@st.composite
def instances(draw, max_agents=5, max_issues=5):
    """Table, positive weights on both axes, and a nonempty clique."""
    table = draw(tables(max_agents, max_issues))
    theta = _weights(draw, Axis.AGENTS, table.agents)
    omega = _weights(draw, Axis.ISSUES, table.issues)
    clique = draw(st.integers(1, full_mask(table.agent_count)))
    return table, theta, omega, clique


@st.composite
def param_sets(draw):
    return ParamSet(
        mu=Fraction(draw(st.integers(0, 10)), 10),
        nu=Fraction(-draw(st.integers(0, 10)), 10),
        lam=Fraction(draw(st.integers(10, 20)), 20),
        tau=Fraction(draw(st.integers(0, 10)), 20),
        alpha_n=Fraction(1, 2),
        beta_n=Fraction(1, 4),
    )


# ---------------------------------------------------------------------------
# Weight shares and powers


@given(instances())
def test_powers_form_a_distribution(inst):
    table, theta, _, clique = inst
    for t in range(table.issue_count):
        triple = powers(table, theta, clique, t)
        assert all(0 <= share <= 1 for share in triple)
        assert sum(triple) == 1


@given(instances(), st.integers(0, 1 << 5))
def test_conditional_weight_is_additive(inst, seed):
    table, theta, _, clique = inst
    part = clique & seed
    rest = clique & ~seed
    total = conditional_weight(theta, part, clique) + conditional_weight(
        theta, rest, clique
    )
    assert total == 1


@given(instances())
def test_similarity_identities(inst):
    table, theta, _, clique = inst
    for t in range(table.issue_count):
        pos = sa_clique(table, theta, clique, t, 1)
        neg = sa_clique(table, theta, clique, t, -1)
        assert pos + neg == 1
        rho_pos, _, rho_neg = powers(table, theta, clique, t)
        assert pos - neg == rho_pos - rho_neg


# ---------------------------------------------------------------------------
# Ratings and consistency


@given(instances(), param_sets())
def test_rating_matches_band_membership(inst, params):
    table, theta, _, clique = inst
    for t in range(table.issue_count):
        pos, _, neg = powers(table, theta, clique, t)
        diff = pos - neg
        rating = overall_rating(table, theta, clique, t, params)
        if diff > params.mu:
            assert rating is Rating.SUPPORT
        elif diff < params.nu:
            assert rating is Rating.OPPOSE
        else:
            assert rating is Rating.NEUTRAL
        assert rating is oracle_overall_rating(table, theta, clique, t, params)


@given(instances(), param_sets())
def test_consistency_range_and_oracle_equality(inst, params):
    table, theta, omega, clique = inst
    for t in range(table.issue_count):
        value = cm_issue(table, theta, clique, t, params)
        assert Fraction(1, 2) <= value <= 1
        assert value == oracle_cm_issue(table, theta, clique, t, params)
    strategy = full_mask(table.issue_count)
    assert cm_strategy(table, theta, omega, clique, strategy, params) == oracle_cm(
        table, theta, omega, clique, strategy, params
    )


@given(instances())
def test_unanimity_forces_perfect_consistency(inst):
    table, theta, _, clique = inst
    unanimous = SituationTable(
        table.agents,
        table.issues,
        tuple((Rating.SUPPORT,) * table.issue_count for _ in table.agents),
    )
    params = ParamSet()
    for t in range(unanimous.issue_count):
        assert cm_issue(unanimous, theta, clique, t, params) == 1


# ---------------------------------------------------------------------------
# Pair conflict and non-consistency


@given(instances())
def test_pair_conflict_symmetry_range_and_oracle(inst):
    table, theta, _, _ = inst
    for t in range(table.issue_count):
        for p in range(table.agent_count):
            for q in range(table.agent_count):
                value = pair_conflict(table, theta, p, q, t)
                assert 0 <= value <= 1
                assert value == pair_conflict(table, theta, q, p, t)
                assert value == oracle_pair_conflict(table, theta, p, q, t)


@given(instances())
def test_pair_conflict_boundary_characterisation(inst):
    table, theta, _, _ = inst
    for t in range(table.issue_count):
        for p in range(table.agent_count):
            for q in range(table.agent_count):
                value = pair_conflict(table, theta, p, q, t)
                r_p = int(table.rating(p, t))
                r_q = int(table.rating(q, t))
                if value == 0:
                    assert r_p == r_q
                if value == 1:
                    assert abs(r_p - r_q) == 2
                    assert theta.weight(p) == theta.weight(q)
                if abs(r_p - r_q) == 2 and theta.weight(p) == theta.weight(q):
                    assert value == 1


@given(instances())
def test_nonconsistency_range_and_oracle_equality(inst):
    table, theta, omega, clique = inst
    for t in range(table.issue_count):
        value = nm_issue(table, theta, clique, t)
        assert 0 <= value <= Fraction(1, 2)
        assert value == oracle_nm_issue(table, theta, clique, t)
    strategy = full_mask(table.issue_count)
    assert nm_strategy(table, theta, omega, clique, strategy) == oracle_nm(
        table, theta, omega, clique, strategy
    )


# ---------------------------------------------------------------------------
# Trisections


@given(instances(), param_sets())
def test_issue_trisections_partition_the_axis(inst, params):
    table, theta, _, clique = inst
    for split in (
        issue_trisection_c(table, theta, clique, params),
        issue_trisection_n(table, theta, clique, params),
    ):
        assert split.alliance | split.neutral | split.conflict == full_mask(
            table.issue_count
        )
        assert split.alliance & split.neutral == 0
        assert split.alliance & split.conflict == 0
        assert split.neutral & split.conflict == 0


@given(instances(), st.integers(0, 20), st.integers(0, 20))
def test_pair_trisection_partitions_all_pairs(inst, a, b):
    table, theta, _, _ = inst
    low, high = sorted((a, b))
    matrix = conflict_matrix_for_issue(table, theta, 0)
    split = pair_trisection(matrix, Fraction(high, 20), Fraction(low, 20))
    m = table.agent_count
    everything = split.alliance | split.neutral | split.conflict
    assert everything == {(i, j) for i in range(m) for j in range(i, m)}
    assert not (split.alliance & split.neutral)
    assert not (split.alliance & split.conflict)
    assert not (split.neutral & split.conflict)


# ---------------------------------------------------------------------------
# Enumeration and scans


@given(st.integers(1, 8))
def test_enumeration_is_canonical_and_complete(n):
    masks = list(enumerate_strategies(n))
    assert len(masks) == (1 << n) - 1
    assert len(set(masks)) == len(masks)
    keys = [(popcount(m), m) for m in masks]
    assert keys == sorted(keys)


@given(instances(), param_sets())
@settings(deadline=None)
def test_feasible_sets_match_oracle_and_stay_ordered(inst, params):
    table, theta, omega, clique = inst
    for kind, scan in (
        (StrategyKind.CONSISTENCY, feasible_c),
        (StrategyKind.NON_CONSISTENCY, feasible_n),
    ):
        fs = scan(table, theta, omega, clique, params)
        assert set(fs.masks()) == oracle_feasible(
            table, theta, omega, clique, params, kind
        )
        keys = [(popcount(m), m) for m in fs.masks()]
        assert keys == sorted(keys)
        threshold = params.lam if kind is StrategyKind.CONSISTENCY else params.tau
        for mask, degree in fs.strategies:
            if kind is StrategyKind.CONSISTENCY:
                assert degree >= threshold
            else:
                assert degree <= threshold
        bounded = fs.order_subset(1)
        assert set(bounded.masks()) <= set(fs.masks())


@given(instances(), param_sets(), st.integers(0, 4))
@settings(deadline=None)
def test_optimal_sets_are_extremal(inst, params, gamma_scale):
    table, theta, omega, clique = inst
    params = replace(params, gamma_t=Fraction(gamma_scale, 4))
    for kind, scan, select in (
        (StrategyKind.CONSISTENCY, feasible_c, optimal_c),
        (StrategyKind.NON_CONSISTENCY, feasible_n, optimal_n),
    ):
        fs = scan(table, theta, omega, clique, params)
        best = select(fs, table.issue_count, params)
        masks, degree = oracle_optimal(
            table, theta, omega, clique, params, kind, feasible=fs.masks()
        )
        assert set(best.strategies) == masks
        assert best.extremal_degree == degree
        candidates = [
            m
            for m in fs.masks()
            if Fraction(popcount(m), table.issue_count) >= params.gamma_t
        ]
        if not candidates:
            assert best.is_empty
        else:
            for m in best.strategies:
                assert m in candidates


@given(instances(), st.integers(10, 20), st.integers(0, 10))
@settings(deadline=None)
def test_tightening_thresholds_shrinks_feasible_sets(inst, lam_ticks, tau_ticks):
    table, theta, omega, clique = inst
    lam_lo = Fraction(lam_ticks, 20)
    lam_hi = min(Fraction(lam_ticks + 1, 20), Fraction(1))
    loose = feasible_c(table, theta, omega, clique, ParamSet(lam=lam_lo))
    tight = feasible_c(table, theta, omega, clique, ParamSet(lam=lam_hi))
    assert set(tight.masks()) <= set(loose.masks())
    tau_lo = Fraction(tau_ticks, 20)
    tau_hi = min(Fraction(tau_ticks + 1, 20), Fraction(1, 2))
    small = feasible_n(table, theta, omega, clique, ParamSet(tau=tau_lo))
    large = feasible_n(table, theta, omega, clique, ParamSet(tau=tau_hi))
    assert set(small.masks()) <= set(large.masks())


# ---------------------------------------------------------------------------
# Degeneration to the unweighted baseline


@given(tables(), st.data())
def test_uniform_weights_and_zero_band_degenerate_to_baseline(table, data):
    theta = WeightVector.uniform(Axis.AGENTS, table.agents)
    omega = WeightVector.uniform(Axis.ISSUES, table.issues)
    clique = data.draw(st.integers(1, full_mask(table.agent_count)))
    params = ParamSet()
    assert rating_vector(table, theta, clique, params) == xu_rating_vector(
        table, clique
    )
    for t in range(table.issue_count):
        assert cm_issue(table, theta, clique, t, params) == xu_cm_issue(
            table, clique, t
        )
    strategy = data.draw(st.integers(1, full_mask(table.issue_count)))
    assert cm_strategy(table, theta, omega, clique, strategy, params) == xu_cm_set(
        table, clique, strategy
    )


# ---------------------------------------------------------------------------
# Serialization and rendering


@given(tables(max_agents=6, max_issues=6))
def test_table_serialization_round_trips(table):
    assert load_situation_table(dump_situation_table(table)) == table


@given(st.integers(-(10**6), 10**6), st.integers(1, 10**6))
def test_rounding_is_quantised_and_close(num, den):
    value = Fraction(num, den)
    rounded = round_half_away(value)
    assert (rounded * 10**4).denominator == 1
    assert abs(rounded - value) <= Fraction(1, 2 * 10**4)
    assert round_half_away(-value) == -rounded


@given(st.integers(-(10**5), 10**5))
def test_rounding_ties_go_away_from_zero(k):
    tie = Fraction(2 * k + 1, 2 * 10**4)
    away = Fraction(k + 1 if k >= 0 else k, 10**4)
    assert round_half_away(tie) == away
    assert round_half_away(-tie) == -away
