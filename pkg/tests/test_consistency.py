"""Consistency measures: ideal-agent similarity, ratings, trisections."""

from fractions import Fraction

import pytest

from tristrat import (
    Axis,
    CliqueState,
    EmptyStrategyError,
    InternalError,
    IssueTrisection,
    ParamSet,
    Rating,
    ValidationError,
    WeightVector,
    ZeroMassError,
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

from helpers import F, table_from_rows, weights_of


class TestSaAgent:
    def test_three_values_against_the_positive_ideal(self):
        table = table_from_rows({"a": "+0-"})
        assert sa_agent(table, 0, 0, 1) == 1
        assert sa_agent(table, 0, 1, 1) == F("1/2")
        assert sa_agent(table, 0, 2, 1) == 0

    def test_negative_ideal_mirrors(self):
        table = table_from_rows({"a": "+0-"})
        for t in range(3):
            assert sa_agent(table, 0, t, 1) + sa_agent(table, 0, t, -1) == 1

    def test_rejects_bad_sign(self):
        table = table_from_rows({"a": "+"})
        with pytest.raises(ValidationError, match="sign"):
            sa_agent(table, 0, 0, 2)


class TestSaClique:
    def test_worked_values(self, mideast):
        g = mideast.clique("p1,p3,p4,p6")
        expected_pos = [F("11/28"), F("9/14"), F("5/14"), F("17/28"), F("5/7")]
        for t, value in enumerate(expected_pos):
            assert sa_clique(mideast.table, mideast.theta, g, t, 1) == value
            assert sa_clique(mideast.table, mideast.theta, g, t, -1) == 1 - value

    def test_difference_equals_power_gap(self, mideast):
        from tristrat import powers

        g = mideast.clique("p2,p4,p5")
        for t in range(mideast.table.issue_count):
            pos, _, neg = powers(mideast.table, mideast.theta, g, t)
            diff = sa_clique(mideast.table, mideast.theta, g, t, 1) - sa_clique(
                mideast.table, mideast.theta, g, t, -1
            )
            assert diff == pos - neg


class TestOverallRating:
    def test_worked_vector(self, mideast, mideast_params):
        g = mideast.clique("p1,p3,p4,p6")
        vector = rating_vector(mideast.table, mideast.theta, g, mideast_params)
        assert vector == (
            Rating.NEUTRAL,
            Rating.SUPPORT,
            Rating.OPPOSE,
            Rating.NEUTRAL,
            Rating.SUPPORT,
        )

    def test_band_is_closed_at_both_ends(self):
        table = table_from_rows({"a": "+", "b": "-"})
        theta = weights_of(Axis.AGENTS, ("a", "b"), ("3", "1"))
        # difference is 3/4 - 1/4 = 1/2
        at_mu = ParamSet(mu="1/2")
        above = ParamSet(mu="0.49")
        assert overall_rating(table, theta, 0b11, 0, at_mu) is Rating.NEUTRAL
        assert overall_rating(table, theta, 0b11, 0, above) is Rating.SUPPORT
        flipped = weights_of(Axis.AGENTS, ("a", "b"), ("1", "3"))
        at_nu = ParamSet(nu="-1/2")
        below = ParamSet(nu="-0.49")
        assert overall_rating(table, flipped, 0b11, 0, at_nu) is Rating.NEUTRAL
        assert overall_rating(table, flipped, 0b11, 0, below) is Rating.OPPOSE

    def test_unanimous_row(self):
        table = table_from_rows({"a": "+", "b": "+"})
        theta = WeightVector.uniform(Axis.AGENTS, table.agents)
        assert overall_rating(table, theta, 0b11, 0, ParamSet()) is Rating.SUPPORT
        assert overall_rating(table, theta, 0b11, 0, ParamSet(mu="1")) is Rating.NEUTRAL


class TestCmIssue:
    def test_worked_values(self, mideast, mideast_params):
        g = mideast.clique("p1,p3,p4,p6")
        expected = [F("3/4"), F("9/14"), F("9/14"), F("3/4"), F("5/7")]
        for t, value in enumerate(expected):
            assert cm_issue(mideast.table, mideast.theta, g, t, mideast_params) == value

    def test_unanimity_reaches_one(self):
        table = table_from_rows({"a": "++-", "b": "+0-"})
        theta = weights_of(Axis.AGENTS, ("a", "b"), ("2", "1"))
        assert cm_issue(table, theta, 0b11, 0, ParamSet()) == 1
        assert cm_issue(table, theta, 0b11, 2, ParamSet()) == 1

    def test_profile_matches_per_issue_calls(self, mideast, mideast_params):
        g = mideast.clique("p1,p3,p4,p6")
        profile = issue_consistency_profile(mideast.table, mideast.theta, g, mideast_params)
        for t, (rating, degree) in enumerate(profile):
            assert rating is overall_rating(
                mideast.table, mideast.theta, g, t, mideast_params
            )
            assert degree == cm_issue(mideast.table, mideast.theta, g, t, mideast_params)


class TestCmStrategy:
    def test_singleton_equals_issue_measure(self, mideast, mideast_params):
        g = mideast.clique("p1,p3,p4,p6")
        for t in range(mideast.table.issue_count):
            assert cm_strategy(
                mideast.table, mideast.theta, mideast.omega, g, 1 << t, mideast_params
            ) == cm_issue(mideast.table, mideast.theta, g, t, mideast_params)

    def test_worked_values(self, mideast, mideast_params):
        g = mideast.clique("p1,p3,p4,p6")
        cases = {
            "t1,t2": F("81/112"),
            "t1,t2,t4": F("225/308"),
            "t1,t4,t5": F("269/364"),
            "t1,t2,t3,t4,t5": F("79/112"),
        }
        for ids_text, expected in cases.items():
            strategy = mideast.strategy(ids_text)
            actual = cm_strategy(
                mideast.table, mideast.theta, mideast.omega, g, strategy, mideast_params
            )
            assert actual == expected

    def test_rejects_empty_strategy(self, mideast, mideast_params):
        g = mideast.clique("p1")
        with pytest.raises(EmptyStrategyError):
            cm_strategy(mideast.table, mideast.theta, mideast.omega, g, 0, mideast_params)

    def test_zero_weight_strategy_has_no_degree(self):
        table = table_from_rows({"a": "+-", "b": "-+"})
        theta = WeightVector.uniform(Axis.AGENTS, table.agents)
        omega = weights_of(Axis.ISSUES, ("t1", "t2"), ("0", "1"))
        with pytest.raises(ZeroMassError):
            cm_strategy(table, theta, omega, 0b11, 0b01, ParamSet())


class TestClassification:
    def test_thresholds_are_inclusive(self):
        params = ParamSet(alpha_c="0.8", beta_c="0.6")
        assert classify_clique_c(F("0.8"), params) is CliqueState.ALLIANCE
        assert classify_clique_c(F("0.79"), params) is CliqueState.NEUTRAL
        assert classify_clique_c(F("0.6"), params) is CliqueState.CONFLICT
        assert classify_clique_c(F("0.61"), params) is CliqueState.NEUTRAL

    def test_alliance_wins_when_thresholds_coincide(self):
        params = ParamSet(alpha_c="0.7", beta_c="0.7")
        assert classify_clique_c(F("0.7"), params) is CliqueState.ALLIANCE

    def test_rejects_out_of_range_degree(self):
        with pytest.raises(ValidationError):
            classify_clique_c(F("0.4"), ParamSet())

    def test_issue_trisection_worked_case(self, mideast, mideast_params):
        g = mideast.clique("p1,p3,p4,p6")
        split = issue_trisection_c(mideast.table, mideast.theta, g, mideast_params)
        assert split.alliance == mideast.strategy("t1,t4")
        assert split.neutral == mideast.strategy("t5")
        assert split.conflict == mideast.strategy("t2,t3")
        assert split.state_of(0) is CliqueState.ALLIANCE
        assert split.state_of(4) is CliqueState.NEUTRAL

    def test_trisection_rejects_overlap(self):
        with pytest.raises(InternalError):
            IssueTrisection(alliance=0b11, neutral=0b10, conflict=0)
