"""Exact-to-text rendering rules."""

from fractions import Fraction

from tristrat import Rating
from tristrat.render import (
    decimal_string,
    degree_json,
    format_degree,
    format_rating,
    format_subset,
    round_half_away,
)

from helpers import F


class TestRounding:
    def test_halves_go_away_from_zero(self):
        assert round_half_away(F("0.26545")) == F("0.2655")
        assert round_half_away(F("-0.26545")) == F("-0.2655")
        assert round_half_away(F("0.12344")) == F("0.1234")
        assert round_half_away(F("1/2"), places=0) == 1

    def test_decimal_string_pads_and_signs(self):
        assert decimal_string(F("9/14"), 2) == "0.64"
        assert decimal_string(F("44/63"), 2) == "0.70"
        assert decimal_string(F("1/3")) == "0.3333"
        assert decimal_string(F("-1/2")) == "-0.5000"
        assert decimal_string(F("5353/20160")) == "0.2655"
        assert decimal_string(F(3), 0) == "3"


class TestFormatDegree:
    def test_small_denominators_stay_exact(self):
        assert format_degree(F("3/4")) == "3/4"
        assert format_degree(F("847/900")) == "847/900"
        assert format_degree(F(1)) == "1"

    def test_large_denominators_fall_back_to_decimal(self):
        assert format_degree(F("162289781/4157562500")) == "0.0390"
        assert format_degree(F("116839/403200")) == "0.2898"


class TestStructuredForms:
    def test_subset_and_rating(self):
        assert format_subset(0b1001, ("t1", "t2", "t3", "t4")) == "{t1,t4}"
        assert format_subset(0, ("t1",)) == "{}"
        assert format_rating(Rating.OPPOSE) == "-"

    def test_degree_json_round_trips(self):
        doc = degree_json(F("269/364"))
        assert doc == {"num": 269, "den": 364, "decimal": "0.7390"}
        assert Fraction(doc["num"], doc["den"]) == F("269/364")
