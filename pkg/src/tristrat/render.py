"""Rendering exact rationals for human and machine output."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .model import Rating, ids_of_mask

__all__ = [
    "round_half_away",
    "decimal_string",
    "format_degree",
    "format_rating",
    "format_subset",
    "degree_json",
]

FRACTION_DENOMINATOR_LIMIT = 10_000


def round_half_away(value: Fraction, places: int = 4) -> Fraction:
    """Round to ``places`` decimals, halves away from zero."""
    scale = 10**places
    scaled = abs(value) * scale
    whole, remainder = divmod(scaled.numerator, scaled.denominator)
    if 2 * remainder >= scaled.denominator:
        whole += 1
    result = Fraction(whole, scale)
    return -result if value < 0 else result


def decimal_string(value: Fraction, places: int = 4) -> str:
    """Fixed-point decimal rendering, halves away from zero."""
    rounded = round_half_away(value, places)
    sign = "-" if rounded < 0 else ""
    scaled = abs(rounded) * 10**places
    digits = scaled.numerator // scaled.denominator
    whole, frac = divmod(digits, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def format_degree(value: Fraction, places: int = 4) -> str:
    """Exact fraction when the denominator stays small, decimal otherwise."""
    if value.denominator <= FRACTION_DENOMINATOR_LIMIT:
        return str(value)
    return decimal_string(value, places)


def format_rating(rating: Rating) -> str:
    return rating.symbol


def format_subset(mask: int, universe: Sequence[str]) -> str:
    return "{" + ",".join(ids_of_mask(mask, tuple(universe))) + "}"


def degree_json(value: Fraction, places: int = 4) -> dict:
    """Machine form of a rational: exact numerator/denominator plus decimal."""
    return {
        "num": value.numerator,
        "den": value.denominator,
        "decimal": decimal_string(value, places),
    }
