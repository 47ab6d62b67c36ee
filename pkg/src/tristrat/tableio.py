"""Reading and writing situation tables and weight vectors.

Tables are CSV with a header row ``agent,<issue ids...>`` and one row per
agent.  Rating cells accept ``+``, ``+1`` or ``1`` for support, ``0`` for
neutral and ``-``, ``-1`` or the Unicode minus for opposition.  Weight files
are two-column CSV ``id,weight`` where the weight is an exact decimal such
as ``0.25`` or a fraction literal such as ``3/4``.  Files are UTF-8; LF and
CRLF both work.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import TextIO

from .errors import ParseError, ValidationError
from .model import Axis, Rating, SituationTable, WeightVector

__all__ = [
    "RATING_TOKENS",
    "parse_rational",
    "load_situation_table",
    "dump_situation_table",
    "load_weights",
]

RATING_TOKENS = {
    "+": Rating.SUPPORT,
    "+1": Rating.SUPPORT,
    "1": Rating.SUPPORT,
    "0": Rating.NEUTRAL,
    "-": Rating.OPPOSE,
    "-1": Rating.OPPOSE,
    "−": Rating.OPPOSE,
    "−1": Rating.OPPOSE,
}

_CANONICAL_TOKEN = {Rating.SUPPORT: "+", Rating.NEUTRAL: "0", Rating.OPPOSE: "-"}


def parse_rational(text: str, where: str = "value") -> Fraction:
    """Parse a decimal or fraction literal exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: not a rational literal: {text!r}") from None


def _rows(source: str | TextIO) -> list[list[str]]:
    text = source.read() if hasattr(source, "read") else source
    reader = csv.reader(io.StringIO(text))
    return [[cell.strip() for cell in row] for row in reader if row]


def load_situation_table(source: str | TextIO) -> SituationTable:
    """Parse a situation table from CSV text or an open text stream.

    Agent and issue order is preserved exactly as written.  Errors name the
    offending row and column.
    """
    rows = _rows(source)
    if not rows:
        raise ParseError("table: empty input")
    header = rows[0]
    if not header or header[0] != "agent":
        raise ParseError("table: header row must start with 'agent'")
    issues = tuple(header[1:])
    if not issues:
        raise ParseError("table: header row names no issues")
    if any(not ident for ident in issues):
        raise ParseError("table: empty issue identifier in header")
    agents: list[str] = []
    ratings: list[tuple[Rating, ...]] = []
    for rownum, row in enumerate(rows[1:], start=2):
        if len(row) != len(issues) + 1:
            raise ParseError(
                f"table: row {rownum}: expected {len(issues) + 1} cells, found {len(row)}"
            )
        if not row[0]:
            raise ParseError(f"table: row {rownum}: empty agent identifier")
        agents.append(row[0])
        parsed = []
        for colnum, token in enumerate(row[1:], start=2):
            try:
                parsed.append(RATING_TOKENS[token])
            except KeyError:
                raise ParseError(
                    f"table: row {rownum}, column {colnum}: unknown rating token {token!r}"
                ) from None
        ratings.append(tuple(parsed))
    if not agents:
        raise ParseError("table: no agent rows")
    try:
        return SituationTable(tuple(agents), issues, tuple(ratings))
    except ValidationError as exc:
        raise ParseError(f"table: {exc}") from None


def dump_situation_table(table: SituationTable) -> str:
    """Serialize a table with canonical tokens; parsing it back round-trips."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("agent",) + table.issues)
    for agent, row in zip(table.agents, table.ratings):
        writer.writerow((agent,) + tuple(_CANONICAL_TOKEN[r] for r in row))
    return out.getvalue()


def load_weights(source: str | TextIO, axis: Axis, ids: tuple[str, ...]) -> WeightVector:
    """Parse an ``id,weight`` CSV into a weight vector aligned with ``ids``.

    The file must cover exactly the identifiers of the table axis; order in
    the file does not matter.  Negative weights, repeats, missing or extra
    identifiers and a zero total are validation errors.
    """
    rows = _rows(source)
    seen: dict[str, Fraction] = {}
    for rownum, row in enumerate(rows, start=1):
        if len(row) != 2:
            raise ParseError(f"weights: row {rownum}: expected 'id,weight'")
        ident, literal = row
        if ident in seen:
            raise ParseError(f"weights: row {rownum}: duplicate identifier {ident!r}")
        value = parse_rational(literal, where=f"weights: row {rownum}")
        if value < 0:
            raise ValidationError(f"weights: row {rownum}: negative weight for {ident!r}")
        seen[ident] = value
    missing = [ident for ident in ids if ident not in seen]
    if missing:
        raise ValidationError(f"weights: missing identifiers: {', '.join(missing)}")
    extra = [ident for ident in seen if ident not in ids]
    if extra:
        raise ValidationError(f"weights: unknown identifiers: {', '.join(extra)}")
    return WeightVector(axis, tuple(ids), tuple(seen[ident] for ident in ids))
