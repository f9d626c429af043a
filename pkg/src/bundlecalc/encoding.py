"""Canonical exact-number encoding for the JSON boundary.

Rationals travel as strings "p/q" in lowest terms with q > 0 (bare "p" when
integral); integers as decimal strings.  Binary floats are rejected
everywhere: exactness is part of the contract.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import DomainError


def parse_rational(value) -> Fraction:
    """Parse an int or a "p/q" / "p" string into an exact Fraction."""
    if isinstance(value, bool):
        raise DomainError("booleans are not numbers", code="bad_number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise DomainError(
            "floating-point input rejected; pass a 'p/q' string", code="float_rejected"
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational: {value!r}", code="bad_number") from exc
    raise DomainError(f"cannot parse {type(value).__name__} as a rational", code="bad_number")


def parse_integer(value) -> int:
    """Parse an int or a decimal string into an exact int."""
    q = parse_rational(value)
    if q.denominator != 1:
        raise DomainError(f"expected an integer, got {q}", code="bad_number")
    return q.numerator


def format_rational(value: Fraction | int) -> str:
    return str(Fraction(value))


def format_integer(value: int) -> str:
    return str(int(value))


def dumps(payload) -> str:
    """Serialize to a single canonical JSON form (sorted keys, ASCII)."""
    return json.dumps(payload, sort_keys=True, ensure_ascii=True, separators=(", ", ": "))
