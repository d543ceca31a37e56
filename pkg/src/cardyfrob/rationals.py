"""Canonical text form for exact rationals.

Rationals are rendered as ``"p/q"`` in lowest terms with ``q > 0``, and as a
bare integer string ``"n"`` when the denominator is 1.  Parsing accepts the
same shapes plus plain JSON integers.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def format_fraction(value: Fraction | int) -> str:
    """Render a rational in canonical ``p/q`` form (``n`` when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: object) -> Fraction:
    """Parse a rational from a JSON scalar: an int or a ``p/q`` / ``n`` string."""
    if isinstance(text, bool):
        raise InputError(f"expected a rational, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"invalid rational literal {text!r}: {exc}") from None
    raise InputError(f"expected a rational, got {type(text).__name__} {text!r}")
