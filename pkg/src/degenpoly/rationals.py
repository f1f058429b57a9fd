"""Exact rational scalars.

Everything in this package computes over Q.  gmpy2's mpq is used when
available (roughly an order of magnitude faster than fractions.Fraction
for the convolution-heavy series work) with a stdlib fallback, so the
package stays importable either way.  Both backends keep values in lowest
terms with a positive denominator and format as "p/q" (or "p" for
integers), which is the wire format used by every serializer here.

Floats are deliberately rejected at construction: the only floating-point
surface in the package is the Dobinski-style numeric evaluation, which
converts exact values at the last possible moment.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    _BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpq = Fraction
    _BACKEND = "fractions"

QZERO = _mpq(0)
QONE = _mpq(1)


def Q(numerator=0, denominator=None):
    """Build an exact rational. Accepts ints, rationals, and strings.

    Floats are refused; nothing in the exact layer may pass through
    binary floating point.
    """
    if isinstance(numerator, float) or isinstance(denominator, float):
        raise TypeError("floats are not exact; pass a string or a rational")
    if denominator is None:
        return _mpq(numerator)
    return _mpq(numerator, denominator)


def is_rational(value) -> bool:
    return isinstance(value, (int, Fraction, type(QZERO)))


def parse_rational(text: str):
    """Parse "p/q", an integer literal, or a finite decimal literal.

    All accepted forms are exact; there is no rounding path.  Raises
    ValueError on anything else (including division by zero).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            value = Fraction(int(num), int(den))
        else:
            # Fraction's string parser handles integer and decimal
            # literals exactly (1.25 -> 5/4), never via float.
            value = Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    except (ValueError, TypeError):
        raise ValueError(f"not a rational literal: {text!r}")
    return _mpq(value)


def format_rational(value) -> str:
    """Canonical "p/q" form; integers render without the denominator."""
    return str(_mpq(value))
