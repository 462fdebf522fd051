"""Exact rational arithmetic used throughout the package.

All graph weights, LP tableaus and certificates are kept in exact
rationals; floating point only ever appears inside the eigensolver.
``gmpy2.mpq`` is used when available (it is several times faster than
``fractions.Fraction`` in the simplex inner loops) with a transparent
stdlib fallback.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

try:
    from gmpy2 import mpq as Q

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Q = Fraction
    HAVE_GMPY2 = False

QZERO = Q(0)
QONE = Q(1)


def is_rational(x) -> bool:
    """True for the exact types we accept as weights (no floats)."""

    return isinstance(x, (int, Fraction)) or type(x) is type(QZERO)


def as_q(x):
    """Coerce an int, Fraction, mpq or 'p/q' string to the package rational type."""

    if type(x) is type(QZERO):
        return x
    if isinstance(x, (int, Fraction, str)):
        return Q(x)
    raise TypeError(f"not an exact rational: {x!r}")


def format_q(x) -> str:
    """Render a rational as 'p' or 'p/q' (canonical lowest terms)."""

    return str(as_q(x))


def parse_q(text: str):
    """Parse 'p' or 'p/q' into an exact rational."""

    try:
        return Q(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal: {text!r}") from exc


def numer(x) -> int:
    return int(as_q(x).numerator)


def denom(x) -> int:
    return int(as_q(x).denominator)


def is_integer(x) -> bool:
    return denom(x) == 1


def denominator_lcm(values) -> int:
    """lcm of the denominators of an iterable of rationals (1 for empty)."""

    out = 1
    for v in values:
        d = denom(v)
        out = out * d // gcd(out, d)
    return out


def as_fraction(x) -> Fraction:
    """Convert to a stdlib Fraction (used for float-free interop)."""

    return Fraction(numer(x), denom(x))
