"""Exact rational scalars.

All coefficient arithmetic in this package is exact.  gmpy2.mpq is used when
available (much faster); fractions.Fraction otherwise.  Both stringify as
"p" or "p/q", which the JSON writers rely on.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Q = Fraction

ZERO = Q(0)
ONE = Q(1)
HALF = Q(1, 2)


def qstr(x) -> str:
    """Canonical string form of a rational: "p" or "p/q" with q > 0."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def qparse(s: str):
    """Parse "p" or "p/q" back into a scalar."""
    if "/" in s:
        p, q = s.split("/")
        return Q(int(p), int(q))
    return Q(int(s))
