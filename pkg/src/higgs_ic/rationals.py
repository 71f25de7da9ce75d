"""Exact rational scalars: the coefficient ground field.

All polynomial and rational-function coefficients in this package are
arbitrary-precision rationals, always stored reduced with a positive
denominator.  When gmpy2 is installed its ``mpq`` type is used (GMP-backed,
several times faster); otherwise the stdlib ``fractions.Fraction`` is a
drop-in replacement.  Both guarantee gcd(|num|, den) = 1 and den > 0.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd as _int_gcd

try:
    if os.environ.get("HIGGS_IC_PURE_PYTHON"):
        raise ImportError("gmpy2 disabled by HIGGS_IC_PURE_PYTHON")
    from gmpy2 import mpq as _mpq

    def rational(num=0, den=1):
        return _mpq(num, den)

    RATIONAL_BACKEND = "gmpy2.mpq"
except ImportError:
    def rational(num=0, den=1):
        return Fraction(num, den)

    RATIONAL_BACKEND = "fractions.Fraction"

ZERO = rational(0)
ONE = rational(1)


def as_rational(x):
    """Coerce an int, Fraction, mpq, or decimal string 'p/q' to the backend type."""
    if isinstance(x, str):
        if "/" in x:
            p, q = x.split("/", 1)
            return rational(int(p), int(q))
        return rational(int(x))
    return rational(x.numerator, x.denominator) if not isinstance(x, int) else rational(x)


def is_integral(c) -> bool:
    return c.denominator == 1


def rat_str(c) -> str:
    """Lossless decimal rendering, 'p' or 'p/q'."""
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def content(coeffs) -> "rational":
    """Positive rational content of a coefficient collection.

    content(cs) = gcd(numerators) / lcm(denominators), the unique positive
    rational c such that every coeff/c is an integer and those integers are
    coprime.  Returns 0 for an empty collection.
    """
    gnum = 0
    lden = 1
    for c in coeffs:
        gnum = _int_gcd(gnum, abs(c.numerator))
        d = c.denominator
        lden = lden * d // _int_gcd(lden, d)
    if gnum == 0:
        return ZERO
    return rational(gnum, lden)
