"""Rational functions as fully-cancelled quotients of Laurent polynomials.

Canonical form: the denominator is an honest polynomial (min exponent 0 in
every variable), integer-primitive, with positive leading coefficient under
graded lex, and coprime to the numerator's polynomial part.  All rational
scalars and pure Laurent monomial factors live in the numerator.  Two
values are equal exactly when their (num, den) pairs are structurally
equal, which is what makes every identity in this package decidable by a
pure structural check.
"""

from __future__ import annotations

from typing import Mapping

from .errors import PoleError, ZeroDenominatorError
from .gcd import poly_gcd
from .laurent import LaurentPoly, _coerce_strict
from .rationals import as_rational


class RatFunc:
    """Exact rational function, always in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _reduce: bool = True):
        num = _coerce_strict(num)
        den = _coerce_strict(den)
        self.num, self.den = _normalized(num, den, _reduce)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls._raw(LaurentPoly.const(c), LaurentPoly.one())

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls.const(0)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls.const(1)

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "RatFunc":
        return cls._raw(LaurentPoly.var(name, exp), LaurentPoly.one())

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_value()

    def as_poly(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.is_one():
            return RatFunc(self.num * other.den + other.num * self.den,
                           self.den * other.den, _reduce=False)
        d1 = other.den.exact_div(g)
        num = self.num * d1 + other.num * self.den.exact_div(g)
        den = self.den * d1
        # any surviving common factor must divide g
        g2 = poly_gcd(num, g)
        if not g2.is_one():
            num = num.exact_div(g2)
            den = den.exact_div(g2)
        return RatFunc(num, den, _reduce=False)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatFunc":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        g1 = poly_gcd(self.num, other.den) if not other.den.is_one() else LaurentPoly.one()
        g2 = poly_gcd(other.num, self.den) if not self.den.is_one() else LaurentPoly.one()
        a = self.num if g1.is_one() else self.num.exact_div(g1)
        c = other.num if g2.is_one() else other.num.exact_div(g2)
        b = self.den if g2.is_one() else self.den.exact_div(g2)
        d = other.den if g1.is_one() else other.den.exact_div(g1)
        return RatFunc(a * c, b * d, _reduce=False)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDenominatorError("division by the zero rational function")
        return RatFunc(self.den, self.num, _reduce=False)

    def __pow__(self, k: int) -> "RatFunc":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = RatFunc.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- specializations --------------------------------------------------------

    def substitute(self, assignment: Mapping[str, object]) -> "RatFunc":
        """Substitute Laurent monomials for variables; exact, then re-normalized.

        Raises PoleError if the denominator vanishes identically under the
        assignment (the input is canonical, so any cancellation that could
        rescue the value has already happened).
        """
        num = self.num.substitute(assignment)
        den = self.den.substitute(assignment)
        if den.is_zero():
            raise PoleError(assignment)
        return RatFunc(num, den)

    def adams(self, k: int) -> "RatFunc":
        """Adams operation x -> x^k on every variable.

        Exponent scaling preserves coprimality and every canonical-form
        invariant, so no re-reduction is needed.
        """
        if k == 1:
            return self
        return RatFunc._raw(self.num.adams(k), self.den.adams(k))

    # -- rendering ---------------------------------------------------------------

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        if self.num.num_terms() > 1:
            num = f"({num})"
        return f"{num} / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _normalized(num: LaurentPoly, den: LaurentPoly, reduce: bool):
    if den.is_zero():
        raise ZeroDenominatorError("zero denominator")
    if num.is_zero():
        return LaurentPoly.zero(), LaurentPoly.one()
    if den.is_one():
        return num, den
    if den.is_constant():
        return num * LaurentPoly.const(as_rational(1) / den.constant_value()), LaurentPoly.one()
    mono_n, n0 = num.monomial_shift()
    cn, n_prim = n0.content_primitive()
    mono_d, d0 = den.monomial_shift()
    cd, d_prim = d0.content_primitive()
    if reduce and not n_prim.is_constant() and not d_prim.is_constant():
        g = poly_gcd(n_prim, d_prim)
        if not g.is_one():
            n_prim = n_prim.exact_div(g)
            d_prim = d_prim.exact_div(g)
    mono = dict(mono_n)
    for v, e in mono_d.items():
        mono[v] = mono.get(v, 0) - e
    new_num = n_prim * LaurentPoly.monomial(cn / cd, mono)
    if d_prim.is_constant():
        c = d_prim.constant_value()
        if c != 1:
            new_num = new_num * LaurentPoly.const(as_rational(1) / c)
        return new_num, LaurentPoly.one()
    return new_num, d_prim


def _coerce_rf(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x, LaurentPoly.one())
    if isinstance(x, (int, str)) or hasattr(x, "denominator"):
        return RatFunc.const(x)
    return NotImplemented


def ratfunc_arith(a: RatFunc, b: RatFunc, which: str) -> RatFunc:
    """Field arithmetic dispatch: which in {add, sub, mul, div}."""
    if which == "add":
        return a + b
    if which == "sub":
        return a - b
    if which == "mul":
        return a * b
    if which == "div":
        return a / b
    raise ValueError(f"unknown operation {which!r}")
