"""Sparse multivariate Laurent polynomials over exact rationals.

The variable alphabet is fixed: q, z, t, u, v, and the Weil variables
a1..ag (one per handle of the curve), ordered in exactly that way.  A
polynomial stores only the variables it actually uses, as a sorted tuple,
together with a dict mapping exponent tuples to nonzero rational
coefficients.  Exponents may be negative: a_i^-1 and transient t^-1 factors
occur naturally in the point-count product, and clearing them eagerly would
obscure the final polynomiality checks.

Monomials are compared in graded lexicographic order over the alphabet
(total degree first, then lex on the exponent vector).  That order fixes a
deterministic leading term, which in turn fixes canonical signs downstream.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import NotDivisibleError
from .rationals import ZERO, as_rational, content, rat_str

_BASE_RANK = {"q": 0, "z": 1, "t": 2, "u": 3, "v": 4}


def weil(i: int) -> str:
    """Name of the i-th Weil variable a_i, 1-based."""
    if i < 1:
        raise ValueError(f"Weil index must be >= 1, got {i}")
    return f"a{i}"


def var_rank(name: str) -> int:
    """Position of a variable in the canonical alphabet order."""
    r = _BASE_RANK.get(name)
    if r is not None:
        return r
    if name.startswith("a") and name[1:].isdigit() and int(name[1:]) >= 1:
        return 4 + int(name[1:])
    if name == "T":
        return 10**9
    raise ValueError(f"unknown variable {name!r}")


def _sort_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=var_rank))


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping[tuple, object] | None = None):
        vs = _sort_vars(vars)
        cleaned: dict[tuple, object] = {}
        if terms:
            for exps, c in terms.items():
                c = as_rational(c)
                if not c:
                    continue
                key = tuple(exps)
                prev = cleaned.get(key)
                s = c if prev is None else prev + c
                if s:
                    cleaned[key] = s
                elif prev is not None:
                    del cleaned[key]
        self.vars = vs
        self.terms = cleaned
        self._prune()

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, vs: tuple[str, ...], terms: dict) -> "LaurentPoly":
        """Trusted constructor: vars sorted, no zero coefficients, no unused vars."""
        self = object.__new__(cls)
        self.vars = vs
        self.terms = terms
        return self

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw((), {})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = as_rational(c)
        return cls._raw((), {(): c}) if c else cls._raw((), {})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.const(1)

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "LaurentPoly":
        var_rank(name)
        if exp == 0:
            return cls.one()
        return cls._raw((name,), {(exp,): as_rational(1)})

    @classmethod
    def monomial(cls, coef, exps: Mapping[str, int]) -> "LaurentPoly":
        coef = as_rational(coef)
        if not coef:
            return cls.zero()
        exps = {v: e for v, e in exps.items() if e}
        vs = _sort_vars(exps)
        return cls._raw(vs, {tuple(exps[v] for v in vs): coef})

    def _prune(self) -> None:
        """Remove variables whose exponent is zero in every term."""
        if not self.terms:
            if self.vars:
                self.vars = ()
            return
        used = [any(e[i] for e in self.terms) for i in range(len(self.vars))]
        if all(used):
            return
        keep = [i for i, u in enumerate(used) if u]
        vs = tuple(self.vars[i] for i in keep)
        terms: dict[tuple, object] = {}
        for e, c in self.terms.items():
            k = tuple(e[i] for i in keep)
            terms[k] = terms.get(k, ZERO) + c
        self.vars = vs
        self.terms = {e: c for e, c in terms.items() if c}

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): as_rational(1)} and not self.vars

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self):
        if self.vars:
            raise ValueError("not a constant polynomial")
        return self.terms.get((), ZERO)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.const(other)
            except (TypeError, ValueError, AttributeError):
                return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None

    # -- structure -------------------------------------------------------------

    def num_terms(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def min_degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return min(e[i] for e in self.terms)

    def leading_term(self) -> tuple[tuple, object]:
        """(exponents, coefficient) of the graded-lex maximal monomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self.terms, key=lambda e: (sum(e), e))
        return key, self.terms[key]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def terms_sorted(self, reverse: bool = False) -> list[tuple[tuple, object]]:
        """Terms in ascending graded-lex order (descending if reverse)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=reverse)

    def coefficient_map(self) -> dict[tuple, object]:
        return dict(self.terms)

    def exponents_of(self, name: str) -> dict[tuple, object]:
        """View as a polynomial in `name`: maps exponent -> LaurentPoly in the rest."""
        if name not in self.vars:
            return {0: self}
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[:i] + e[i + 1:]
            buckets.setdefault(e[i], {})[k] = c
        return {d: LaurentPoly._raw(rest, t)._copy_pruned() for d, t in buckets.items()}

    def _copy_pruned(self) -> "LaurentPoly":
        self._prune()
        return self

    # -- arithmetic ------------------------------------------------------------

    @staticmethod
    def _align(a: "LaurentPoly", b: "LaurentPoly"):
        if a.vars == b.vars:
            return a.vars, a.terms, b.terms
        vs = _sort_vars(a.vars + b.vars)
        return vs, _embed(a, vs), _embed(b, vs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        vs, ta, tb = self._align(self, other)
        out = dict(ta)
        for e, c in tb.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(vs, out)._copy_pruned()

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return LaurentPoly.zero()
        if other.is_constant():
            c = other.terms[()]
            return LaurentPoly._raw(self.vars, {e: v * c for e, v in self.terms.items()})
        if self.is_constant():
            c = self.terms[()]
            return LaurentPoly._raw(other.vars, {e: v * c for e, v in other.terms.items()})
        vs, ta, tb = self._align(self, other)
        if len(ta) > len(tb):
            ta, tb = tb, ta
        out: dict[tuple, object] = {}
        n = len(vs)
        for ea, ca in ta.items():
            for eb, cb in tb.items():
                k = tuple(ea[i] + eb[i] for i in range(n))
                s = out.get(k)
                out[k] = ca * cb if s is None else s + ca * cb
        out = {e: c for e, c in out.items() if c}
        return LaurentPoly._raw(vs, out)._copy_pruned()

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only defined for monomials")
            (e, c), = self.terms.items()
            return LaurentPoly._raw(self.vars, {tuple(x * k for x in e): as_rational(1) / c ** (-k)})._copy_pruned()
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- content, monomial factors ---------------------------------------------

    def rational_content(self):
        """Signed content: positive content times the sign of the leading coefficient."""
        if not self.terms:
            return ZERO
        c = content(self.terms.values())
        return -c if self.leading_coefficient() < 0 else c

    def content_primitive(self) -> tuple[object, "LaurentPoly"]:
        """Split self = c * P with P integer-coefficient, coprime, positive leading."""
        if not self.terms:
            return ZERO, self
        c = self.rational_content()
        prim = LaurentPoly._raw(self.vars, {e: as_rational(v / c) for e, v in self.terms.items()})
        return c, prim

    def monomial_shift(self) -> tuple[dict[str, int], "LaurentPoly"]:
        """Split off the monomial gcd: self = x^m * P with min exponent 0 per variable."""
        if not self.terms or not self.vars:
            return {}, self
        mins = [min(e[i] for e in self.terms) for i in range(len(self.vars))]
        if not any(mins):
            return {}, self
        shifted = {tuple(x - m for x, m in zip(e, mins)): c for e, c in self.terms.items()}
        mono = {v: m for v, m in zip(self.vars, mins) if m}
        return mono, LaurentPoly._raw(self.vars, shifted)._copy_pruned()

    def shift_by(self, mono: Mapping[str, int]) -> "LaurentPoly":
        """Multiply by the Laurent monomial x^mono."""
        mono = {v: e for v, e in mono.items() if e}
        if not mono or not self.terms:
            return self
        return self * LaurentPoly.monomial(1, mono)

    # -- substitution, Adams, evaluation -----------------------------------------

    def substitute(self, assignment: Mapping[str, object]) -> "LaurentPoly":
        """Substitute Laurent monomials (or nonzero constants) for variables.

        Values must be single nonzero monomials so that negative exponents
        of the replaced variable stay meaningful.
        """
        assignment = {v: _coerce_strict(val) for v, val in assignment.items() if v in self.vars}
        if not assignment:
            return self
        for v, val in assignment.items():
            if val.is_zero() or not val.is_monomial():
                raise ValueError(f"substitution for {v} must be a nonzero monomial, got {val}")
        parts: dict[str, tuple[object, dict[str, int]]] = {}
        for v, val in assignment.items():
            (exps, coef), = val.terms.items()
            parts[v] = (coef, dict(zip(val.vars, exps)))
        out: dict[tuple, object] = {}
        kept = [v for v in self.vars if v not in parts]
        new_vars = _sort_vars(kept + [w for _, ve in parts.values() for w in ve])
        idx = {v: i for i, v in enumerate(new_vars)}
        n = len(new_vars)
        for e, c in self.terms.items():
            acc = [0] * n
            coef = c
            for v, x in zip(self.vars, e):
                if not x:
                    continue
                sub = parts.get(v)
                if sub is None:
                    acc[idx[v]] += x
                else:
                    vc, ve = sub
                    if vc != 1:
                        coef = coef * vc ** x
                    for w, we in ve.items():
                        acc[idx[w]] += we * x
            k = tuple(acc)
            s = out.get(k)
            if s is None:
                out[k] = coef
            else:
                s = s + coef
                if s:
                    out[k] = s
                else:
                    del out[k]
        return LaurentPoly._raw(new_vars, out)._copy_pruned()

    def adams(self, k: int) -> "LaurentPoly":
        """Adams operation: every variable x is sent to x^k."""
        if k == 1:
            return self
        if k < 1:
            raise ValueError("Adams index must be a positive integer")
        return LaurentPoly._raw(self.vars, {tuple(x * k for x in e): c for e, c in self.terms.items()})

    def subs_int(self, name: str, value: int) -> "LaurentPoly":
        """Evaluate one variable at an integer (exponents of it must be >= 0)."""
        if name not in self.vars:
            return self
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        out: dict[tuple, object] = {}
        for e, c in self.terms.items():
            x = e[i]
            if x < 0:
                raise ValueError(f"cannot evaluate {name}^{x} at an integer")
            k = e[:i] + e[i + 1:]
            c = c * value ** x if x else c
            s = out.get(k)
            if s is None:
                if c:
                    out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return LaurentPoly._raw(rest, out)._copy_pruned()

    # -- division ----------------------------------------------------------------

    def exact_div(self, den: "LaurentPoly") -> "LaurentPoly":
        return exact_poly_divide(self, den)

    # -- rendering ---------------------------------------------------------------

    def _term_str(self, exps: tuple, coef) -> str:
        factors = []
        for v, e in zip(self.vars, exps):
            if e == 1:
                factors.append(v)
            elif e:
                factors.append(f"{v}^{e}")
        if not factors:
            return rat_str(coef)
        body = "*".join(factors)
        if coef == 1:
            return body
        if coef == -1:
            return f"-{body}"
        return f"{rat_str(coef)}*{body}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = [self._term_str(e, c) for e, c in self.terms_sorted()]
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, str)) or hasattr(x, "denominator"):
        return LaurentPoly.const(x)
    return NotImplemented


def _coerce_strict(x) -> LaurentPoly:
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")
    return c


def _embed(p: LaurentPoly, vs: tuple[str, ...]) -> dict:
    pos = [vs.index(v) for v in p.vars]
    n = len(vs)
    out = {}
    for e, c in p.terms.items():
        k = [0] * n
        for i, x in zip(pos, e):
            k[i] = x
        out[tuple(k)] = c
    return out


def exact_poly_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient num/den in the Laurent polynomial ring.

    Monomial factors are invertible, so they are split off first; the honest
    polynomial parts must divide exactly, otherwise NotDivisibleError is
    raised.  A nonzero remainder is a correctness alarm for the callers in
    this package, not a recoverable state.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero()
    mono_n, n_poly = num.monomial_shift()
    mono_d, d_poly = den.monomial_shift()
    if d_poly.is_constant():
        q = n_poly * LaurentPoly.const(as_rational(1) / d_poly.constant_value())
    else:
        q = _divide_honest(n_poly, d_poly)
    shift = dict(mono_n)
    for v, e in mono_d.items():
        shift[v] = shift.get(v, 0) - e
    return q.shift_by(shift)


def _divide_honest(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Leading-term division of honest polynomials; raises on nonzero remainder."""
    vs, tn, td = LaurentPoly._align(num, den)
    n = len(vs)
    lead_d = max(td, key=lambda e: (sum(e), e))
    cd = td[lead_d]
    rem = dict(tn)
    quot: dict[tuple, object] = {}
    while rem:
        lead_r = max(rem, key=lambda e: (sum(e), e))
        qe = tuple(lead_r[i] - lead_d[i] for i in range(n))
        if any(x < 0 for x in qe):
            raise NotDivisibleError(f"{num} is not divisible by {den}")
        qc = rem[lead_r] / cd
        quot[qe] = qc
        for e, c in td.items():
            k = tuple(qe[i] + e[i] for i in range(n))
            s = rem.get(k)
            if s is None:
                rem[k] = -qc * c
            else:
                s = s - qc * c
                if s:
                    rem[k] = s
                else:
                    del rem[k]
    return LaurentPoly._raw(vs, quot)._copy_pruned()


def even_total_degree_part(p: LaurentPoly) -> LaurentPoly:
    """Keep exactly the monomials u^i v^j with i + j even.

    Defined only for honest polynomials in u and v.
    """
    if not set(p.vars) <= {"u", "v"}:
        raise ValueError(f"even-part extraction expects a polynomial in u, v; got variables {p.vars}")
    if any(x < 0 for e in p.terms for x in e):
        raise ValueError("even-part extraction expects nonnegative exponents")
    kept = {e: c for e, c in p.terms.items() if sum(e) % 2 == 0}
    return LaurentPoly._raw(p.vars, kept)._copy_pruned()
