"""Power series in T truncated at a fixed order, over rational functions.

Supports ordinary formal log/exp plus the plethystic pair built from Adams
operations:

    Exp f = exp( sum_{k>=1} psi_k(f) / k ),       f(0) = 0,
    Log f = sum_{k>=1} (mu(k)/k) psi_k(log f),    f(0) = 1,

where psi_k raises T and every coefficient variable to its k-th power.
Log is the unique two-sided inverse of Exp with this Adams action; the
round-trip identities are enforced by the test suite.  The truncation order
never needs a safety margin: the T^n coefficient of Log f depends only on
coefficients of f up to T^n.
"""

from __future__ import annotations

from .errors import OrderMismatchError
from .rationals import rational
from .ratfunc import RatFunc, _coerce_rf


def moebius(k: int) -> int:
    """Moebius function mu(k), k >= 1."""
    if k < 1:
        raise ValueError("moebius is defined for positive integers")
    if k == 1:
        return 1
    result = 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            result = -result
        d += 1
    if k > 1:
        result = -result
    return result


class TruncSeries:
    """Series sum c_m T^m, m = 0..order, with RatFunc coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        if coeffs is None:
            self.coeffs = [RatFunc.zero() for _ in range(order + 1)]
        else:
            coeffs = [_coerce_rf(c) for c in coeffs]
            if len(coeffs) != order + 1:
                raise ValueError(f"need {order + 1} coefficients, got {len(coeffs)}")
            self.coeffs = coeffs

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        s = cls(order)
        s.coeffs[0] = _coerce_rf(c)
        return s

    @classmethod
    def t_power(cls, m: int, order: int) -> "TruncSeries":
        s = cls(order)
        if m <= order:
            s.coeffs[m] = RatFunc.one()
        return s

    def coeff(self, m: int) -> RatFunc:
        return self.coeffs[m]

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(order, self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def _check_order(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.order)
        self._check_order(other)
        return TruncSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.order)
        return self + (-other)

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            c = _coerce_rf(other)
            return TruncSeries(self.order, [a * c for a in self.coeffs])
        self._check_order(other)
        n = self.order
        out = [RatFunc.zero() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(n, out)

    __rmul__ = __mul__

    def scalar_mul(self, c) -> "TruncSeries":
        c = _coerce_rf(c)
        return TruncSeries(self.order, [a * c for a in self.coeffs])

    def adams(self, k: int) -> "TruncSeries":
        """T^m -> T^{km} (overflow dropped), coefficients through psi_k."""
        if k < 1:
            raise ValueError("Adams index must be >= 1")
        if k == 1:
            return self
        out = [RatFunc.zero() for _ in range(self.order + 1)]
        for m, c in enumerate(self.coeffs):
            if m * k > self.order:
                break
            if not c.is_zero():
                out[m * k] = c.adams(k)
        return TruncSeries(self.order, out)

    def __str__(self) -> str:
        parts = []
        for m, c in enumerate(self.coeffs):
            if not c.is_zero():
                parts.append(f"({c})*T^{m}" if m else f"({c})")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(T^{self.order + 1})"

    __repr__ = __str__


def series_log(f: TruncSeries) -> TruncSeries:
    """Formal log; requires constant term 1.

    Recurrence from L' f = f': l_n = a_n - (1/n) sum_{k<n} k l_k a_{n-k}.
    """
    if not f.coeffs[0].is_one():
        raise ValueError("series_log needs constant term 1")
    n = f.order
    logs = [RatFunc.zero()]
    for m in range(1, n + 1):
        acc = f.coeffs[m]
        for k in range(1, m):
            if not logs[k].is_zero() and not f.coeffs[m - k].is_zero():
                acc = acc - logs[k] * f.coeffs[m - k] * rational(k, m)
        logs.append(acc)
    return TruncSeries(n, logs)


def series_exp(f: TruncSeries) -> TruncSeries:
    """Formal exp; requires constant term 0.

    Recurrence from E' = f' E: n e_n = sum_{k<=n} k f_k e_{n-k}.
    """
    if not f.coeffs[0].is_zero():
        raise ValueError("series_exp needs constant term 0")
    n = f.order
    exps = [RatFunc.one()]
    for m in range(1, n + 1):
        acc = RatFunc.zero()
        for k in range(1, m + 1):
            if not f.coeffs[k].is_zero() and not exps[m - k].is_zero():
                acc = acc + f.coeffs[k] * exps[m - k] * rational(k, m)
        exps.append(acc)
    return TruncSeries(n, exps)


def plethystic_log(f: TruncSeries) -> TruncSeries:
    """Log f = sum_{k=1}^{N} (mu(k)/k) psi_k(log f); inverse of plethystic_exp."""
    if not f.coeffs[0].is_one():
        raise ValueError("plethystic Log needs constant term 1")
    base = series_log(f)
    acc = TruncSeries(f.order)
    for k in range(1, f.order + 1):
        mu = moebius(k)
        if mu:
            acc = acc + base.adams(k).scalar_mul(rational(mu, k))
    return acc


def plethystic_exp(f: TruncSeries) -> TruncSeries:
    """Exp f = exp(sum_{k=1}^{N} psi_k(f)/k); requires constant term 0."""
    if not f.coeffs[0].is_zero():
        raise ValueError("plethystic Exp needs constant term 0")
    acc = TruncSeries(f.order)
    for k in range(1, f.order + 1):
        acc = acc + f.adams(k).scalar_mul(rational(1, k))
    return series_exp(acc)
