import random

import pytest

from higgs_ic.errors import OrderMismatchError
from higgs_ic.laurent import LaurentPoly
from higgs_ic.ratfunc import RatFunc
from higgs_ic.series import (TruncSeries, moebius, plethystic_exp, plethystic_log,
                             series_exp, series_log)


def T(order):
    return TruncSeries.t_power(1, order)


def geometric(order):
    """1/(1-T) truncated: all coefficients 1."""
    return TruncSeries(order, [RatFunc.one()] * (order + 1))


def test_series_arith_examples():
    one = TruncSeries.constant(1, 2)
    s = (one + T(2)) * (one - T(2))
    assert s == TruncSeries(2, [1, 0, -1])
    short = (TruncSeries.constant(1, 1) + T(1)) * (TruncSeries.constant(1, 1) + T(1))
    assert short == TruncSeries(1, [1, 2])
    a = TruncSeries(3, [1, 2, 3, 4])
    assert a + TruncSeries(3) == a


def test_order_mismatch_is_an_error():
    with pytest.raises(OrderMismatchError):
        TruncSeries(2) + TruncSeries(3)
    with pytest.raises(OrderMismatchError):
        TruncSeries(2) * TruncSeries(3)


def test_log_of_geometric_series():
    got = series_log(geometric(3))
    assert got == TruncSeries(3, [0, 1, RatFunc.const("1/2"), RatFunc.const("1/3")])


def test_exp_of_zero_and_preconditions():
    assert series_exp(TruncSeries(4)) == TruncSeries.constant(1, 4)
    with pytest.raises(ValueError):
        series_log(TruncSeries(3))
    with pytest.raises(ValueError):
        series_exp(TruncSeries.constant(1, 3))


def test_exp_log_round_trip_with_coefficient():
    c = RatFunc(LaurentPoly.var("q") - 1, LaurentPoly.var("z") + 2)
    f = TruncSeries(5, [RatFunc.one(), c, RatFunc.zero(), RatFunc.zero(),
                        RatFunc.zero(), RatFunc.zero()])
    assert series_exp(series_log(f)) == f


def test_series_adams():
    s = TruncSeries(4, [0, 1, 0, 0, 0])
    assert s.adams(2) == TruncSeries(4, [0, 0, 1, 0, 0])
    q = RatFunc(LaurentPoly.var("q"))
    s = TruncSeries(4, [0, q, 0, 0, 0])
    q2 = RatFunc(LaurentPoly.var("q", 2))
    assert s.adams(2) == TruncSeries(4, [0, 0, q2, 0, 0])
    assert s.adams(1) is s


def test_adams_is_multiplicative():
    rng = random.Random(7)
    def rand_series():
        return TruncSeries(4, [RatFunc.const(rng.randrange(-3, 4)) *
                               RatFunc(LaurentPoly.monomial(1, {"q": rng.randrange(0, 2)}))
                               for _ in range(5)])
    for _ in range(5):
        f, g = rand_series(), rand_series()
        assert (f * g).adams(2) == f.adams(2) * g.adams(2)


def test_moebius_values():
    assert [moebius(k) for k in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    with pytest.raises(ValueError):
        moebius(0)


def test_plethystic_log_of_geometric_is_t():
    assert plethystic_log(geometric(6)) == TruncSeries.t_power(1, 6)


def test_plethystic_log_of_one_is_zero():
    assert plethystic_log(TruncSeries.constant(1, 4)) == TruncSeries(4)


def test_plethystic_exp_of_t_is_geometric():
    assert plethystic_exp(T(4)) == geometric(4)
    assert plethystic_exp(TruncSeries(3)) == TruncSeries.constant(1, 3)


def test_plethystic_preconditions():
    with pytest.raises(ValueError):
        plethystic_log(TruncSeries(3))
    with pytest.raises(ValueError):
        plethystic_exp(TruncSeries.constant(1, 3))


def _random_series(rng, order, constant):
    coeffs = [RatFunc.const(constant)]
    for _ in range(order):
        num = LaurentPoly.monomial(rng.randrange(-2, 3), {"q": rng.randrange(0, 2)}) + rng.randrange(-1, 2)
        den = LaurentPoly.var("z") + rng.randrange(1, 3)
        coeffs.append(RatFunc(num, den))
    return TruncSeries(order, coeffs)


def test_round_trips_on_random_series():
    rng = random.Random(20230915)
    for _ in range(8):
        f = _random_series(rng, 5, 0)
        assert plethystic_log(plethystic_exp(f)) == f
        F = _random_series(rng, 5, 1)
        assert plethystic_exp(plethystic_log(F)) == F


def test_log_turns_products_into_sums():
    rng = random.Random(42)
    for _ in range(5):
        F = _random_series(rng, 4, 1)
        G = _random_series(rng, 4, 1)
        assert plethystic_log(F * G) == plethystic_log(F) + plethystic_log(G)


def test_exp_turns_sums_into_products():
    rng = random.Random(43)
    for _ in range(5):
        f = _random_series(rng, 4, 0)
        g = _random_series(rng, 4, 0)
        assert plethystic_exp(f + g) == plethystic_exp(f) * plethystic_exp(g)
