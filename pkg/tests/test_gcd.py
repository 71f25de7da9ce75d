from hypothesis import given, settings, strategies as st

from higgs_ic.gcd import _gcd_prs_univ, _to_ulist, gcd_univ_int, poly_gcd
from higgs_ic.laurent import LaurentPoly, exact_poly_divide

t = LaurentPoly.var("t")
q = LaurentPoly.var("q")
z = LaurentPoly.var("z")
a1 = LaurentPoly.var("a1")


def is_one(p):
    return p.is_one()


def test_univariate_known_gcds():
    assert poly_gcd(t ** 2 - 1, t - 1) == t - 1
    assert poly_gcd((t - 1) ** 3 * (t + 2), (t - 1) * (t + 3)) == t - 1
    assert is_one(poly_gcd(t ** 2 + 1, t - 1))


def test_gcd_includes_monomial_part_for_honest_inputs():
    assert poly_gcd(t ** 2, t) == t
    assert poly_gcd(t ** 2 * (t - 1), t * (t - 1) ** 2) == t * (t - 1)


def test_gcd_with_zero_and_constants():
    assert poly_gcd(LaurentPoly.zero(), 2 * (t - 1)) == t - 1
    assert is_one(poly_gcd(LaurentPoly.const(6), t - 1))


def test_bivariate_gcd_with_shared_factor():
    c = (t - 1) ** 2 * (t + 1) * (z ** 2 - t)
    a = c * (t * z + 1)
    b = c * (z + t ** 2)
    g = poly_gcd(a, b)
    assert exact_poly_divide(a, g) is not None
    # the cofactors are coprime, so the gcd is exactly c up to normalization
    assert g == c.content_primitive()[1]


def test_bivariate_gcd_coprime_fast_path():
    a = (t ** 3 - z) * (t + z)
    b = (t ** 3 + z) * (t - z) + 1
    assert is_one(poly_gcd(a, b))


def test_variable_mismatch_reduces_to_content():
    # q appears only on one side: the answer lives in the shared variables
    a = (q + 1) * (z - 1) ** 2
    b = (z - 1) * (z + 3)
    assert poly_gcd(a, b) == z - 1


def test_trivariate_prs_path():
    c = q * z - a1
    a = c * (q + z + a1)
    b = c * (q - z + 1)
    assert poly_gcd(a, b) == c


def test_non_squarefree_shared_factor():
    c = (t - 1) ** 8 * (t ** 2 + z) ** 3
    a = c * (t + z) ** 2
    b = c * (t - z) ** 2
    assert poly_gcd(a, b) == c.content_primitive()[1]


def test_huge_coefficients_univariate():
    shared = (t ** 6 - 1) * (t ** 10 - 1)
    a = shared * (3 * t ** 7 + 12345678901234567890 * t - 7)
    b = shared * (t ** 3 + 2)
    g = poly_gcd(a, b)
    assert exact_poly_divide(a, g) is not None
    assert exact_poly_divide(shared, g) is not None  # g == shared up to content


def test_deep_bivariate_like_the_series_denominators():
    c = (t ** 4 - z ** 6) * (t ** 2 - z ** 5) * (1 - z) ** 3
    a = c * ((t ** 3 - z ** 2) ** 2 + 1)
    b = c * (t ** 5 + z ** 4 + 3)
    assert poly_gcd(a, b) == c.content_primitive()[1]


def test_modular_univariate_matches_prs():
    f = [6, -5, 1, 0, 2]   # 6 - 5x + x^2 + 2x^4
    g = [2, 3, 1]
    assert gcd_univ_int(f, g) == _gcd_prs_univ(f, g)
    shared = [1, 4, 1]
    fa = _mul_list(f, shared)
    ga = _mul_list(g, shared)
    assert gcd_univ_int(fa, ga) == _mul_list(gcd_univ_int(f, g), shared)


def _mul_list(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@st.composite
def small_polys(draw, names=("t", "z")):
    n_terms = draw(st.integers(1, 3))
    p = LaurentPoly.zero()
    for _ in range(n_terms):
        exps = {name: draw(st.integers(0, 2)) for name in names}
        p = p + LaurentPoly.monomial(draw(st.integers(-3, 3)), exps)
    return p


@settings(max_examples=60, deadline=None)
@given(small_polys(), small_polys(), small_polys())
def test_gcd_divides_both_and_recovers_common_factor(a, b, c):
    if a.is_zero() or b.is_zero() or c.is_zero():
        return
    g = poly_gcd(a * c, b * c)
    exact_poly_divide(a * c, g)
    exact_poly_divide(b * c, g)
    # c (up to content) must divide the gcd
    exact_poly_divide(g, c.content_primitive()[1])


@settings(max_examples=40, deadline=None)
@given(small_polys(names=("t",)), small_polys(names=("t",)))
def test_univariate_gcd_agrees_with_prs_oracle(a, b):
    if a.is_zero() or b.is_zero() or a.is_constant() or b.is_constant():
        return
    _, pa = a.monomial_shift()[1].content_primitive()
    _, pb = b.monomial_shift()[1].content_primitive()
    if pa.is_constant() or pb.is_constant():
        return
    assert gcd_univ_int(_to_ulist(pa), _to_ulist(pb)) == _gcd_prs_univ(_to_ulist(pa), _to_ulist(pb))
