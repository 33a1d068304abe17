from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import rationals
from divweyl import _arith
from divweyl.numberfield import (FieldError, NormStatus, UniPoly, apply_automorphism,
                                 bounded_norm_search, custom_field, cyclotomic_field, field_norm,
                                 field_norm_trace, gaussian_period_field, is_galois_norm, is_inert,
                                 quadratic_field, rational)


def elements(K, num=9, den=4):
    return st.lists(rationals(num, den), min_size=K.degree, max_size=K.degree).map(K)


def resultant_norm(K, a):
    """Independent exact norm: Res(f, g) for monic f equals N(g(theta))."""
    t = sympy.Symbol("t")
    f = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(K.defining_poly.coeffs))
    g = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(a.coeffs))
    r = sympy.resultant(f, g, t)
    return Fraction(int(sympy.fraction(r)[0]), int(sympy.fraction(r)[1]))


# ---------------------------------------------------------------- construction


def test_quadratic_field_data(gauss):
    assert gauss.defining_poly == UniPoly.from_ints([1, 0, 1])
    assert gauss.sigma_image == UniPoly.from_ints([0, -1])
    assert gauss.degree == 2


def test_cyclotomic_five(cyclo5):
    assert cyclo5.defining_poly == UniPoly.from_ints([1, 1, 1, 1, 1])
    assert cyclo5.sigma_image == UniPoly.monomial(2)
    assert cyclo5.degree == 4


def test_cubic_field_data(cubic):
    f, s = cubic.defining_poly, cubic.sigma_image
    assert (f.compose(s) % f).is_zero()
    s2 = s.compose(s) % f
    assert s.compose(s2) % f == UniPoly.monomial(1)


def test_sigma_has_exact_order(field):
    t = field.gen()
    d = field.degree
    assert apply_automorphism(field, d, t) == t
    assert all(apply_automorphism(field, k, t) != t for k in range(1, d))


@pytest.mark.parametrize("f, s", [
    ([1, 0, 1], [0, 1]),            # sigma = identity
    ([-2, 0, 1], [1, 1]),           # t + 1 is not a root of t^2 - 2
    ([1, 0, 2], [0, -1]),           # not monic
    ([-1, 0, 1], [0, -1]),          # t^2 - 1 is reducible
])
def test_bad_field_data_rejected(f, s):
    with pytest.raises(FieldError):
        custom_field(f, s)


@pytest.mark.parametrize("m", [0, 1, 4, -8])
def test_quadratic_rejects_non_squarefree(m):
    with pytest.raises(FieldError):
        quadratic_field(m)


@pytest.mark.parametrize("p, d", [(7, 3), (11, 5), (13, 4), (13, 6), (17, 8), (19, 9), (29, 7)])
def test_gaussian_period_fields(p, d):
    K = gaussian_period_field(p, d)
    assert K.degree == d
    t = sympy.Symbol("t")
    f = sum(int(c) * t**i for i, c in enumerate(K.defining_poly.coeffs))
    assert sympy.Poly(f, t).is_irreducible
    # the field discriminant is +-p^(d-1); disc(f) differs from it by the square of an index
    disc = abs(int(sympy.discriminant(f, t)))
    assert disc % p ** (d - 1) == 0
    assert _arith.is_square(disc // p ** (d - 1))


def test_rational_parsing():
    assert rational("3/6") == Fraction(1, 2)
    assert rational("-7") == -7
    with pytest.raises(ValueError):
        rational("0.5")


# ---------------------------------------------------------------- arithmetic


def test_gaussian_integer_examples(gauss):
    i = gauss.gen()
    assert (1 + i) * (1 - i) == 2
    assert i.inverse() == -i
    assert apply_automorphism(gauss, 1, 3 + 2 * i) == 3 - 2 * i
    assert field_norm_trace(gauss, 1 + i) == (2, 2)


def test_sqrt2_inverse():
    K = quadratic_field(2)
    r = K.gen()
    assert (1 + r).inverse() == -1 + r


def test_cyclotomic_sigma_squares(cyclo5):
    z = cyclo5.gen()
    assert apply_automorphism(cyclo5, 1, z) == z * z


def test_cubic_examples(cubic):
    eta = cubic.gen()
    s = UniPoly.from_ints([-2, 0, 1])
    assert apply_automorphism(cubic, 2, eta) == cubic(s.compose(s) % cubic.defining_poly)
    assert field_norm_trace(cubic, eta) == (1, -1)


@given(st.integers(-9, 9), st.integers(-9, 9), st.sampled_from([-7, -5, -1, 2, 3, 6, 13]))
def test_quadratic_norm_closed_form(a, b, m):
    K = quadratic_field(m)
    z = K([a, b])
    assert field_norm_trace(K, z) == (a * a - m * b * b, 2 * a)


@given(st.data())
def test_field_laws(field, data):
    u = data.draw(elements(field))
    w = data.draw(elements(field))
    assert field_norm(field, u * w) == field_norm(field, u) * field_norm(field, w)
    assert field_norm_trace(field, u + w)[1] == field_norm_trace(field, u)[1] + field_norm_trace(field, w)[1]
    assert field_norm(field, u.sigma()) == field_norm(field, u)
    if not u.is_zero():
        assert u * u.inverse() == 1


@given(st.data())
def test_norm_matches_resultant_and_floating_roots(field, data):
    u = data.draw(elements(field, 5, 3))
    exact = field_norm(field, u)
    assert exact == resultant_norm(field, u)
    roots = np.roots([float(c) for c in reversed(field.defining_poly.coeffs)])
    approx = np.prod([sum(float(c) * r**i for i, c in enumerate(u.coeffs)) for r in roots]).real
    assert approx == pytest.approx(float(exact), rel=1e-8, abs=1e-8)


# ---------------------------------------------------------------- norms


def test_norm_examples(gauss, cubic):
    assert is_galois_norm(gauss, 3).status is NormStatus.NO
    res = is_galois_norm(gauss, 2)
    assert res.status is NormStatus.YES and field_norm(gauss, res.witness) == 2
    for K in (gauss, cubic, cyclotomic_field(7)):
        assert is_galois_norm(K, 1).witness == 1


def direct_quadratic_witness(m, c, bound=8):
    vals = [Fraction(p, q) for q in range(1, bound + 1) for p in range(-bound, bound + 1)]
    for x in vals:
        for y in vals:
            if x * x - m * y * y == c:
                return x, y
    return None


@given(st.sampled_from([-1, -2, -3, 2, 3, 5, -5, 6]), rationals(12, 4, nonzero=True))
def test_quadratic_norm_decision_agrees_with_search(m, c):
    K = quadratic_field(m)
    res = is_galois_norm(K, c)
    if res.status is NormStatus.YES and res.witness is not None:
        assert field_norm(K, res.witness) == c
    if direct_quadratic_witness(m, c, 4) is not None:
        assert res.status is NormStatus.YES


def test_bounded_search_finds_norms_of_small_elements(cubic, cyclo5):
    for K, coeffs in [(cubic, [1, 1, 0]), (cubic, [2, 0, 1]), (cyclo5, [1, 1, 0, 0]),
                      (cyclo5, [2, -1, 0, 1])]:
        u = K(coeffs)
        c = field_norm(K, u)
        w = bounded_norm_search(K, c, 2)
        assert w is not None and field_norm(K, w) == c


def test_higher_degree_never_says_no(cubic):
    res = is_galois_norm(cubic, 2, height_bound=2)
    # 2 is inert in the cubic field, so it is not a norm; the search can only say Unknown
    assert res.status is NormStatus.UNKNOWN


@pytest.mark.parametrize("ell", [5, 7, 11, 13])
def test_inert_primes_in_cyclotomic_fields(ell):
    K = cyclotomic_field(ell)
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23]:
        expect = p != ell and _arith.multiplicative_order(p, ell) == ell - 1
        assert is_inert(K, p) == expect, p


@pytest.mark.parametrize("ell, d", [(7, 3), (11, 5), (13, 4), (29, 7), (17, 8)])
def test_inert_primes_in_period_fields(ell, d):
    K = gaussian_period_field(ell, d)
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 31]:
        if p == ell:
            assert not is_inert(K, p)
            continue
        # p is inert exactly when its class generates (Z/ell)^x / (subgroup of index d)
        k = _arith.multiplicative_order(p, ell)
        order_in_quotient = k // np.gcd(k, (ell - 1) // d)
        assert is_inert(K, p) == (order_in_quotient == d), p
