"""Tests for the boxed-star calculus on truncated series."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.errors import InvalidArgumentError, NotInvertibleError, TruncationExceededError
from app.models.partition import NCPartition
from app.models.power_series import NCSeries, words
from app.tools.nc_lattice import enumerate_nc
from app.tools.series import (
    add,
    boxstar,
    boxstar_coef,
    boxstar_inverse,
    coef,
    coef_pi,
    coef_pi_star,
    dilate,
    has_no_cross_terms,
    lift_diagonal,
    moebius,
    scale,
    sqsum,
    sum_series,
    truncate,
    zeta,
)


def series(n: int, d: int, coeffs: dict) -> NCSeries:
    return NCSeries(n=n, max_degree=d, coeffs=coeffs)


# Construction and coefficients


def test_series_drops_zero_coefficients():
    f = series(1, 2, {"1": "0", "1,1": "1/2"})
    assert f.coeffs == {(1, 1): Fraction(1, 2)}
    assert f == series(1, 2, {(1, 1): Fraction(2, 4)})


def test_series_rejects_bad_words():
    with pytest.raises(ValidationError):
        series(2, 2, {"1,3": 1})
    with pytest.raises(ValidationError):
        series(1, 2, {"1,1,1": 1})
    with pytest.raises(ValidationError):
        series(1, 2, {"1": 0.5})


def test_coefficient_lookup():
    f = zeta(2, 3)
    assert coef(f, (1, 2, 1)) == 1
    assert coef(sum_series(2, 3), (1, 2)) == 0
    assert coef(moebius(1, 3), (1, 1, 1)) == 2
    with pytest.raises(InvalidArgumentError):
        coef(f, (3,))
    with pytest.raises(InvalidArgumentError):
        coef(f, ())
    with pytest.raises(TruncationExceededError) as info:
        coef(f, (1, 1, 1, 1))
    assert info.value.needed == 4 and info.value.available == 3


def test_coef_pi():
    f = series(2, 4, {"1,1": 3, "2": 5, "1": 7})
    pi = NCPartition.parse("1,3|2|4")
    assert coef_pi(f, (1, 2, 1, 2), pi) == 3 * 5 * 5
    assert coef_pi(f, (1, 2, 1, 2), NCPartition.one(4)) == 0
    assert coef_pi(f, (1, 1), NCPartition.one(2)) == coef(f, (1, 1))
    for pi in enumerate_nc(4):
        assert coef_pi(zeta(2, 4), (2, 1, 1, 2), pi) == 1
    with pytest.raises(InvalidArgumentError):
        coef_pi(f, (1, 2), NCPartition.one(3))


# Boxed star


def test_boxstar_small_example():
    f = series(1, 2, {"1": 1, "1,1": 1})
    h = boxstar(f, f)
    assert h.coefficient((1,)) == 1
    assert h.coefficient((1, 1)) == 2


def test_boxstar_coef_agrees_with_full_product(make_series):
    f, g = make_series(2, 4), make_series(2, 4)
    h = boxstar(f, g)
    for word in words(2, 4):
        assert boxstar_coef(f, g, word) == h.coefficient(word)


def test_boxstar_truncates_at_smaller_degree(make_series):
    f, g = make_series(2, 5), make_series(2, 3)
    h = boxstar(f, g)
    assert h.max_degree == 3
    assert h == boxstar(truncate(f, 3), g)


def test_boxstar_needs_same_variables():
    with pytest.raises(InvalidArgumentError):
        boxstar(zeta(1, 3), zeta(2, 3))


def test_zero_series_absorbs(make_series):
    f = make_series(2, 4)
    assert boxstar(NCSeries.zero(2, 4), f).is_zero()
    assert boxstar(f, NCSeries.zero(2, 4)).is_zero()


@pytest.mark.parametrize("n", [1, 2])
def test_sum_is_neutral(n, make_series):
    f = make_series(n, 5)
    assert boxstar(f, sum_series(n, 5)) == f
    assert boxstar(sum_series(n, 5), f) == f


@pytest.mark.parametrize("n,d", [(1, 8), (2, 8), (3, 6)])
def test_zeta_and_moebius_are_inverse(n, d):
    assert boxstar(zeta(n, d), moebius(n, d)) == sum_series(n, d)
    assert boxstar(moebius(n, d), zeta(n, d)) == sum_series(n, d)


def test_moebius_coefficients():
    values = [coef(moebius(1, 6), (1,) * k) for k in range(1, 7)]
    assert values == [1, -1, 2, -5, 14, -42]


def test_inverse_of_zeta_is_moebius():
    assert boxstar_inverse(zeta(1, 8)) == moebius(1, 8)
    assert boxstar_inverse(zeta(2, 6)) == moebius(2, 6)
    assert boxstar_inverse(sum_series(3, 4)) == sum_series(3, 4)


@pytest.mark.parametrize("n", [1, 2])
def test_inverse_is_two_sided(n, make_series):
    f = make_series(n, 5, invertible=True)
    inverse = boxstar_inverse(f)
    assert boxstar(f, inverse) == sum_series(n, 5)
    assert boxstar(inverse, f) == sum_series(n, 5)


def test_inverse_needs_linear_terms():
    with pytest.raises(NotInvertibleError):
        boxstar_inverse(series(2, 3, {"1": 1, "2,2": 1}))


def test_boxstar_is_associative(make_series):
    for trial in range(54):
        n = 1 + trial % 3
        d = 5 if n < 3 else 4
        f, g, h = make_series(n, d, 0.6), make_series(n, d, 0.6), make_series(n, d, 0.6)
        assert boxstar(boxstar(f, g), h) == boxstar(f, boxstar(g, h))


def test_zeta_and_moebius_are_central(make_series):
    f = make_series(2, 5)
    assert boxstar(zeta(2, 5), f) == boxstar(f, zeta(2, 5))
    assert boxstar(moebius(2, 5), f) == boxstar(f, moebius(2, 5))


def test_one_variable_product_commutes(make_series):
    for _ in range(5):
        f, g = make_series(1, 6), make_series(1, 6)
        assert boxstar(f, g) == boxstar(g, f)


def test_product_does_not_commute_in_two_variables():
    f = series(2, 3, {"1": 1, "2": 1, "1,2": 1})
    g = series(2, 3, {"1": 1, "2": 1, "2,1": 1})
    assert boxstar(f, g).coefficient((1, 2, 1)) == 1
    assert boxstar(g, f).coefficient((1, 2, 1)) == 0


def test_truncation_is_stable(make_series):
    f, g = make_series(2, 5), make_series(2, 5)
    assert truncate(boxstar(f, g), 3) == boxstar(truncate(f, 3), truncate(g, 3))


def test_coef_pi_star_matches_product(make_series):
    f, g = make_series(2, 4), make_series(2, 4)
    h = boxstar(f, g)
    for word in list(words(2, 3)) + [(1, 2, 2, 1)]:
        for rho in enumerate_nc(len(word)):
            assert coef_pi_star(f, g, word, rho) == coef_pi(h, word, rho)
        assert coef_pi_star(f, g, word, NCPartition.one(len(word))) == h.coefficient(word)


# Dilation, scaling, sums


def test_dilate():
    f = zeta(1, 4)
    assert dilate(f, 1) == f
    assert dilate(f, Fraction(1, 2)).coefficient((1, 1, 1)) == Fraction(1, 8)
    assert dilate(f, 0).is_zero()


def test_dilation_moves_across_the_product(make_series):
    r = Fraction(2, 3)
    f, g = make_series(2, 4), make_series(2, 4)
    expected = dilate(boxstar(f, g), r)
    assert boxstar(dilate(f, r), g) == expected
    assert boxstar(f, dilate(g, r)) == expected


def test_dilating_both_factors_dilates_twice():
    r = Fraction(2, 3)
    f = series(1, 2, {"1": 1})
    assert boxstar(dilate(f, r), dilate(f, r)).coefficient((1,)) == r * r
    assert dilate(boxstar(f, f), r).coefficient((1,)) == r


def test_scaling_both_factors(make_series):
    f, g = make_series(2, 4), make_series(2, 4)
    assert boxstar(scale(f, 3), scale(g, 3)) == dilate(scale(boxstar(f, g), 3), 3)


def test_scaling_one_factor(make_series):
    r = Fraction(1, 2)
    f, g = make_series(2, 4), make_series(2, 4)
    lhs = scale(boxstar(f, scale(g, r)), 1 / r)
    rhs = boxstar(dilate(scale(f, 1 / r), r), g)
    assert lhs == rhs


def test_add():
    f = series(1, 2, {"1": 1, "1,1": 2})
    g = series(1, 2, {"1": -1, "1,1": "1/2"})
    assert add(f, g) == series(1, 2, {"1,1": "5/2"})
    with pytest.raises(InvalidArgumentError):
        add(f, zeta(1, 3))


# Diagonal lift and Sqsum


def test_lift_diagonal():
    assert lift_diagonal(zeta(1, 4), 3) == zeta(3, 4)
    assert lift_diagonal(moebius(1, 4), 2) == moebius(2, 4)
    lifted = lift_diagonal(series(1, 2, {"1,1": 5}), 2)
    assert lifted.coeffs == {w: 5 for w in words(2, 2)}
    with pytest.raises(InvalidArgumentError):
        lift_diagonal(zeta(2, 2), 2)


def test_lift_diagonal_is_homomorphism(make_series):
    f, g = make_series(1, 5), make_series(1, 5)
    assert lift_diagonal(boxstar(f, g), 2) == boxstar(lift_diagonal(f, 2), lift_diagonal(g, 2))


def test_sqsum():
    one = sqsum(1)
    assert one.n == 2 and one.max_degree == 2
    assert one.coeffs == {(1, 1): 1, (1, 2): 1, (2, 1): 1, (2, 2): 1}
    assert coef(one, (1,)) == 0
    assert coef(sqsum(2), (1, 2, 3)) == 0
    assert sqsum(2) == lift_diagonal(series(1, 4, {"1,1": 1}), 4)
    with pytest.raises(InvalidArgumentError):
        sqsum(0)


def test_has_no_cross_terms():
    groups = [[1], [2]]
    assert has_no_cross_terms(series(2, 3, {"1,1": 1, "2": 4}), groups)
    assert not has_no_cross_terms(series(2, 3, {"1,2,1": 1}), groups)
    assert has_no_cross_terms(series(2, 3, {"1,2,1": 1}), groups, d=2)
    with pytest.raises(InvalidArgumentError):
        has_no_cross_terms(zeta(2, 2), [[1, 2]])
    with pytest.raises(TruncationExceededError):
        has_no_cross_terms(zeta(2, 2), groups, d=3)
