"""Tests for the one-variable S-transform."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.errors import InvalidArgumentError, NotInvertibleError
from app.models.power_series import SSeries
from app.tools.freeprob import free_poisson, multiply_free_tuples, r_transform, semicircular, unit_distribution
from app.tools.s_transform import f_transform, multiply_s_series, s_transform_1d
from app.tools.series import boxstar


def test_unit_has_trivial_transform():
    assert s_transform_1d(unit_distribution(1, 5)).coefficients == (1, 0, 0, 0, 0)


def test_free_poisson_transform():
    # S(z) = 1 / (1 + z) for rate and jump size one
    assert s_transform_1d(free_poisson(1, 1, 4)).coefficients == (1, -1, 1, -1)


def test_first_coefficient_is_inverse_mean(make_distribution):
    mu = make_distribution(1, 3, nonzero_mean=True)
    assert s_transform_1d(mu).coefficients[0] == 1 / mu.moment((1,))


def test_transform_is_multiplicative(make_distribution):
    for _ in range(4):
        mu_a = make_distribution(1, 4, nonzero_mean=True)
        mu_b = make_distribution(1, 4, nonzero_mean=True)
        product = multiply_free_tuples(mu_a, mu_b)
        expected = multiply_s_series(s_transform_1d(mu_a), s_transform_1d(mu_b))
        assert s_transform_1d(product) == expected


def test_f_transform_turns_boxstar_into_product(make_series):
    for _ in range(4):
        f = make_series(1, 4, invertible=True)
        g = make_series(1, 4, invertible=True)
        assert f_transform(boxstar(f, g)) == multiply_s_series(f_transform(f), f_transform(g))


def test_f_transform_of_cumulants(make_distribution):
    mu = make_distribution(1, 5, nonzero_mean=True)
    assert f_transform(r_transform(mu)) == s_transform_1d(mu)


def test_transform_preconditions(make_distribution):
    with pytest.raises(NotInvertibleError):
        s_transform_1d(semicircular(1, 4))
    with pytest.raises(InvalidArgumentError):
        s_transform_1d(make_distribution(2, 3, nonzero_mean=True))
    with pytest.raises(InvalidArgumentError):
        s_transform_1d(make_distribution(1, 1, nonzero_mean=True))


def test_s_series_model():
    beta = SSeries(coefficients=("1", "1/2", 0))
    assert beta.precision == 3
    assert beta.truncate(2).coefficients == (1, Fraction(1, 2))
    with pytest.raises(ValidationError):
        SSeries(coefficients=(0, 1))
    with pytest.raises(InvalidArgumentError):
        beta.truncate(4)


def test_product_uses_smaller_precision():
    left = SSeries(coefficients=(1, 1, 1))
    right = SSeries(coefficients=(2, 1))
    assert multiply_s_series(left, right).coefficients == (2, 3)
