"""Tests for free-product moments computed straight from freeness."""

from fractions import Fraction

import pytest

from app.errors import InvalidArgumentError, TruncationExceededError
from app.models.power_series import NCSeries
from app.tools.freeprob import from_r_series, multiply_free_tuples, r_transform, restrict, unit_distribution
from app.tools.oracle import FreeProductOracle, componentwise_product_moments, free_product_centering


def direct_sum(f: NCSeries, g: NCSeries) -> NCSeries:
    """Cumulants of a free pair: f on letters 1..m, g shifted to m+1..m+n."""
    coeffs = dict(f.coeffs)
    coeffs.update({tuple(x + f.n for x in w): c for w, c in g.coeffs.items()})
    return NCSeries.trusted(f.n + g.n, min(f.max_degree, g.max_degree), coeffs)


def test_pure_words_come_from_inputs(make_distribution):
    mu_a, mu_b = make_distribution(2, 3), make_distribution(1, 3)
    oracle = FreeProductOracle(mu_a, mu_b)
    assert oracle.moment((1, 2, 2)) == mu_a.moment((1, 2, 2))
    assert oracle.moment((3, 3)) == mu_b.moment((1, 1))
    assert oracle.moment(()) == 1


def test_mixed_words(make_distribution):
    mu_a = make_distribution(1, 2, nonzero_mean=True)
    mu_b = make_distribution(1, 2, nonzero_mean=True)
    a1, a2 = mu_a.moment((1,)), mu_a.moment((1, 1))
    b1, b2 = mu_b.moment((1,)), mu_b.moment((1, 1))
    oracle = FreeProductOracle(mu_a, mu_b)
    assert oracle.moment((1, 2)) == a1 * b1
    assert oracle.moment((1, 1, 2)) == a2 * b1
    assert oracle.moment((1, 2, 1, 2)) == a2 * b1 ** 2 + a1 ** 2 * b2 - a1 ** 2 * b1 ** 2
    assert oracle.memo_size > 0


def test_centered_alternating_product_vanishes(make_distribution):
    mu_a, mu_b = make_distribution(1, 4), make_distribution(1, 4)
    oracle = FreeProductOracle(mu_a, mu_b)
    a1, b1 = mu_a.moment((1,)), mu_b.moment((1,))
    # phi((a - a1)(b - b1)(a - a1)(b - b1)) expanded by hand
    terms = {
        (1, 2, 1, 2): 1,
        (2, 1, 2): -a1, (1, 1, 2): -b1, (1, 2, 2): -a1, (1, 2, 1): -b1,
        (1, 2): 3 * a1 * b1, (2, 1): a1 * b1, (1, 1): b1 * b1, (2, 2): a1 * a1,
        (2,): -a1 * a1 * b1 - a1 * b1 * a1, (1,): -b1 * a1 * b1 - a1 * b1 * b1,
        (): a1 * a1 * b1 * b1,
    }
    total = Fraction(0)
    for word, weight in terms.items():
        total += weight * oracle.moment(word)
    assert total == 0


@pytest.mark.parametrize("d", [2, 4, 6])
def test_agrees_with_cumulant_direct_sum(d, make_distribution):
    mu_a, mu_b = make_distribution(1, d), make_distribution(1, d)
    expected = from_r_series(direct_sum(r_transform(mu_a), r_transform(mu_b)))
    assert free_product_centering(mu_a, mu_b, d) == expected


def test_two_plus_one_variables(make_distribution):
    mu_a, mu_b = make_distribution(2, 4, tracial=True), make_distribution(1, 4)
    joint = free_product_centering(mu_a, mu_b, 4)
    assert joint.n == 3
    assert restrict(joint, [1, 2]) == mu_a
    assert restrict(joint, [3]) == mu_b
    expected = from_r_series(direct_sum(r_transform(mu_a), r_transform(mu_b)))
    assert joint == expected


def test_componentwise_products_match_cumulant_product(make_distribution):
    for trial in range(20):
        n = 1 + trial % 2
        d = 4 if n == 1 else 3
        mu_a, mu_b = make_distribution(n, d), make_distribution(n, d)
        assert componentwise_product_moments(mu_a, mu_b, d) == multiply_free_tuples(mu_a, mu_b)


def test_componentwise_product_with_units(make_distribution):
    mu = make_distribution(2, 3)
    assert componentwise_product_moments(mu, unit_distribution(2, 3), 3) == mu


def test_missing_pure_moment_raises(make_distribution):
    oracle = FreeProductOracle(make_distribution(1, 2), make_distribution(1, 4))
    assert oracle.moment((2, 2, 2)) is not None
    with pytest.raises(TruncationExceededError):
        oracle.moment((1, 1, 1))
    with pytest.raises(InvalidArgumentError):
        oracle.moment((3,))


def test_degree_checks(make_distribution):
    with pytest.raises(TruncationExceededError):
        free_product_centering(make_distribution(1, 2), make_distribution(1, 4), 3)
    with pytest.raises(TruncationExceededError):
        componentwise_product_moments(make_distribution(1, 2), make_distribution(1, 2), 3)
    with pytest.raises(InvalidArgumentError):
        componentwise_product_moments(make_distribution(1, 2), make_distribution(2, 2), 2)
