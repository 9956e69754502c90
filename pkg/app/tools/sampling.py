"""Seeded random rational inputs for verification runs and tests."""

import random
from fractions import Fraction
from typing import Optional

from app.models.distribution import JointDistribution
from app.models.power_series import NCSeries, Word, words_upto


def random_scalar(
    rng: random.Random,
    max_numerator: int = 4,
    max_denominator: int = 3,
    nonzero: bool = False,
) -> Fraction:
    """A small random rational p/q with |p| <= max_numerator and 1 <= q <= max_denominator."""
    while True:
        value = Fraction(rng.randint(-max_numerator, max_numerator), rng.randint(1, max_denominator))
        if value or not nonzero:
            return value


def _rotation_class(word: Word) -> Word:
    return min(word[shift:] + word[:shift] for shift in range(len(word)))


def random_distribution(
    n: int,
    d: int,
    rng: random.Random,
    tracial: bool = False,
    nonzero_mean: bool = False,
) -> JointDistribution:
    """Random moment data on n variables through degree d.

    Args:
        n: Number of variables.
        d: Truncation degree.
        rng: Source of randomness.
        tracial: Make moments constant on cyclic rotation classes.
        nonzero_mean: Force every first moment to be non-zero.
    """
    moments: dict[Word, Fraction] = {}
    by_class: dict[Word, Fraction] = {}
    for word in words_upto(n, d):
        force = nonzero_mean and len(word) == 1
        if tracial:
            key = _rotation_class(word)
            if key not in by_class:
                by_class[key] = random_scalar(rng, nonzero=force)
            value = by_class[key]
        else:
            value = random_scalar(rng, nonzero=force)
        if value:
            moments[word] = value
    return JointDistribution.trusted(n, d, moments)


def random_series(
    n: int,
    d: int,
    rng: random.Random,
    density: float = 1.0,
    invertible: bool = False,
    max_numerator: Optional[int] = None,
) -> NCSeries:
    """Random series on n variables through degree d.

    Args:
        density: Probability that a given word gets a (possibly zero) random coefficient.
        invertible: Force non-zero linear coefficients.
    """
    numerator = 3 if max_numerator is None else max_numerator
    coeffs: dict[Word, Fraction] = {}
    for word in words_upto(n, d):
        force = invertible and len(word) == 1
        if not force and rng.random() >= density:
            continue
        value = random_scalar(rng, max_numerator=numerator, nonzero=force)
        if value:
            coeffs[word] = value
    return NCSeries.trusted(n, d, coeffs)
