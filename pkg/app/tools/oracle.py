"""Moments of a free product computed straight from the definition of freeness.

No cumulant or series machinery is used here, so this module is an
independent check on everything built from the boxed star.

A mixed word splits into maximal runs u_1 ... u_r whose letters come from
one family each, alternating between the two families. Freeness says the
product of the centered runs (u_j - phi(u_j)) has expectation zero.
Expanding that product gives

    phi(u_1 ... u_r) = - sum over S strictly inside {1..r} of
                       prod_{j not in S} (-phi(u_j)) * phi(prod_{j in S} u_j)

and every word on the right is shorter, so the recursion terminates on
pure words, whose moments come from the input distributions.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from app.errors import InvalidArgumentError, TruncationExceededError
from app.models.distribution import JointDistribution
from app.models.power_series import ONE, ZERO, Word, words_upto

logger = logging.getLogger(__name__)


class FreeProductOracle:
    """Joint moments of (a_1..a_m, b_1..b_n) with the a's free from the b's.

    Letters 1..m are the a's and m+1..m+n the b's. Pure moments are looked
    up lazily, so a missing one only fails when it is actually needed.
    """

    def __init__(self, mu_a: JointDistribution, mu_b: JointDistribution):
        self.mu_a = mu_a
        self.mu_b = mu_b
        self.split = mu_a.n
        self.n = mu_a.n + mu_b.n
        self._memo: dict[Word, Fraction] = {}

    def _family(self, letter: int) -> int:
        return 0 if letter <= self.split else 1

    def _runs(self, word: Word) -> list[Word]:
        runs: list[list[int]] = []
        for letter in word:
            if runs and self._family(runs[-1][0]) == self._family(letter):
                runs[-1].append(letter)
            else:
                runs.append([letter])
        return [tuple(run) for run in runs]

    def _pure(self, run: Word) -> Fraction:
        if self._family(run[0]) == 0:
            return self.mu_a.moment(run)
        return self.mu_b.moment(tuple(letter - self.split for letter in run))

    def moment(self, word: Iterable[int]) -> Fraction:
        """phi of a word in the combined letters 1..m+n.

        Raises:
            InvalidArgumentError: If a letter is outside 1..m+n.
            TruncationExceededError: If a needed pure moment is beyond an input's max_degree.
        """
        word = tuple(word)
        for letter in word:
            if not 1 <= letter <= self.n:
                raise InvalidArgumentError(f"letter {letter} is outside 1..{self.n}")
        return self._moment(word)

    def _moment(self, word: Word) -> Fraction:
        if not word:
            return ONE
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        runs = self._runs(word)
        if len(runs) == 1:
            value = self._pure(word)
        else:
            means = [self._pure(run) for run in runs]
            r = len(runs)
            value = ZERO
            for size in range(r):
                for kept in combinations(range(r), size):
                    weight = ONE
                    for j in range(r):
                        if j not in kept:
                            weight *= -means[j]
                            if not weight:
                                break
                    if not weight:
                        continue
                    sub = tuple(letter for j in kept for letter in runs[j])
                    value -= weight * self._moment(sub)
        self._memo[word] = value
        return value

    @property
    def memo_size(self) -> int:
        return len(self._memo)


def free_product_centering(
    mu_a: JointDistribution, mu_b: JointDistribution, d: int
) -> JointDistribution:
    """Joint distribution of the a's and b's, free from each other, through degree d.

    Args:
        mu_a: Distribution of the m a-variables (letters 1..m of the result).
        mu_b: Distribution of the n b-variables (letters m+1..m+n).
        d: Truncation degree of the result.

    Raises:
        TruncationExceededError: If d exceeds either input's max_degree.
    """
    available = min(mu_a.max_degree, mu_b.max_degree)
    if d > available:
        raise TruncationExceededError(d, available)
    oracle = FreeProductOracle(mu_a, mu_b)
    moments: dict[Word, Fraction] = {}
    for word in words_upto(oracle.n, d):
        value = oracle.moment(word)
        if value:
            moments[word] = value
    logger.debug(
        f"[free_product_centering] {len(moments)} moments, memo size {oracle.memo_size}"
    )
    return JointDistribution.trusted(oracle.n, d, moments)


def componentwise_product_moments(
    mu_a: JointDistribution, mu_b: JointDistribution, d: int
) -> JointDistribution:
    """Distribution of (a_1 b_1, ..., a_n b_n) read off the free product.

    A degree-k word in the products needs pure moments through degree k.
    """
    if mu_a.n != mu_b.n:
        raise InvalidArgumentError(
            f"families have different sizes: {mu_a.n} vs {mu_b.n}"
        )
    available = min(mu_a.max_degree, mu_b.max_degree)
    if d > available:
        raise TruncationExceededError(d, available)
    oracle = FreeProductOracle(mu_a, mu_b)
    n = mu_a.n
    moments: dict[Word, Fraction] = {}
    for word in words_upto(n, d):
        value = oracle.moment(tuple(x for i in word for x in (i, n + i)))
        if value:
            moments[word] = value
    return JointDistribution.trusted(n, d, moments)
