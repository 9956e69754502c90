"""Boxed-star calculus on truncated series in non-commuting variables.

For a word w of length k, the coefficient of w in f * g (boxed star) is

    sum over pi in NC(k) of coef_pi(f, w, pi) * coef_pi(g, w, K(pi))

where coef_pi multiplies the coefficients of the restrictions of w to the
blocks of pi. The degree-k coefficient of the product only involves
coefficients of degree <= k, so products of truncated series are exact up
to the smaller truncation degree.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Sequence

from app.errors import InvalidArgumentError, NotInvertibleError, TruncationExceededError
from app.models.partition import Blocks, NCPartition
from app.models.power_series import (
    ONE,
    ZERO,
    NCSeries,
    ScalarLike,
    Word,
    check_word,
    to_scalar,
    words,
    words_upto,
)
from app.tools.nc_lattice import kreweras_pairs, partitions_below, relative_kreweras

logger = logging.getLogger(__name__)


def _block_product(coeffs: dict[Word, Fraction], word: Word, blocks: Blocks) -> Fraction:
    value = ONE
    for block in blocks:
        c = coeffs.get(tuple(word[x - 1] for x in block))
        if c is None:
            return ZERO
        value *= c
    return value


def _star_coefficient(
    fc: dict[Word, Fraction],
    gc: dict[Word, Fraction],
    word: Word,
    pairs: Sequence[tuple[Blocks, Blocks]],
) -> Fraction:
    total = ZERO
    for pi_blocks, complement_blocks in pairs:
        left = _block_product(fc, word, pi_blocks)
        if not left:
            continue
        right = _block_product(gc, word, complement_blocks)
        if right:
            total += left * right
    return total


def _require_same_n(f: NCSeries, g: NCSeries) -> None:
    if f.n != g.n:
        raise InvalidArgumentError(f"series have different numbers of variables: {f.n} vs {g.n}")


def _checked_word(f: NCSeries, word: Iterable[int]) -> Word:
    word = check_word(word, f.n)
    if len(word) > f.max_degree:
        raise TruncationExceededError(len(word), f.max_degree, word)
    return word


def coef(f: NCSeries, word: Iterable[int]) -> Fraction:
    """Coefficient of z_{i1}...z_{ik} in f."""
    return f.coefficient(word)


def coef_pi(f: NCSeries, word: Iterable[int], pi: NCPartition) -> Fraction:
    """Product over the blocks B of pi of the coefficient of w restricted to B.

    Raises:
        InvalidArgumentError: If pi is not a partition of {1..len(word)}.
    """
    word = _checked_word(f, word)
    if pi.k != len(word):
        raise InvalidArgumentError(f"partition on {pi.k} points used with a word of length {len(word)}")
    return _block_product(f.coeffs, word, pi.blocks)


def boxstar_coef(f: NCSeries, g: NCSeries, word: Iterable[int]) -> Fraction:
    """A single coefficient of f * g, without building the whole product."""
    _require_same_n(f, g)
    word = check_word(word, f.n)
    available = min(f.max_degree, g.max_degree)
    if len(word) > available:
        raise TruncationExceededError(len(word), available, word)
    return _star_coefficient(f.coeffs, g.coeffs, word, kreweras_pairs(len(word)))


def boxstar(f: NCSeries, g: NCSeries) -> NCSeries:
    """Boxed-star product f * g, truncated at the smaller max_degree.

    Raises:
        InvalidArgumentError: If the series have different numbers of variables.
    """
    _require_same_n(f, g)
    d = min(f.max_degree, g.max_degree)
    coeffs: dict[Word, Fraction] = {}
    if f.coeffs and g.coeffs:
        for k in range(1, d + 1):
            pairs = kreweras_pairs(k)
            for word in words(f.n, k):
                value = _star_coefficient(f.coeffs, g.coeffs, word, pairs)
                if value:
                    coeffs[word] = value
    logger.debug(f"[boxstar] n={f.n} d={d}: {len(coeffs)} non-zero coefficients")
    return NCSeries.trusted(f.n, d, coeffs)


def coef_pi_star(f: NCSeries, g: NCSeries, word: Iterable[int], rho: NCPartition) -> Fraction:
    """coef_pi(f * g, w, rho), summed directly over pi <= rho with K_rho(pi)."""
    _require_same_n(f, g)
    word = _checked_word(f, word)
    word = _checked_word(g, word)
    if rho.k != len(word):
        raise InvalidArgumentError(f"partition on {rho.k} points used with a word of length {len(word)}")
    total = ZERO
    for pi in partitions_below(rho):
        left = _block_product(f.coeffs, word, pi.blocks)
        if left:
            total += left * _block_product(g.coeffs, word, relative_kreweras(pi, rho).blocks)
    return total


def boxstar_inverse(f: NCSeries) -> NCSeries:
    """The series g with f * g = g * f = Sum.

    Coefficients are found degree by degree: in (g * f)(w) the one-block
    partition contributes coef(g, w) times the product of the linear
    coefficients of f, every other partition only involves lower degrees of g.

    Raises:
        NotInvertibleError: If some linear coefficient of f vanishes.
    """
    linear = []
    for i in range(1, f.n + 1):
        c = f.coeffs.get((i,))
        if not c:
            raise NotInvertibleError(f"coefficient of z{i} is zero, series is not invertible")
        linear.append(c)
    inverse: dict[Word, Fraction] = {}
    for k in range(1, f.max_degree + 1):
        pairs = [pair for pair in kreweras_pairs(k) if len(pair[0]) > 1]
        target = ONE if k == 1 else ZERO
        for word in words(f.n, k):
            rest = _star_coefficient(inverse, f.coeffs, word, pairs)
            denominator = ONE
            for i in word:
                denominator *= linear[i - 1]
            value = (target - rest) / denominator
            if value:
                inverse[word] = value
    return NCSeries.trusted(f.n, f.max_degree, inverse)


def dilate(f: NCSeries, r: ScalarLike) -> NCSeries:
    """f o D_r: the coefficient of each degree-k word is multiplied by r**k."""
    r = to_scalar(r)
    if not r:
        return NCSeries.zero(f.n, f.max_degree)
    return NCSeries.trusted(
        f.n, f.max_degree, {w: c * r ** len(w) for w, c in f.coeffs.items()}
    )


def scale(f: NCSeries, r: ScalarLike) -> NCSeries:
    r = to_scalar(r)
    if not r:
        return NCSeries.zero(f.n, f.max_degree)
    return NCSeries.trusted(f.n, f.max_degree, {w: c * r for w, c in f.coeffs.items()})


def add(f: NCSeries, g: NCSeries) -> NCSeries:
    """Coefficientwise sum of two series of the same shape."""
    _require_same_n(f, g)
    if f.max_degree != g.max_degree:
        raise InvalidArgumentError(
            f"cannot add series truncated at {f.max_degree} and {g.max_degree}"
        )
    coeffs = dict(f.coeffs)
    for w, c in g.coeffs.items():
        value = coeffs.get(w, ZERO) + c
        if value:
            coeffs[w] = value
        else:
            coeffs.pop(w, None)
    return NCSeries.trusted(f.n, f.max_degree, coeffs)


def truncate(f: NCSeries, d: int) -> NCSeries:
    if not 1 <= d <= f.max_degree:
        raise InvalidArgumentError(f"cannot truncate max_degree={f.max_degree} to {d}")
    return NCSeries.trusted(f.n, d, {w: c for w, c in f.coeffs.items() if len(w) <= d})


def lift_diagonal(f: NCSeries, n: int) -> NCSeries:
    """f(z1 + ... + zn): every degree-k word gets the degree-k coefficient of f.

    Raises:
        InvalidArgumentError: If f is not a one-variable series or n < 1.
    """
    if f.n != 1:
        raise InvalidArgumentError(f"lift_diagonal needs a one-variable series, got n={f.n}")
    if n < 1:
        raise InvalidArgumentError(f"number of variables must be positive, got {n}")
    coeffs: dict[Word, Fraction] = {}
    for (word, c) in f.coeffs.items():
        for lifted in words(n, len(word)):
            coeffs[lifted] = c
    return NCSeries.trusted(n, f.max_degree, coeffs)


def sum_series(n: int, max_degree: int) -> NCSeries:
    """Sum = z1 + ... + zn, the neutral element of the boxed star."""
    return NCSeries.trusted(n, max_degree, {(i,): ONE for i in range(1, n + 1)})


def zeta(n: int, max_degree: int) -> NCSeries:
    """All coefficients equal to one."""
    return NCSeries.trusted(n, max_degree, {w: ONE for w in words_upto(n, max_degree)})


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def moebius(n: int, max_degree: int) -> NCSeries:
    """The boxed-star inverse of Zeta: degree-k coefficients (-1)**(k+1) * Catalan(k-1)."""
    coeffs: dict[Word, Fraction] = {}
    for k in range(1, max_degree + 1):
        value = Fraction((-1) ** (k + 1) * catalan(k - 1))
        for word in words(n, k):
            coeffs[word] = value
    return NCSeries.trusted(n, max_degree, coeffs)


def sqsum(m: int, max_degree: Optional[int] = None) -> NCSeries:
    """Sum over i, j in 1..2m of z_i z_j, in 2m variables.

    Args:
        m: Half the number of variables.
        max_degree: Truncation degree, at least 2; defaults to 2m.
    """
    if m < 1:
        raise InvalidArgumentError(f"sqsum needs m >= 1, got {m}")
    d = 2 * m if max_degree is None else max_degree
    if d < 2:
        raise InvalidArgumentError(f"sqsum needs max_degree >= 2, got {d}")
    return NCSeries.trusted(2 * m, d, {w: ONE for w in words(2 * m, 2)})


def validate_groups(groups: Sequence[Iterable[int]], n: int) -> dict[int, int]:
    """Map each variable to its group index, checking the groups partition 1..n."""
    owner: dict[int, int] = {}
    for index, group in enumerate(groups):
        for i in group:
            if not 1 <= i <= n or i in owner:
                raise InvalidArgumentError(f"groups {groups} do not partition 1..{n}")
            owner[i] = index
    if len(owner) != n or len(groups) < 2:
        raise InvalidArgumentError(f"groups {groups} do not split 1..{n} into at least two parts")
    return owner


def has_no_cross_terms(f: NCSeries, groups: Sequence[Iterable[int]], d: Optional[int] = None) -> bool:
    """True if no coefficient of degree <= d mixes letters from different groups."""
    owner = validate_groups(groups, f.n)
    d = f.max_degree if d is None else d
    if d > f.max_degree:
        raise TruncationExceededError(d, f.max_degree)
    for word, c in f.coeffs.items():
        if len(word) <= d and c and len({owner[i] for i in word}) > 1:
            logger.debug(f"[has_no_cross_terms] cross term at {word}: {c}")
            return False
    return True
