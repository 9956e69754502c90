"""Conjugation by a semicircular and compression by a free projection.

Each result comes in two forms: a closed formula through R-transforms and
an oracle side computed in the free product itself. The ``*_instances``
generators yield ``(label, lhs, rhs)`` triples so callers can report the
first disagreement.
"""

import logging
from fractions import Fraction
from typing import Iterator, Sequence

from app.errors import InvalidArgumentError, PreconditionError, TruncationExceededError
from app.models.distribution import JointDistribution
from app.models.power_series import (
    NCSeries,
    ScalarLike,
    Word,
    format_word,
    to_scalar,
    words,
    words_upto,
)
from app.tools.freeprob import (
    dilate_distribution,
    from_r_series,
    idempotent_dist,
    is_tracial,
    m_series,
    r_transform,
    restrict,
    semicircular,
)
from app.tools.oracle import FreeProductOracle
from app.tools.series import boxstar_coef, dilate, scale, sqsum

logger = logging.getLogger(__name__)

Instance = tuple[str, Fraction, Fraction]


def _positive(value: ScalarLike, name: str) -> Fraction:
    value = to_scalar(value)
    if value <= 0:
        raise InvalidArgumentError(f"{name} must be positive, got {value}")
    return value


def _identity_word(m: int) -> Word:
    return tuple(range(1, m + 1))


def _collapse(word: Sequence[int], letter: int) -> Word:
    """Merge repeated adjacent copies of an idempotent letter."""
    out: list[int] = []
    for x in word:
        if x == letter and out and out[-1] == letter:
            continue
        out.append(x)
    return tuple(out)


def _word_tuples(n: int, m: int, budget: int) -> Iterator[tuple[Word, ...]]:
    """All m-tuples of words over 1..n (empty allowed) of total length <= budget."""
    if m == 0:
        yield ()
        return
    for length in range(budget + 1):
        for first in words(n, length):
            for rest in _word_tuples(n, m - 1, budget - length):
                yield (tuple(first),) + rest


def _label(parts: Sequence[Word]) -> str:
    return "(" + "; ".join(format_word(p) or "1" for p in parts) + ")"


# Conjugation by a semicircular


def conjugate_by_semicircular(mu_a: JointDistribution, s: ScalarLike) -> NCSeries:
    """R-transform of (b a_1 b, ..., b a_n b) for b semicircular of variance s, free from the a's.

    Equals the moment series of (s a_1, ..., s a_n). Requires a tracial mu_a.
    """
    return dilate(m_series(mu_a), _positive(s, "variance"))


def bab_distribution(mu_a: JointDistribution, s: ScalarLike, d: int) -> JointDistribution:
    """Moments of words in the letters b a_i b, computed in the free product.

    A degree-k word needs mu_a through degree k and b through degree 2k.
    """
    if d > mu_a.max_degree:
        raise TruncationExceededError(d, mu_a.max_degree)
    b = mu_a.n + 1
    oracle = FreeProductOracle(mu_a, semicircular(_positive(s, "variance"), 2 * d))
    moments: dict[Word, Fraction] = {}
    for word in words_upto(mu_a.n, d):
        value = oracle.moment(tuple(x for i in word for x in (b, i, b)))
        if value:
            moments[word] = value
    return JointDistribution.trusted(mu_a.n, d, moments)


def lemma_sqsum_sides(mu_cc: JointDistribution) -> tuple[Fraction, Fraction]:
    """Both sides of the pairing identity for M-series and Sqsum.

    For a distribution of (c_1, c'_1, ..., c_m, c'_m), returns

        [coef(1..m)](M(c) * M(c'))   and   [coef(1..2m)](M(c, c') * Sqsum).

    Raises:
        InvalidArgumentError: If the number of variables is odd.
        TruncationExceededError: If max_degree < 2m.
    """
    if mu_cc.n % 2:
        raise InvalidArgumentError(f"needs an even number of variables, got {mu_cc.n}")
    m = mu_cc.n // 2
    if mu_cc.max_degree < 2 * m:
        raise TruncationExceededError(2 * m, mu_cc.max_degree)
    mu_c = restrict(mu_cc, [2 * j - 1 for j in range(1, m + 1)], m)
    mu_c_prime = restrict(mu_cc, [2 * j for j in range(1, m + 1)], m)
    lhs = boxstar_coef(m_series(mu_c), m_series(mu_c_prime), _identity_word(m))
    rhs = boxstar_coef(m_series(mu_cc), sqsum(m, mu_cc.max_degree), _identity_word(2 * m))
    return lhs, rhs


def _concatenation_distribution(
    mu_a: JointDistribution, c_words: Sequence[Word], d: int
) -> JointDistribution:
    """Distribution of (c_1, ..., c_m) where each c_j is a word in the a's."""
    moments: dict[Word, Fraction] = {}
    for word in words_upto(len(c_words), d):
        value = mu_a.moment(tuple(x for j in word for x in c_words[j - 1]))
        if value:
            moments[word] = value
    return JointDistribution.trusted(len(c_words), d, moments)


def bab_criterion_instances(mu_a: JointDistribution, s: ScalarLike, d: int) -> Iterator[Instance]:
    """Instances of the freeness criterion for {b a_i b} against {a_i}.

    For words c_j in the a's and indices i_j with total degree at most d:

        phi(c_1 (b a_{i1} b) ... c_m (b a_{im} b))
            = [coef(1..m)](M(c_1, ..., c_m) * R(b a_{i1} b, ..., b a_{im} b))

    Raises:
        PreconditionError: If mu_a is not tracial.
    """
    s = _positive(s, "variance")
    if not is_tracial(mu_a):
        raise PreconditionError("conjugation by a semicircular needs a tracial distribution")
    n = mu_a.n
    b = n + 1
    oracle = FreeProductOracle(mu_a, semicircular(s, 2 * d))
    for m in range(1, d + 1):
        for c_words in _word_tuples(n, m, d - m):
            moment_series = m_series(_concatenation_distribution(mu_a, c_words, m))
            for indices in words(n, m):
                top = tuple(x for c, i in zip(c_words, indices) for x in c + (b, i, b))
                lhs = oracle.moment(top)
                conjugated = conjugate_by_semicircular(restrict(mu_a, indices, m), s)
                rhs = boxstar_coef(moment_series, conjugated, _identity_word(m))
                yield f"c={_label(c_words)} i={format_word(indices)}", lhs, rhs


def check_bab_free_from_a(mu_a: JointDistribution, s: ScalarLike, d: int) -> bool:
    """Whether every criterion instance through degree d agrees."""
    for label, lhs, rhs in bab_criterion_instances(mu_a, s, d):
        if lhs != rhs:
            logger.warning(f"[check_bab_free_from_a] mismatch at {label}: {lhs} != {rhs}")
            return False
    return True


# Compression by a free projection


def _nonzero(value: ScalarLike, name: str) -> Fraction:
    value = to_scalar(value)
    if not value:
        raise InvalidArgumentError(f"{name} must be non-zero")
    return value


def compress(mu: JointDistribution, alpha: ScalarLike) -> JointDistribution:
    """Distribution of (p a_1 p, ..., p a_n p) in pAp with the state phi/alpha.

    p is a projection of trace alpha free from the a's; the R-transform of the
    compressed tuple is (1/alpha) R(mu) o D_alpha. Requires a tracial mu.

    Raises:
        InvalidArgumentError: If alpha is zero.
    """
    alpha = _nonzero(alpha, "alpha")
    return from_r_series(dilate(scale(r_transform(mu), 1 / alpha), alpha))


def compressed_distribution(mu_a: JointDistribution, alpha: ScalarLike, d: int) -> JointDistribution:
    """The oracle side of compress: (1/alpha) phi(p a_{i1} p ... p a_{ik} p)."""
    alpha = _nonzero(alpha, "alpha")
    if d > mu_a.max_degree:
        raise TruncationExceededError(d, mu_a.max_degree)
    p = mu_a.n + 1
    oracle = FreeProductOracle(mu_a, idempotent_dist(alpha, d + 1))
    moments: dict[Word, Fraction] = {}
    for word in words_upto(mu_a.n, d):
        value = oracle.moment((p,) + tuple(x for i in word for x in (i, p))) / alpha
        if value:
            moments[word] = value
    return JointDistribution.trusted(mu_a.n, d, moments)


def semigroup_t(mu: JointDistribution, t: ScalarLike) -> JointDistribution:
    """The distribution mu_t with R(mu_t) = t R(mu).

    Only moments are produced; positivity is not asserted.
    """
    return from_r_series(scale(r_transform(mu), to_scalar(t)))


def semigroup_via_compression(mu: JointDistribution, t: ScalarLike) -> JointDistribution:
    """mu_t realised as t p a p with p of trace 1/t: scale by t, then compress by 1/t."""
    t = _nonzero(t, "t")
    return compress(dilate_distribution(mu, t), 1 / t)


def _check_idempotent(mu_b: JointDistribution, p: int) -> Fraction:
    """Check that inserting p next to p never changes a moment; return alpha = mu_b(p)."""
    if not 1 <= p <= mu_b.n:
        raise InvalidArgumentError(f"idempotent letter {p} is outside 1..{mu_b.n}")
    for word in words_upto(mu_b.n, mu_b.max_degree):
        for pos in range(len(word) - 1):
            if word[pos] == p and word[pos + 1] == p:
                shorter = word[:pos] + word[pos + 1:]
                if mu_b.moment(word) != mu_b.moment(shorter):
                    raise PreconditionError(
                        f"letter {p} is not idempotent: moments of {format_word(word)} "
                        f"and {format_word(shorter)} differ"
                    )
    alpha = mu_b.moment((p,))
    if not alpha:
        raise PreconditionError(f"trace of the projection {p} is zero")
    return alpha


def _compressed_b_distribution(
    mu_b: JointDistribution, p: int, b_words: Sequence[Word], alpha: Fraction, d: int
) -> JointDistribution:
    """Distribution of (p b_1 p, ..., p b_m p) in pBp with the state phi/alpha."""
    moments: dict[Word, Fraction] = {}
    for word in words_upto(len(b_words), d):
        letters = _collapse([x for j in word for x in (p,) + b_words[j - 1] + (p,)], p)
        value = mu_b.moment(letters) / alpha
        if value:
            moments[word] = value
    return JointDistribution.trusted(len(b_words), d, moments)


def compression_criterion_instances(
    mu_a: JointDistribution, mu_b: JointDistribution, p: int, d: int
) -> Iterator[Instance]:
    """Instances of the freeness criterion for {p a_i p} against pBp.

    For words b_j in B's letters and indices i_j with total degree at most d:

        (1/alpha) phi((p b_1 p)(p a_{i1} p) ... (p b_m p)(p a_{im} p))
            = [coef(1..m)](R(p b_1 p, ..., p b_m p) * M(p a_{i1} p, ..., p a_{im} p))

    both distributions on the right taken in the compressed space.

    Raises:
        PreconditionError: If p is not idempotent under mu_b, has zero trace,
            or either distribution is not tracial.
    """
    alpha = _check_idempotent(mu_b, p)
    if not is_tracial(mu_a) or not is_tracial(mu_b):
        raise PreconditionError("compression freeness needs tracial distributions")
    n = mu_a.n
    big_p = n + p
    oracle = FreeProductOracle(mu_a, mu_b)
    for m in range(1, d + 1):
        for b_words in _word_tuples(mu_b.n, m, d - m):
            compressed_b = r_transform(_compressed_b_distribution(mu_b, p, b_words, alpha, m))
            for indices in words(n, m):
                letters: list[int] = []
                for b_word, i in zip(b_words, indices):
                    letters += [big_p, *(x + n for x in b_word), big_p, big_p, i, big_p]
                lhs = oracle.moment(_collapse(letters, big_p)) / alpha
                compressed_a = compress(restrict(mu_a, indices, m), alpha)
                rhs = boxstar_coef(compressed_b, m_series(compressed_a), _identity_word(m))
                yield f"b={_label(b_words)} i={format_word(indices)}", lhs, rhs


def verify_compression_freeness(
    mu_a: JointDistribution, mu_b: JointDistribution, p: int, d: int
) -> bool:
    """Whether every compression criterion instance through total degree d agrees."""
    for label, lhs, rhs in compression_criterion_instances(mu_a, mu_b, p, d):
        if lhs != rhs:
            logger.warning(f"[verify_compression_freeness] mismatch at {label}: {lhs} != {rhs}")
            return False
    return True
