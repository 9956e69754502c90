"""Joint distributions and their R-transforms.

A distribution is known only through its moments. The moment series M(mu)
and the R-transform are tied together by the boxed star:

    R(mu) = M(mu) * Moeb        M(mu) = R(mu) * Zeta

Free families are recognised by R-transforms without cross terms, sums of
free families add R-transforms, and componentwise products of free
families multiply them with the boxed star.
"""

import logging
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence

from app.errors import InvalidArgumentError, TruncationExceededError
from app.models.distribution import JointDistribution
from app.models.power_series import (
    ONE,
    NCSeries,
    ScalarLike,
    Word,
    to_scalar,
    words_upto,
)
from app.tools.series import (
    add,
    boxstar,
    catalan,
    has_no_cross_terms,
    lift_diagonal,
    moebius,
    zeta,
)

logger = logging.getLogger(__name__)

ProductFormula = Literal["rr", "rm", "mr"]


def m_series(mu: JointDistribution) -> NCSeries:
    """The moment series: the coefficient of w is mu(w)."""
    return NCSeries.trusted(mu.n, mu.max_degree, dict(mu.moments))


def r_transform(mu: JointDistribution) -> NCSeries:
    """R(mu) = M(mu) * Moeb, the series of free cumulants."""
    return boxstar(m_series(mu), moebius(mu.n, mu.max_degree))


def from_r_series(f: NCSeries) -> JointDistribution:
    """The distribution whose R-transform is f, via M = f * Zeta."""
    moments = boxstar(f, zeta(f.n, f.max_degree))
    return JointDistribution.trusted(f.n, f.max_degree, dict(moments.coeffs))


def _common_degree(mu_a: JointDistribution, mu_b: JointDistribution) -> int:
    if mu_a.n != mu_b.n:
        raise InvalidArgumentError(
            f"distributions have different numbers of variables: {mu_a.n} vs {mu_b.n}"
        )
    return min(mu_a.max_degree, mu_b.max_degree)


def free_additive(mu_a: JointDistribution, mu_b: JointDistribution) -> JointDistribution:
    """Distribution of (a1 + b1, ..., an + bn) for free families: R-transforms add."""
    d = _common_degree(mu_a, mu_b)
    summed = add(r_transform(mu_a.truncate(d)), r_transform(mu_b.truncate(d)))
    return from_r_series(summed)


def multiply_free_tuples(
    mu_a: JointDistribution,
    mu_b: JointDistribution,
    formula: ProductFormula = "rr",
) -> JointDistribution:
    """Distribution of (a1 b1, ..., an bn) when the a-family is free from the b-family.

    Args:
        mu_a: Joint distribution of the a's.
        mu_b: Joint distribution of the b's.
        formula: Which equivalent product formula to evaluate:
            ``"rr"`` R(ab) = R(a) * R(b), then back to moments;
            ``"rm"`` M(ab) = R(a) * M(b);
            ``"mr"`` M(ab) = M(a) * R(b).

    Returns:
        The product distribution, truncated at the smaller max_degree.
    """
    d = _common_degree(mu_a, mu_b)
    mu_a, mu_b = mu_a.truncate(d), mu_b.truncate(d)
    if formula == "rr":
        return from_r_series(boxstar(r_transform(mu_a), r_transform(mu_b)))
    if formula == "rm":
        moments = boxstar(r_transform(mu_a), m_series(mu_b))
    elif formula == "mr":
        moments = boxstar(m_series(mu_a), r_transform(mu_b))
    else:
        raise InvalidArgumentError(f"unknown product formula {formula!r}")
    return JointDistribution.trusted(mu_a.n, d, dict(moments.coeffs))


def unit_distribution(n: int, d: int) -> JointDistribution:
    """The n-tuple (1, ..., 1): every moment is one."""
    return JointDistribution.trusted(n, d, {w: ONE for w in words_upto(n, d)})


def orthogonal_projections(alphas: Sequence[ScalarLike], d: int) -> JointDistribution:
    """Pairwise orthogonal projections of traces alpha_i.

    Pure words i...i have moment alpha_i; any word with two different letters
    contains a product e_i e_j with i != j up to cyclic rotation, so it vanishes.
    """
    values = [to_scalar(alpha) for alpha in alphas]
    if not values:
        raise InvalidArgumentError("at least one projection is needed")
    moments: dict[Word, Fraction] = {}
    for i, alpha in enumerate(values, start=1):
        if alpha:
            for k in range(1, d + 1):
                moments[(i,) * k] = alpha
    return JointDistribution.trusted(len(values), d, moments)


def semicircular(s: ScalarLike, d: int) -> JointDistribution:
    """Centered semicircular of variance s (radius r with s = r**2/4).

    Even moments are s**k * Catalan(k), odd moments vanish; the R-transform is s z**2.
    """
    s = to_scalar(s)
    if s <= 0:
        raise InvalidArgumentError(f"semicircular variance must be positive, got {s}")
    moments = {(1,) * (2 * k): s ** k * catalan(k) for k in range(1, d // 2 + 1)}
    return JointDistribution.trusted(1, d, moments)


def free_poisson(alpha: ScalarLike, beta: ScalarLike, d: int) -> JointDistribution:
    """Free Poisson element: R-transform alpha*beta*z / (1 - beta*z)."""
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    cumulants = {(1,) * k: alpha * beta ** k for k in range(1, d + 1) if alpha * beta ** k}
    return from_r_series(NCSeries.trusted(1, d, cumulants))


def idempotent_dist(alpha: ScalarLike, d: int) -> JointDistribution:
    """A projection of trace alpha: every moment mu(X**k) equals alpha."""
    alpha = to_scalar(alpha)
    moments = {(1,) * k: alpha for k in range(1, d + 1)} if alpha else {}
    return JointDistribution.trusted(1, d, moments)


def _require_one_dimensional(mu: JointDistribution) -> None:
    if mu.n != 1:
        raise InvalidArgumentError(f"a one-variable distribution is needed, got n={mu.n}")


def diagonal_distribution(mu: JointDistribution, n: int) -> JointDistribution:
    """Distribution of (a, a, ..., a): mu(w) = mu(X**len(w))."""
    _require_one_dimensional(mu)
    moments: dict[Word, Fraction] = {}
    for word in words_upto(n, mu.max_degree):
        value = mu.moment((1,) * len(word))
        if value:
            moments[word] = value
    return JointDistribution.trusted(n, mu.max_degree, moments)


def diagonal_r(mu: JointDistribution, n: int) -> NCSeries:
    """R-transform of (a, ..., a): R(mu)(z1 + ... + zn)."""
    _require_one_dimensional(mu)
    return lift_diagonal(r_transform(mu), n)


def restrict(mu: JointDistribution, indices: Sequence[int], d: Optional[int] = None) -> JointDistribution:
    """Distribution of (a_{i1}, ..., a_{im}); indices may repeat.

    Raises:
        TruncationExceededError: If ``d`` exceeds mu.max_degree.
    """
    indices = tuple(indices)
    if not indices or any(not 1 <= i <= mu.n for i in indices):
        raise InvalidArgumentError(f"indices {indices} must be non-empty and within 1..{mu.n}")
    d = mu.max_degree if d is None else d
    if d > mu.max_degree:
        raise TruncationExceededError(d, mu.max_degree)
    moments: dict[Word, Fraction] = {}
    for word in words_upto(len(indices), d):
        value = mu.moments.get(tuple(indices[j - 1] for j in word))
        if value:
            moments[word] = value
    return JointDistribution.trusted(len(indices), d, moments)


def dilate_distribution(mu: JointDistribution, r: ScalarLike) -> JointDistribution:
    """Distribution of (r a1, ..., r an): a degree-k moment picks up r**k."""
    r = to_scalar(r)
    moments = {w: v * r ** len(w) for w, v in mu.moments.items()} if r else {}
    return JointDistribution.trusted(mu.n, mu.max_degree, moments)


def is_tracial(mu: JointDistribution, d: Optional[int] = None) -> bool:
    """True if every moment up to degree d is invariant under cyclic rotation."""
    d = mu.max_degree if d is None else d
    if d > mu.max_degree:
        raise TruncationExceededError(d, mu.max_degree)
    for word in words_upto(mu.n, d):
        value = mu.moments.get(word, 0)
        for shift in range(1, len(word)):
            if mu.moments.get(word[shift:] + word[:shift], 0) != value:
                logger.debug(f"[is_tracial] rotation of {word} changes the moment")
                return False
    return True


def cross_term_check(mu: JointDistribution, split: Sequence[Iterable[int]], d: int) -> bool:
    """Whether the groups of variables in ``split`` look free through degree d.

    True iff no coefficient of R(mu) of degree <= d mixes two groups.
    """
    if d > mu.max_degree:
        raise TruncationExceededError(d, mu.max_degree)
    groups = [tuple(group) for group in split]
    return has_no_cross_terms(r_transform(mu.truncate(d)), groups, d)
