"""The identities checked by each verification target.

Every target turns its inputs into a list of ``IdentityCheck``s; running a
check compares two independently computed sides and reports the first
disagreement.
"""

import logging
import random
from fractions import Fraction
from typing import Any, Callable, Iterable, NamedTuple

from app.config import config
from app.errors import InvalidArgumentError
from app.models.distribution import JointDistribution
from app.models.documents import DistributionDocument
from app.models.power_series import (
    NCSeries,
    Word,
    format_scalar,
    format_word,
    to_scalar,
    words_upto,
)
from app.models.state import Counterexample, IdentityResult
from app.tools.applications import (
    bab_criterion_instances,
    bab_distribution,
    compress,
    compressed_distribution,
    compression_criterion_instances,
    conjugate_by_semicircular,
    lemma_sqsum_sides,
    semigroup_t,
    semigroup_via_compression,
)
from app.tools.codec import cap_degree, from_document, read_distribution, to_document
from app.tools.freeprob import (
    free_poisson,
    idempotent_dist,
    multiply_free_tuples,
    orthogonal_projections,
    r_transform,
)
from app.tools.oracle import componentwise_product_moments
from app.tools.sampling import random_distribution

logger = logging.getLogger(__name__)


class IdentityCheck(NamedTuple):
    name: str
    run: Callable[[], IdentityResult]


def _result(name: str, checked: int, mismatch: tuple[str, Fraction, Fraction] | None) -> IdentityResult:
    if mismatch is None:
        return IdentityResult(name=name, passed=True, checked=checked)
    label, lhs, rhs = mismatch
    return IdentityResult(
        name=name,
        passed=False,
        checked=checked,
        counterexample=Counterexample(label=label, lhs=str(lhs), rhs=str(rhs)),
    )


def compare_instances(name: str, instances: Iterable[tuple[str, Fraction, Fraction]]) -> IdentityResult:
    """Compare (label, lhs, rhs) triples, stopping at the first disagreement."""
    checked = 0
    for label, lhs, rhs in instances:
        checked += 1
        if lhs != rhs:
            return _result(name, checked, (label, lhs, rhs))
    return _result(name, checked, None)


def _word_triples(
    lhs: dict[Word, Fraction], rhs: dict[Word, Fraction], n: int, d: int
) -> Iterable[tuple[str, Fraction, Fraction]]:
    zero = Fraction(0)
    for word in words_upto(n, d):
        yield format_word(word), lhs.get(word, zero), rhs.get(word, zero)


def compare_distributions(name: str, lhs: JointDistribution, rhs: JointDistribution) -> IdentityResult:
    """Compare moments word by word through the smaller truncation degree."""
    if lhs.n != rhs.n:
        raise InvalidArgumentError(f"{name}: sides have {lhs.n} and {rhs.n} variables")
    d = min(lhs.max_degree, rhs.max_degree)
    return compare_instances(name, _word_triples(lhs.moments, rhs.moments, lhs.n, d))


def compare_series(name: str, lhs: NCSeries, rhs: NCSeries) -> IdentityResult:
    if lhs.n != rhs.n:
        raise InvalidArgumentError(f"{name}: sides have {lhs.n} and {rhs.n} variables")
    d = min(lhs.max_degree, rhs.max_degree)
    return compare_instances(name, _word_triples(lhs.coeffs, rhs.coeffs, lhs.n, d))


# Inputs


DEFAULT_N = {"thm14": 2}


def _a_degree(target: str, degree: int) -> int:
    """Degree of generated a-inputs; criterion checks concatenate words in the a's."""
    if target == "app110":
        return max([degree] + [m * (degree - m) for m in range(1, degree + 1)])
    return degree


def _document(mu: JointDistribution) -> dict[str, Any]:
    return to_document(mu).model_dump(exclude_none=True)


def _read_capped(path: str, max_degree: int) -> dict[str, Any]:
    return _document(cap_degree(read_distribution(path), max_degree))


def load_inputs(target: str, degree: int, params: dict[str, Any]) -> dict[str, Any]:
    """Read input documents or generate seeded random ones.

    The result is plain data (distribution documents, ``"p/q"`` scalars and
    ints) so it can sit in checkpointed graph state; ``decode_inputs`` turns
    it back into values.

    Args:
        target: Verification target name.
        degree: Requested verification degree.
        params: ``a``/``b`` paths, ``s``, ``alpha``, ``p``, ``n``, ``seed``
            and the ``max_degree`` cap applied to files.
    """
    seed = params.get("seed")
    seed = config.SEED if seed is None else int(seed)
    max_degree = params.get("max_degree") or config.MAX_DEGREE
    rng = random.Random(seed)
    n = params.get("n") or DEFAULT_N.get(target, 1)
    alpha = to_scalar(params.get("alpha") or "1/2")
    inputs: dict[str, Any] = {
        "seed": seed,
        "s": format_scalar(to_scalar(params.get("s") or "1/2")),
        "alpha": format_scalar(alpha),
        "p": int(params.get("p") or 1),
    }
    if params.get("a"):
        mu_a = cap_degree(read_distribution(params["a"]), max_degree)
    else:
        mu_a = random_distribution(n, _a_degree(target, degree), rng, tracial=True)
    inputs["a"] = _document(mu_a)
    if params.get("b"):
        inputs["b"] = _read_capped(params["b"], max_degree)
    elif target == "thm14":
        inputs["b"] = _document(random_distribution(mu_a.n, degree, rng, tracial=True))
    elif target == "app113":
        inputs["b"] = _document(idempotent_dist(alpha, degree * degree + 2 * degree))
    logger.info(
        f"[load_inputs] target={target} degree={degree} seed={seed} "
        f"a: n={mu_a.n} d={mu_a.max_degree}"
    )
    return inputs


def decode_inputs(inputs: dict[str, Any]) -> dict[str, Any]:
    """Values for the plain data produced by ``load_inputs``."""
    decoded: dict[str, Any] = {
        "seed": inputs.get("seed", config.SEED),
        "s": to_scalar(inputs.get("s", "1/2")),
        "alpha": to_scalar(inputs.get("alpha", "1/2")),
        "p": inputs.get("p", 1),
    }
    for role in ("a", "b"):
        if role in inputs:
            decoded[role] = from_document(DistributionDocument.model_validate(inputs[role]))
    return decoded


def _upto(mu: JointDistribution, degree: int) -> JointDistribution:
    return mu.truncate(min(degree, mu.max_degree))


# Targets


def _product_checks(inputs: dict[str, Any], degree: int) -> list[IdentityCheck]:
    mu_a, mu_b = _upto(inputs["a"], degree), _upto(inputs["b"], degree)

    def oracle_side() -> IdentityResult:
        expected = componentwise_product_moments(mu_a, mu_b, degree)
        return compare_distributions(
            "cumulant product vs free-product moments",
            multiply_free_tuples(mu_a, mu_b, "rr"),
            expected,
        )

    def left_form() -> IdentityResult:
        return compare_distributions(
            "M(ab) = R(a) * M(b)",
            multiply_free_tuples(mu_a, mu_b, "rm"),
            multiply_free_tuples(mu_a, mu_b, "rr"),
        )

    def right_form() -> IdentityResult:
        return compare_distributions(
            "M(ab) = M(a) * R(b)",
            multiply_free_tuples(mu_a, mu_b, "mr"),
            multiply_free_tuples(mu_a, mu_b, "rr"),
        )

    return [
        IdentityCheck("cumulant product vs free-product moments", oracle_side),
        IdentityCheck("M(ab) = R(a) * M(b)", left_form),
        IdentityCheck("M(ab) = M(a) * R(b)", right_form),
    ]


def _conjugation_checks(inputs: dict[str, Any], degree: int) -> list[IdentityCheck]:
    mu_a, s = _upto(inputs["a"], degree), inputs["s"]

    def against_oracle() -> IdentityResult:
        expected = r_transform(bab_distribution(mu_a, s, mu_a.max_degree))
        return compare_series(
            "R(bab) = M(s a) vs free product",
            conjugate_by_semicircular(mu_a, s),
            expected,
        )

    def projections() -> IdentityResult:
        alphas = [Fraction(1, 2), Fraction(1, 3)]
        conjugated = r_transform(bab_distribution(orthogonal_projections(alphas, degree), s, degree))
        # letter i carries the cumulants of a free Poisson of rate alpha_i and jump s;
        # mixed words must vanish
        expected: dict[Word, Fraction] = {}
        for i, alpha in enumerate(alphas, start=1):
            for word, c in r_transform(free_poisson(alpha, s, degree)).coeffs.items():
                expected[(i,) * len(word)] = c
        return compare_series(
            "b e_i b free Poisson without cross terms",
            conjugated,
            NCSeries.trusted(len(alphas), degree, expected),
        )

    return [
        IdentityCheck("R(bab) = M(s a) vs free product", against_oracle),
        IdentityCheck("b e_i b free Poisson without cross terms", projections),
    ]


def _bab_freeness_checks(inputs: dict[str, Any], degree: int) -> list[IdentityCheck]:
    mu_a, s = inputs["a"], inputs["s"]
    name = "bab family free from a family"
    return [IdentityCheck(name, lambda: compare_instances(name, bab_criterion_instances(mu_a, s, degree)))]


def _compression_checks(inputs: dict[str, Any], degree: int) -> list[IdentityCheck]:
    mu_a, alpha = _upto(inputs["a"], degree), inputs["alpha"]

    def against_oracle() -> IdentityResult:
        return compare_distributions(
            "compression formula vs free product",
            compress(mu_a, alpha),
            compressed_distribution(mu_a, alpha, degree),
        )

    def composition() -> IdentityResult:
        return compare_distributions(
            "compress twice = compress by product",
            compress(compress(mu_a, alpha), alpha),
            compress(mu_a, alpha * alpha),
        )

    def semigroup() -> IdentityResult:
        t = 1 / alpha
        return compare_distributions(
            "R(mu_t) = t R(mu) via compression",
            semigroup_t(mu_a, t),
            semigroup_via_compression(mu_a, t),
        )

    return [
        IdentityCheck("compression formula vs free product", against_oracle),
        IdentityCheck("compress twice = compress by product", composition),
        IdentityCheck("R(mu_t) = t R(mu) via compression", semigroup),
    ]


def _compression_freeness_checks(inputs: dict[str, Any], degree: int) -> list[IdentityCheck]:
    mu_a, mu_b, p = inputs["a"], inputs["b"], inputs["p"]
    name = "p a p family free from pBp"
    return [
        IdentityCheck(
            name,
            lambda: compare_instances(name, compression_criterion_instances(mu_a, mu_b, p, degree)),
        )
    ]


def _sqsum_checks(inputs: dict[str, Any], degree: int) -> list[IdentityCheck]:
    rng = random.Random(inputs["seed"])
    checks = []
    for m in range(1, min(degree, 3) + 1):
        mu_cc = random_distribution(2 * m, 2 * m, rng)
        name = f"M(c) * M(c') against Sqsum, m={m}"

        def run(mu_cc: JointDistribution = mu_cc, name: str = name) -> IdentityResult:
            lhs, rhs = lemma_sqsum_sides(mu_cc)
            return compare_instances(name, [(format_word(tuple(range(1, mu_cc.n // 2 + 1))), lhs, rhs)])

        checks.append(IdentityCheck(name, run))
    return checks


CHECK_BUILDERS: dict[str, Callable[[dict[str, Any], int], list[IdentityCheck]]] = {
    "thm14": _product_checks,
    "app16": _conjugation_checks,
    "app110": _bab_freeness_checks,
    "app111": _compression_checks,
    "app113": _compression_freeness_checks,
    "lemma410": _sqsum_checks,
}


def plan_checks(target: str, inputs: dict[str, Any], degree: int) -> list[IdentityCheck]:
    """The checks a target runs, in report order, built from ``load_inputs`` data."""
    try:
        builder = CHECK_BUILDERS[target]
    except KeyError:
        raise InvalidArgumentError(f"unknown verification target {target!r}") from None
    return builder(decode_inputs(inputs), degree)
