"""The lattice NC(k) of non-crossing partitions.

Enumeration, refinement order, the Kreweras complement and its relative
version, the permutation embedding and the pairing bijection. The
complement is computed through permutations: Perm(K(pi)) equals
Perm(pi)^-1 composed with the full cycle, and its cycles are the blocks.
"""

import logging
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional

from app.config import config
from app.errors import InvalidArgumentError, PreconditionError
from app.models.partition import (
    Blocks,
    NCPartition,
    Permutation,
    canonical_blocks,
    crossing_free,
)

logger = logging.getLogger(__name__)


def _block_index(k: int, blocks: Blocks) -> tuple[int, ...]:
    index = [0] * k
    for i, block in enumerate(blocks):
        for x in block:
            index[x - 1] = i
    return tuple(index)


@lru_cache(maxsize=None)
def _raw_noncrossing(k: int) -> tuple[Blocks, ...]:
    """NC(k) as raw block tuples, built by placing the block of 1 first.

    The elements strictly between consecutive members of that block, and
    those after its last member, form intervals partitioned independently.
    """
    if k == 0:
        return ((),)
    found: list[Blocks] = []
    for size in range(k):
        for rest in combinations(range(2, k + 1), size):
            first = (1,) + rest
            bounds = first + (k + 1,)
            gap_choices = []
            for lo, hi in zip(bounds, bounds[1:]):
                offset = lo
                gap_choices.append([
                    tuple(tuple(x + offset for x in block) for block in blocks)
                    for blocks in _raw_noncrossing(hi - lo - 1)
                ])
            for combo in product(*gap_choices):
                blocks = [first]
                for part in combo:
                    blocks.extend(part)
                found.append(tuple(sorted(blocks)))
    return tuple(found)


@lru_cache(maxsize=None)
def _enumerate_cached(k: int) -> tuple[NCPartition, ...]:
    raw = sorted(_raw_noncrossing(k), key=lambda blocks: _block_index(k, blocks))
    partitions = tuple(NCPartition.model_construct(k=k, blocks=blocks) for blocks in raw)
    logger.debug(f"[nc_lattice] enumerated NC({k}): {len(partitions)} partitions")
    return partitions


def enumerate_nc(k: int) -> tuple[NCPartition, ...]:
    """All non-crossing partitions of {1..k}.

    Partitions come in canonical form, ordered lexicographically by the map
    element -> block index (so 1_k is first and 0_k is last).

    Args:
        k: Ground set size, between 1 and the configured ceiling.

    Returns:
        Tuple of Catalan(k) partitions; the result is cached per k.

    Raises:
        InvalidArgumentError: If k is not positive or exceeds the ceiling.
    """
    if k < 1 or k > config.NC_CEILING:
        raise InvalidArgumentError(f"enumerate_nc needs 1 <= k <= {config.NC_CEILING}, got {k}")
    return _enumerate_cached(k)


def is_noncrossing(blocks: Iterable[Iterable[int]], k: Optional[int] = None) -> bool:
    """Whether a set partition of {1..k} is non-crossing.

    Raises:
        InvalidArgumentError: If ``blocks`` is not a set partition of {1..k}.
    """
    materialized = [tuple(block) for block in blocks]
    if k is None:
        k = max((max(block) for block in materialized if block), default=0)
    return crossing_free(canonical_blocks(k, materialized))


def _require_same_size(pi: NCPartition, rho: NCPartition) -> None:
    if pi.k != rho.k:
        raise InvalidArgumentError(f"partitions live on different ground sets: {pi.k} vs {rho.k}")


def leq(pi: NCPartition, rho: NCPartition) -> bool:
    """Refinement order: every block of pi lies inside a block of rho."""
    _require_same_size(pi, rho)
    owner = _block_index(rho.k, rho.blocks)
    return all(len({owner[x - 1] for x in block}) == 1 for block in pi.blocks)


def perm_of(pi: NCPartition) -> Permutation:
    """Each block i1 < ... < im becomes the cycle i1 -> i2 -> ... -> im -> i1."""
    images = list(range(1, pi.k + 1))
    for block in pi.blocks:
        for a, b in zip(block, block[1:] + block[:1]):
            images[a - 1] = b
    return Permutation.model_construct(k=pi.k, images=tuple(images))


def partition_from_permutation(perm: Permutation) -> NCPartition:
    """The partition whose blocks are the cycles of ``perm``.

    Raises:
        InvalidArgumentError: If the cycle partition is crossing.
    """
    return NCPartition.from_blocks(perm.cycles(), perm.k)


def kreweras(pi: NCPartition) -> NCPartition:
    """Kreweras complement K(pi)."""
    gamma = Permutation.full_cycle(pi.k)
    complement = perm_of(pi).inverse() * gamma
    blocks = canonical_blocks(pi.k, complement.cycles())
    return NCPartition.model_construct(k=pi.k, blocks=blocks)


def rotate(pi: NCPartition, shift: int = 1) -> NCPartition:
    """Relabel every element i as i - shift (mod k), i.e. turn the circle anticlockwise."""
    k = pi.k
    moved = [[(x - 1 - shift) % k + 1 for x in block] for block in pi.blocks]
    return NCPartition.model_construct(k=k, blocks=canonical_blocks(k, moved))


def relative_kreweras(pi: NCPartition, rho: NCPartition) -> NCPartition:
    """Relative complement K_rho(pi), taken inside each block of rho.

    Raises:
        PreconditionError: If pi is not below rho.
    """
    if not leq(pi, rho):
        raise PreconditionError(f"relative complement needs pi <= rho, got {pi} and {rho}")
    owner = _block_index(rho.k, rho.blocks)
    inner: list[list[tuple[int, ...]]] = [[] for _ in rho.blocks]
    for block in pi.blocks:
        inner[owner[block[0] - 1]].append(block)
    result: list[tuple[int, ...]] = []
    for outer, parts in zip(rho.blocks, inner):
        position = {x: j for j, x in enumerate(outer, start=1)}
        local = NCPartition.model_construct(
            k=len(outer),
            blocks=tuple(sorted(tuple(position[x] for x in part) for part in parts)),
        )
        for block in kreweras(local).blocks:
            result.append(tuple(outer[j - 1] for j in block))
    return NCPartition.model_construct(k=pi.k, blocks=canonical_blocks(pi.k, result))


def interleave(pi: NCPartition, rho: NCPartition) -> Blocks:
    """Combine pi on the even points and rho on the odd points of {1..2k}.

    The result is a set partition that may be crossing.
    """
    _require_same_size(pi, rho)
    evens = [[2 * x for x in block] for block in pi.blocks]
    odds = [[2 * x - 1 for x in block] for block in rho.blocks]
    return canonical_blocks(2 * pi.k, evens + odds)


def interleave_is_noncrossing(pi: NCPartition, rho: NCPartition) -> bool:
    """Holds exactly when pi <= K(rho)."""
    return crossing_free(interleave(pi, rho))


def geometric_kreweras(rho: NCPartition) -> NCPartition:
    """K(rho) from its circular definition, by exhaustive search.

    The partitions sigma that stay non-crossing when drawn on the even points
    next to rho form a down-set; its maximum has the fewest blocks.
    """
    candidates = [sigma for sigma in enumerate_nc(rho.k) if interleave_is_noncrossing(sigma, rho)]
    return min(candidates, key=lambda sigma: sigma.num_blocks)


def twice(rho: NCPartition) -> NCPartition:
    """rho on the odd points and K(rho) on the even points of {1..2k}."""
    blocks = interleave(kreweras(rho), rho)
    return NCPartition.model_construct(k=2 * rho.k, blocks=blocks)


def enumerate_ncp(two_k: int) -> tuple[NCPartition, ...]:
    """All non-crossing pairings of {1..2k}.

    Raises:
        InvalidArgumentError: If the argument is not a positive even number.
    """
    if two_k < 2 or two_k % 2:
        raise InvalidArgumentError(f"non-crossing pairings need an even positive size, got {two_k}")
    return tuple(pi for pi in enumerate_nc(two_k) if pi.is_pairing())


@lru_cache(maxsize=None)
def kreweras_pairs(k: int) -> tuple[tuple[Blocks, Blocks], ...]:
    """(pi, K(pi)) block pairs for every pi in NC(k), in enumeration order."""
    pairs = tuple((pi.blocks, kreweras(pi).blocks) for pi in enumerate_nc(k))
    logger.debug(f"[nc_lattice] cached {len(pairs)} complement pairs for k={k}")
    return pairs


def partitions_below(rho: NCPartition) -> tuple[NCPartition, ...]:
    """All pi in NC(k) with pi <= rho, built block by block."""
    per_block = [
        [
            tuple(tuple(outer[j - 1] for j in block) for block in local.blocks)
            for local in enumerate_nc(len(outer))
        ]
        for outer in rho.blocks
    ]
    below = []
    for combo in product(*per_block):
        blocks = [block for part in combo for block in part]
        below.append(NCPartition.model_construct(k=rho.k, blocks=tuple(sorted(blocks))))
    below.sort(key=lambda pi: pi.block_index())
    return tuple(below)
