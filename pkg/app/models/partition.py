"""Non-crossing partitions and permutations of {1,...,k}.

Both types are frozen pydantic models so they hash, compare structurally and
validate on construction. Internal code that already holds canonical data
builds them with ``model_construct`` to skip re-validation.

Text form of a partition: blocks separated by ``|``, elements by ``,``,
1-based, canonical order, e.g. ``1,4,8|2,3|5,6|7``.
"""

from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.errors import InvalidArgumentError

Blocks = tuple[tuple[int, ...], ...]


def canonical_blocks(k: int, blocks: Iterable[Iterable[int]]) -> Blocks:
    """Put a set partition of {1..k} into canonical form.

    Elements ascend within a block and blocks ascend by their minimum.

    Raises:
        InvalidArgumentError: If ``blocks`` is not a set partition of {1..k}.
    """
    if k < 1:
        raise InvalidArgumentError(f"ground set size must be positive, got k={k}")
    result = []
    seen: set[int] = set()
    for block in blocks:
        items = tuple(sorted(int(x) for x in block))
        if not items:
            raise InvalidArgumentError("partition blocks must be non-empty")
        for x in items:
            if x < 1 or x > k:
                raise InvalidArgumentError(f"element {x} is outside 1..{k}")
            if x in seen:
                raise InvalidArgumentError(f"element {x} appears in more than one block")
            seen.add(x)
        result.append(items)
    if len(seen) != k:
        missing = sorted(set(range(1, k + 1)) - seen)
        raise InvalidArgumentError(f"blocks do not cover 1..{k}; missing {missing}")
    return tuple(sorted(result))


def crossing_free(blocks: Blocks) -> bool:
    """Return True if no two blocks of a valid set partition interleave.

    For consecutive elements a < b of a block, every element strictly between
    them must belong to a block lying entirely inside (a, b).
    """
    owner = {x: i for i, block in enumerate(blocks) for x in block}
    for block in blocks:
        for a, b in zip(block, block[1:]):
            for x in range(a + 1, b):
                other = blocks[owner[x]]
                if other[0] < a or other[-1] > b:
                    return False
    return True


class NCPartition(BaseModel):
    """A non-crossing partition of {1,...,k} in canonical form."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1, description="Size of the ground set {1,...,k}")
    blocks: Blocks = Field(description="Blocks, ascending inside and ordered by minimum")

    @model_validator(mode="after")
    def _check_canonical_noncrossing(self) -> "NCPartition":
        canonical = canonical_blocks(self.k, self.blocks)
        if canonical != self.blocks:
            raise ValueError(f"blocks are not in canonical order: {self.blocks}")
        if not crossing_free(canonical):
            raise ValueError(f"partition {format_blocks(canonical)} is crossing")
        return self

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], k: Optional[int] = None) -> "NCPartition":
        """Build a partition from blocks in any order.

        Args:
            blocks: Disjoint blocks covering {1..k}.
            k: Ground set size; inferred from the largest element when omitted.

        Raises:
            InvalidArgumentError: If the blocks are not a non-crossing set partition.
        """
        materialized = [tuple(block) for block in blocks]
        if k is None:
            k = max((max(block) for block in materialized if block), default=0)
        canonical = canonical_blocks(k, materialized)
        if not crossing_free(canonical):
            raise InvalidArgumentError(f"partition {format_blocks(canonical)} is crossing")
        return cls.model_construct(k=k, blocks=canonical)

    @classmethod
    def parse(cls, text: str, k: Optional[int] = None) -> "NCPartition":
        """Parse the ``1,4,8|2,3|5,6|7`` text form."""
        try:
            blocks = [
                tuple(int(x) for x in part.split(","))
                for part in text.strip().split("|")
            ]
        except ValueError as e:
            raise InvalidArgumentError(f"cannot parse partition {text!r}: {e}") from e
        return cls.from_blocks(blocks, k)

    @classmethod
    def zero(cls, k: int) -> "NCPartition":
        """The finest partition 0_k (all singletons)."""
        if k < 1:
            raise InvalidArgumentError(f"ground set size must be positive, got k={k}")
        return cls.model_construct(k=k, blocks=tuple((i,) for i in range(1, k + 1)))

    @classmethod
    def one(cls, k: int) -> "NCPartition":
        """The coarsest partition 1_k (a single block)."""
        if k < 1:
            raise InvalidArgumentError(f"ground set size must be positive, got k={k}")
        return cls.model_construct(k=k, blocks=(tuple(range(1, k + 1)),))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_index(self) -> tuple[int, ...]:
        """Map element j (position j-1) to the index of its block.

        Lexicographic order on this tuple is the enumeration order of NC(k).
        """
        index = [0] * self.k
        for i, block in enumerate(self.blocks):
            for x in block:
                index[x - 1] = i
        return tuple(index)

    def is_pairing(self) -> bool:
        return all(len(block) == 2 for block in self.blocks)

    def text(self) -> str:
        return format_blocks(self.blocks)

    def __str__(self) -> str:
        return self.text()


def format_blocks(blocks: Blocks) -> str:
    return "|".join(",".join(str(x) for x in block) for block in blocks)


class Permutation(BaseModel):
    """A bijection of {1,...,k}.

    ``images[j-1]`` is the image of j. Composition follows the usual
    convention ``(sigma * tau)(x) = sigma(tau(x))``.
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    images: tuple[int, ...]

    @model_validator(mode="after")
    def _check_bijection(self) -> "Permutation":
        if len(self.images) != self.k or sorted(self.images) != list(range(1, self.k + 1)):
            raise ValueError(f"images {self.images} are not a permutation of 1..{self.k}")
        return self

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(k=k, images=tuple(range(1, k + 1)))

    @classmethod
    def full_cycle(cls, k: int) -> "Permutation":
        """The cycle 1 -> 2 -> ... -> k -> 1."""
        return cls(k=k, images=tuple(range(2, k + 1)) + (1,))

    @classmethod
    def from_cycles(cls, k: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        images = list(range(1, k + 1))
        for cycle in cycles:
            cycle = tuple(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 1 <= a <= k:
                    raise InvalidArgumentError(f"cycle element {a} is outside 1..{k}")
                images[a - 1] = b
        try:
            return cls(k=k, images=tuple(images))
        except ValueError as e:
            raise InvalidArgumentError(f"cycles {cycles} do not define a permutation") from e

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Return ``self * other``, i.e. apply ``other`` first."""
        if other.k != self.k:
            raise InvalidArgumentError(f"cannot compose permutations of {self.k} and {other.k} points")
        return Permutation.model_construct(
            k=self.k, images=tuple(self.images[j - 1] for j in other.images)
        )

    __mul__ = compose

    def inverse(self) -> "Permutation":
        images = [0] * self.k
        for j, image in enumerate(self.images, start=1):
            images[image - 1] = j
        return Permutation.model_construct(k=self.k, images=tuple(images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles in traversal order, each starting at its minimum, ordered by minimum."""
        seen: set[int] = set()
        result = []
        for start in range(1, self.k + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            result.append(tuple(cycle))
        return tuple(result)

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
