"""Joint distributions of n-tuples, represented by their moments."""

from fractions import Fraction
from typing import Any, Iterable

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.errors import InvalidArgumentError, TruncationExceededError
from app.models.power_series import (
    ONE,
    ZERO,
    Word,
    check_words_within,
    normalize_word_map,
    word_key,
)


class JointDistribution(BaseModel):
    """Moments mu(X_{i1}...X_{ik}) of an n-tuple up to a truncation degree.

    The empty word has moment 1 by construction and is never stored.
    Positivity is not modeled: any rational moment data is accepted.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=1, description="Number of variables in the tuple")
    max_degree: int = Field(ge=1, description="Largest word length with a known moment")
    moments: dict[Word, Fraction] = Field(default_factory=dict)

    @field_validator("moments", mode="before")
    @classmethod
    def _normalize_moments(cls, value: Any) -> dict[Word, Fraction]:
        return normalize_word_map(value)

    @model_validator(mode="after")
    def _check_moment_words(self) -> "JointDistribution":
        check_words_within(self.moments, self.n, self.max_degree)
        return self

    @classmethod
    def trusted(cls, n: int, max_degree: int, moments: dict[Word, Fraction]) -> "JointDistribution":
        return cls.model_construct(n=n, max_degree=max_degree, moments=moments)

    def moment(self, word: Iterable[int]) -> Fraction:
        """Moment of a word; the empty word gives 1.

        Raises:
            InvalidArgumentError: If the word uses letters outside 1..n.
            TruncationExceededError: If the word is longer than max_degree.
        """
        word = tuple(word)
        if not word:
            return ONE
        for i in word:
            if not 1 <= i <= self.n:
                raise InvalidArgumentError(f"letter {i} is outside 1..{self.n}")
        if len(word) > self.max_degree:
            raise TruncationExceededError(len(word), self.max_degree, word)
        return self.moments.get(word, ZERO)

    def truncate(self, d: int) -> "JointDistribution":
        if not 1 <= d <= self.max_degree:
            raise InvalidArgumentError(f"cannot truncate max_degree={self.max_degree} to {d}")
        return JointDistribution.trusted(
            self.n, d, {w: v for w, v in self.moments.items() if len(w) <= d}
        )

    def items_sorted(self) -> list[tuple[Word, Fraction]]:
        return sorted(self.moments.items(), key=lambda item: word_key(item[0]))
