"""Words, exact scalars and truncated series in non-commuting variables."""

import re
from fractions import Fraction
from itertools import product
from typing import Any, Iterable, Iterator, Mapping, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.errors import InvalidArgumentError, TruncationExceededError

Word = tuple[int, ...]
Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_scalar(value: Any) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a reduced Fraction.

    Floats are rejected: every quantity here is an exact rational.
    """
    if isinstance(value, bool):
        raise InvalidArgumentError(f"not a rational scalar: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _SCALAR_RE.match(value)
        if not match:
            raise InvalidArgumentError(f"not a rational of the form p/q: {value!r}")
        numerator, denominator = match.group(1), match.group(2)
        if denominator is not None and int(denominator) == 0:
            raise InvalidArgumentError(f"zero denominator in {value!r}")
        return Fraction(int(numerator), int(denominator or 1))
    raise InvalidArgumentError(f"not a rational scalar: {value!r}")


def format_scalar(value: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    return str(value)


def format_word(word: Word) -> str:
    return ",".join(str(i) for i in word)


def parse_word(text: str) -> Word:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise InvalidArgumentError(f"cannot parse word {text!r}") from e


def word_key(word: Word) -> tuple[int, Word]:
    """Canonical ordering: by length, then lexicographically."""
    return (len(word), word)


def check_word(word: Iterable[int], n: int) -> Word:
    """Validate a non-empty word over the letters 1..n."""
    word = tuple(word)
    if not word:
        raise InvalidArgumentError("words must be non-empty")
    for i in word:
        if not 1 <= i <= n:
            raise InvalidArgumentError(f"letter {i} in word {format_word(word)} is outside 1..{n}")
    return word


def words(n: int, k: int) -> Iterator[Word]:
    """All words of length k over 1..n in lexicographic order."""
    return product(range(1, n + 1), repeat=k)


def words_upto(n: int, d: int) -> Iterator[Word]:
    """All non-empty words of length at most d, in canonical order."""
    for k in range(1, d + 1):
        yield from words(n, k)


def normalize_word_map(value: Any) -> dict[Word, Fraction]:
    if not isinstance(value, Mapping):
        raise ValueError("coefficients must be a mapping from words to scalars")
    result: dict[Word, Fraction] = {}
    for key, raw in value.items():
        word = parse_word(key) if isinstance(key, str) else tuple(int(i) for i in key)
        scalar = to_scalar(raw)
        if scalar:
            result[word] = scalar
    return result


def check_words_within(words_: Iterable[Word], n: int, max_degree: int) -> None:
    for word in words_:
        check_word(word, n)
        if len(word) > max_degree:
            raise ValueError(f"word {format_word(word)} exceeds max_degree={max_degree}")


class NCSeries(BaseModel):
    """A truncated power series in n non-commuting variables, no constant term.

    Coefficients are stored sparsely; absent words are zero and zeros are
    never stored, so structural equality is equality of series.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=1, description="Number of variables")
    max_degree: int = Field(ge=1, description="Truncation degree")
    coeffs: dict[Word, Fraction] = Field(default_factory=dict)

    @field_validator("coeffs", mode="before")
    @classmethod
    def _normalize_coeffs(cls, value: Any) -> dict[Word, Fraction]:
        return normalize_word_map(value)

    @model_validator(mode="after")
    def _check_coeff_words(self) -> "NCSeries":
        check_words_within(self.coeffs, self.n, self.max_degree)
        return self

    @classmethod
    def trusted(cls, n: int, max_degree: int, coeffs: dict[Word, Fraction]) -> "NCSeries":
        """Wrap coefficients that are already valid, zero-free Fractions."""
        return cls.model_construct(n=n, max_degree=max_degree, coeffs=coeffs)

    @classmethod
    def zero(cls, n: int, max_degree: int) -> "NCSeries":
        return cls.model_construct(n=n, max_degree=max_degree, coeffs={})

    def coefficient(self, word: Iterable[int]) -> Fraction:
        """Coefficient of a word, zero when absent.

        Raises:
            InvalidArgumentError: If the word uses letters outside 1..n.
            TruncationExceededError: If the word is longer than max_degree.
        """
        word = check_word(word, self.n)
        if len(word) > self.max_degree:
            raise TruncationExceededError(len(word), self.max_degree, word)
        return self.coeffs.get(word, ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def items_sorted(self) -> list[tuple[Word, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda item: word_key(item[0]))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for word, value in self.items_sorted():
            monomial = "".join(f"z{i}" for i in word)
            terms.append(f"({value}){monomial}")
        return " + ".join(terms)


class SSeries(BaseModel):
    """A one-variable series with non-zero constant term, truncated.

    ``coefficients[j]`` is the coefficient of z**j for j < precision.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficients: tuple[Fraction, ...]

    @field_validator("coefficients", mode="before")
    @classmethod
    def _to_fractions(cls, value: Any) -> tuple[Fraction, ...]:
        return tuple(to_scalar(v) for v in value)

    @model_validator(mode="after")
    def _check_constant_term(self) -> "SSeries":
        if not self.coefficients or self.coefficients[0] == 0:
            raise ValueError("an S-series needs a non-zero constant term")
        return self

    @property
    def precision(self) -> int:
        return len(self.coefficients)

    def truncate(self, precision: int) -> "SSeries":
        if not 1 <= precision <= self.precision:
            raise InvalidArgumentError(
                f"cannot truncate an S-series of precision {self.precision} to {precision}"
            )
        return SSeries.model_construct(coefficients=self.coefficients[:precision])
