"""Canonical JSON documents for series and distributions."""

import logging
from pathlib import Path
from typing import Optional, Union

from pydantic import ValidationError

from app.errors import InvalidArgumentError
from app.models.distribution import JointDistribution
from app.models.documents import DistributionDocument, SeriesDocument, document_adapter
from app.models.power_series import NCSeries, format_scalar, format_word
from app.tools.freeprob import is_tracial
from app.tools.series import truncate

logger = logging.getLogger(__name__)

Value = Union[NCSeries, JointDistribution]


def to_document(
    value: Value, tracial: Optional[bool] = None
) -> Union[SeriesDocument, DistributionDocument]:
    """Wrap a value in its document model; keys come out in (length, lex) order."""
    if isinstance(value, NCSeries):
        return SeriesDocument(
            n=value.n,
            max_degree=value.max_degree,
            coeffs={format_word(w): format_scalar(c) for w, c in value.items_sorted()},
        )
    return DistributionDocument(
        n=value.n,
        max_degree=value.max_degree,
        tracial=tracial,
        moments={format_word(w): format_scalar(v) for w, v in value.items_sorted()},
    )


def from_document(document: Union[SeriesDocument, DistributionDocument]) -> Value:
    """Build the value a document describes.

    Raises:
        InvalidArgumentError: If keys or scalars are malformed, or a document
            marked tracial is not.
    """
    try:
        if isinstance(document, SeriesDocument):
            return NCSeries(n=document.n, max_degree=document.max_degree, coeffs=document.coeffs)
        mu = JointDistribution(
            n=document.n, max_degree=document.max_degree, moments=document.moments
        )
    except ValidationError as e:
        raise InvalidArgumentError(f"invalid {document.kind} document: {e}") from e
    if document.tracial and not is_tracial(mu):
        raise InvalidArgumentError("distribution is marked tracial but its moments are not")
    return mu


def dumps(value: Value, tracial: Optional[bool] = None) -> str:
    return to_document(value, tracial).model_dump_json(indent=2, exclude_none=True) + "\n"


def loads(text: str) -> Value:
    try:
        document = document_adapter.validate_json(text)
    except ValidationError as e:
        raise InvalidArgumentError(f"not a series or distribution document: {e}") from e
    return from_document(document)


def cap_degree(value: Value, max_degree: int) -> Value:
    """Truncate a value loaded above the degree cap; values within it come back unchanged."""
    if value.max_degree <= max_degree:
        return value
    logger.info(f"[codec] truncating input from degree {value.max_degree} to {max_degree}")
    if isinstance(value, NCSeries):
        return truncate(value, max_degree)
    return value.truncate(max_degree)


def read_value(path: Union[str, Path]) -> Value:
    logger.debug(f"[codec] reading {path}")
    return loads(Path(path).read_text())


def read_series(path: Union[str, Path]) -> NCSeries:
    value = read_value(path)
    if not isinstance(value, NCSeries):
        raise InvalidArgumentError(f"{path} holds a distribution, a series was expected")
    return value


def read_distribution(path: Union[str, Path]) -> JointDistribution:
    value = read_value(path)
    if not isinstance(value, JointDistribution):
        raise InvalidArgumentError(f"{path} holds a series, a distribution was expected")
    return value


def write_value(value: Value, path: Union[str, Path], tracial: Optional[bool] = None) -> None:
    Path(path).write_text(dumps(value, tracial))
    logger.debug(f"[codec] wrote {path}")
