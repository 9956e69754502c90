"""JSON document shapes for series and distributions.

Word keys are comma-joined 1-based letters (``"1,2"``); scalar values are
reduced fractions written ``"p/q"``, or ``"p"`` when q = 1.
"""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, Field, TypeAdapter


class SeriesDocument(BaseModel):
    """``{"kind": "series", "n": 2, "max_degree": 4, "coeffs": {"1": "1", "1,2": "3/4"}}``"""

    kind: Literal["series"] = "series"
    n: int = Field(ge=1)
    max_degree: int = Field(ge=1)
    coeffs: dict[str, Union[str, int]] = Field(default_factory=dict)


class DistributionDocument(BaseModel):
    """``{"kind": "distribution", "n": 2, "max_degree": 4, "tracial": true, "moments": {...}}``

    ``tracial`` is advisory; when present and true it is checked on load.
    """

    kind: Literal["distribution"] = "distribution"
    n: int = Field(ge=1)
    max_degree: int = Field(ge=1)
    tracial: Optional[bool] = None
    moments: dict[str, Union[str, int]] = Field(default_factory=dict)


Document = Annotated[Union[SeriesDocument, DistributionDocument], Field(discriminator="kind")]

document_adapter: TypeAdapter[Document] = TypeAdapter(Document)
