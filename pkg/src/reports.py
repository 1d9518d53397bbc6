"""
Report models for every JSON document the CLI and API emit.

Each model validates its payload on construction; ``schema_documents()``
exposes their JSON Schemas under a shared schema version.
"""

import json
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


class _Report(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class VoltageModel(_Report):
    p: int = Field(ge=2)
    n: int = Field(ge=1, le=4)
    zeta: list[list[int]] = Field(min_length=5, max_length=5)


class CoverClassModel(_Report):
    representative: VoltageModel
    lifting_group_order: int = Field(ge=1)
    arc_transitive: bool
    matched_family: Optional[str] = None


class CoverClassList(_Report):
    p: int
    n: int
    strategy: str
    classes: list[CoverClassModel]
    strategies_agree: Optional[bool] = None


class SymmetryReport(_Report):
    family: Optional[str] = None
    vertices: int = Field(ge=1)
    aut_order: int = Field(ge=1)
    girth: Optional[int] = None
    s: int = Field(ge=0, le=5)
    stabilizer_order: int = Field(ge=1)
    catalog: list[str] = Field(default_factory=list)
    basic: Optional[bool] = None
    witness_order: Optional[int] = None
    quotient: Optional[str] = None
    notes: list[str] = Field(default_factory=list)


class QuotientStep(_Report):
    normal_order: int = Field(ge=2)
    vertices: int = Field(ge=1)
    family: Optional[str] = None


class QuotientChain(_Report):
    family: Optional[str] = None
    vertices: int
    basic: bool
    steps: list[QuotientStep]


class CensusGraph(_Report):
    family: str
    vertices: int
    aut_order: int
    s: int
    stabilizer_order: int


class CensusReport(_Report):
    p: int
    count: int = Field(ge=0)
    graphs: list[CensusGraph]
    pairwise_non_isomorphic: bool
    notes: list[str] = Field(default_factory=list)


class VerifyItem(_Report):
    item: int = Field(ge=1, le=9)
    name: str
    passed: bool
    expected: str
    observed: str
    deep: bool = False


class VerifySuite(_Report):
    deep: bool
    passed: bool
    items: list[VerifyItem]


SCHEMA_MODELS: dict[str, type[BaseModel]] = {
    "voltage": VoltageModel,
    "cover_classes": CoverClassList,
    "symmetry_report": SymmetryReport,
    "quotient_chain": QuotientChain,
    "census_report": CensusReport,
    "verify_suite": VerifySuite,
}


def schema_documents() -> dict[str, dict[str, Any]]:
    """JSON Schema per report name, tagged with ``schema_version``."""
    documents = {}
    for name, model in SCHEMA_MODELS.items():
        schema = model.model_json_schema()
        schema["schema_version"] = SCHEMA_VERSION
        documents[name] = schema
    return documents


def to_json(report: BaseModel) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True)


def render_pretty(report: BaseModel) -> str:
    """Aligned ``key  value`` lines; nested lists render one entry per line."""
    data = report.model_dump(mode="json")
    width = max((len(k) for k in data), default=0)
    lines = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key.ljust(width)}")
            for entry in value:
                lines.append("  " + ", ".join(f"{k}={entry[k]}" for k in sorted(entry)))
        else:
            lines.append(f"{key.ljust(width)}  {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines)
