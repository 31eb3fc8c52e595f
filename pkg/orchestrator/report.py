"""
Analysis report model and its JSON / text serializations.
"""
import json
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict


class IdealEcho(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str
    i: Optional[int] = None
    j: Optional[int] = None


class GrayEcho(BaseModel):
    model_config = ConfigDict(frozen=True)

    binary_length: int
    binary_size: int
    min_distance: int
    linear: bool
    witness: Optional[Tuple[int, int]] = None


class Provenance(BaseModel):
    """Which distribution paths ran and whether they agreed."""

    model_config = ConfigDict(frozen=True)

    methods: List[str]
    agreed: bool
    disagreeing: List[str] = []


class AnalysisReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    ideal: IdealEcho
    length: int
    size: int
    kernel_size: int
    lee_multiplicity: List[Tuple[int, int]]
    lee_distinct: List[Tuple[int, int]]
    quaternary_params: Tuple[int, int, int]
    gray: Optional[GrayEcho] = None
    provenance: Provenance

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.model_validate_json(text)

    def to_text(self) -> str:
        """One `key: value` line per fact; values are compact JSON."""
        lines = [f"{key}: {json.dumps(value, separators=(',', ':'))}" for key, value in self.model_dump().items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "AnalysisReport":
        data: Dict[str, object] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, _, value = line.partition(": ")
            data[key] = json.loads(value)
        return cls.model_validate(data)

    def summary(self) -> str:
        length, size, distance = self.quaternary_params
        text = f"({length}, {size}, {distance})_L"
        if self.gray is not None:
            kind = "linear" if self.gray.linear else "nonlinear"
            text += f"; Gray image {kind} ({self.gray.binary_length}, {self.gray.binary_size}, {self.gray.min_distance})"
        return text
