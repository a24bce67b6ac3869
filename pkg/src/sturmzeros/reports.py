"""Report envelope written by the command-line tool."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from . import __version__
from .bounds import BoundSuiteReport
from .convexity import ConvexityReport, EmpiricalClassification
from .families import FamilySpec
from .normal_form import NormalFormProfile
from .serialize import from_jsonable, to_jsonable
from .sweep import SweepSummary
from .zeros import ZeroSet


@dataclass(frozen=True)
class GridPoint:
    t: float
    F: float
    j: Optional[float] = None


@dataclass(frozen=True)
class NormalFormPayload:
    profile: NormalFormProfile
    grid: tuple[GridPoint, ...]


@dataclass(frozen=True)
class ClassificationPayload:
    report: ConvexityReport
    empirical: Optional[EmpiricalClassification]
    tol_rel: float


PAYLOAD_TYPES = {
    cls.__name__: cls
    for cls in (ZeroSet, NormalFormPayload, ClassificationPayload, BoundSuiteReport, SweepSummary)
}


@dataclass(frozen=True)
class ReportEnvelope:
    command: str
    spec_echo: Optional[FamilySpec]
    payload: Any
    tool_version: str = __version__

    def to_dict(self):
        return {
            "tool_version": self.tool_version,
            "command": self.command,
            "spec_echo": to_jsonable(self.spec_echo),
            "payload_type": type(self.payload).__name__,
            "payload": to_jsonable(self.payload),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_dict(cls, data) -> "ReportEnvelope":
        ptype = PAYLOAD_TYPES[data["payload_type"]]
        return cls(
            command=data["command"],
            spec_echo=from_jsonable(Optional[FamilySpec], data["spec_echo"]),
            payload=from_jsonable(ptype, data["payload"]),
            tool_version=data["tool_version"],
        )

    @classmethod
    def loads(cls, text: str) -> "ReportEnvelope":
        return cls.from_dict(json.loads(text))
