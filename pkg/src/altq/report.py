"""Check reports with deterministic JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

__all__ = ["CheckReport", "reports_to_json", "PASS", "FAIL", "SKIPPED"]

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class CheckReport:
    check_id: str
    status: str
    anchor: str = ""
    details: dict[str, Any] = field(default_factory=dict)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @classmethod
    def of(cls, check_id: str, ok: bool, anchor: str = "", **details) -> "CheckReport":
        return cls(check_id, PASS if ok else FAIL, anchor, details)

    def to_json(self) -> dict:
        # duration is left out so that reruns are byte-identical
        return {
            "check_id": self.check_id,
            "status": self.status,
            "anchor": self.anchor,
            "details": _jsonable(self.details),
        }

    def __bool__(self):
        return self.passed


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, type(None), str)):
        return x
    if isinstance(x, float):
        return repr(x)
    return str(x)


def reports_to_json(reports: list[CheckReport]) -> str:
    ordered = sorted(reports, key=lambda r: r.check_id)
    return json.dumps([r.to_json() for r in ordered], indent=2, sort_keys=True) + "\n"
