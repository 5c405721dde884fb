"""Structured pass/fail reports shared by all verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    """One verified identity.

    For a negative control, ``passed`` means the deliberately corrupted
    input was correctly detected as defective.
    """

    check_id: str
    passed: bool
    negative_control: bool = False
    detail: str = ""
    defect: str = ""
    wall_ms: float | None = None

    def as_dict(self, stable: bool = False) -> dict:
        d = {
            "check_id": self.check_id,
            "passed": self.passed,
            "negative_control": self.negative_control,
            "detail": self.detail,
            "defect": self.defect,
        }
        if not stable and self.wall_ms is not None:
            d["wall_ms"] = round(self.wall_ms, 3)
        return d


@dataclass
class Report:
    title: str
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, check_id: str, passed: bool, *, negative_control: bool = False,
            detail: str = "", defect: str = "", wall_ms: float | None = None) -> CheckRecord:
        rec = CheckRecord(check_id, bool(passed), negative_control, detail, defect, wall_ms)
        self.records.append(rec)
        return rec

    def extend(self, other: "Report") -> None:
        self.records.extend(other.records)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def counts(self) -> dict:
        return {
            "total": len(self.records),
            "passed": sum(r.passed for r in self.records),
            "failed": sum(not r.passed for r in self.records),
            "negative_controls": sum(r.negative_control for r in self.records),
        }

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def as_dict(self, stable: bool = False) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "summary": self.counts,
            "records": [r.as_dict(stable) for r in sorted(self.records, key=lambda r: r.check_id)],
        }

    def to_json(self, stable: bool = False) -> str:
        return json.dumps(self.as_dict(stable), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"== {self.title} =="]
        for r in sorted(self.records, key=lambda r: r.check_id):
            tag = "PASS" if r.passed else "FAIL"
            nc = " [negative-control]" if r.negative_control else ""
            extra = f"  ({r.detail})" if r.detail else ""
            lines.append(f"{tag}{nc} {r.check_id}{extra}")
            if not r.passed and r.defect:
                lines.append(f"      defect: {r.defect}")
        c = self.counts
        lines.append(f"-- {c['passed']}/{c['total']} passed --")
        return "\n".join(lines)
