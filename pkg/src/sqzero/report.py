"""Pass/fail records produced by the verification routines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Case:
    label: str
    ok: bool
    detail: str = ""

    def to_json(self, suite: str) -> dict:
        out = {"suite": suite, "case": self.label, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    name: str
    cases: list[Case] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> bool:
        self.cases.append(Case(label, bool(ok), detail))
        return bool(ok)

    def extend(self, other: "Report"):
        self.cases.extend(other.cases)
        self.notes.extend(other.notes)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.ok]

    def json_lines(self) -> list[str]:
        lines = [json.dumps(c.to_json(self.name), ensure_ascii=False) for c in self.cases]
        lines += [json.dumps({"suite": self.name, "note": n}, ensure_ascii=False) for n in self.notes]
        return lines

    def summary(self) -> str:
        bad = len(self.failures)
        status = "PASS" if bad == 0 else "FAIL"
        return f"{self.name}: {status} ({len(self.cases) - bad}/{len(self.cases)} cases)"
