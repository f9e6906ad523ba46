from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, replace
from typing import Any

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class Entry:
    label: str
    anchor: str
    residual: float
    passed: bool
    detail: str = ""
    # pass flag set by a threshold of its own, not by the suite tolerance
    fixed: bool = False

    @classmethod
    def measure(cls, label: str, anchor: str, residual: float, tol: float = DEFAULT_TOL) -> Entry:
        residual = float(residual)
        return cls(label=label, anchor=anchor, residual=residual, passed=residual <= tol)

    @classmethod
    def shortfall(cls, label: str, anchor: str, shortfall: float, detail: str = "") -> Entry:
        """A "must differ" check: residual is how far the change falls short of its threshold."""
        shortfall = max(0.0, float(shortfall))
        return cls(label=label, anchor=anchor, residual=shortfall, passed=shortfall == 0.0, detail=detail, fixed=True)

    @classmethod
    def failure(cls, label: str, anchor: str, detail: str) -> Entry:
        return cls(label=label, anchor=anchor, residual=float("inf"), passed=False, detail=detail)

    def judged(self, tol: float) -> Entry:
        """Same measurement, pass flag recomputed against another tolerance."""
        if self.fixed:
            return self
        return replace(self, passed=self.residual <= tol)


def _entry_dict(entry: Entry) -> dict[str, Any]:
    # JSON has no Infinity; a failed check is written as the string "inf"
    data = asdict(entry)
    if math.isinf(entry.residual):
        data["residual"] = "inf"
    return data


@dataclass(frozen=True)
class Report:
    suite: str
    tolerance: float
    seed: int | None
    trials: int
    dim: int | None
    entries: tuple[Entry, ...]

    @property
    def passed_count(self) -> int:
        return sum(1 for e in self.entries if e.passed)

    @property
    def failed_count(self) -> int:
        return len(self.entries) - self.passed_count

    @property
    def all_passed(self) -> bool:
        return self.failed_count == 0

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "tolerance": self.tolerance,
            "seed": self.seed,
            "trials": self.trials,
            "dim": self.dim,
            "summary": {"passed": self.passed_count, "failed": self.failed_count},
            "entries": [_entry_dict(e) for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Report:
        data = json.loads(text)
        entries = tuple(Entry(**{**item, "residual": float(item["residual"])}) for item in data["entries"])
        return cls(
            suite=data["suite"],
            tolerance=float(data["tolerance"]),
            seed=data["seed"],
            trials=int(data["trials"]),
            dim=data["dim"],
            entries=entries,
        )


def merge_entries(entries: list[Entry], tol: float) -> list[Entry]:
    """Fold repeated identities into one entry keeping the worst residual.

    Order is first appearance, so merging trial results in trial order is
    deterministic.
    """
    merged: dict[tuple[str, str], Entry] = {}
    for entry in entries:
        key = (entry.label, entry.anchor)
        seen = merged.get(key)
        if seen is None:
            merged[key] = entry
            continue
        worst = entry if entry.residual > seen.residual else seen
        merged[key] = replace(worst, detail=seen.detail or entry.detail)
    return [e.judged(tol) for e in merged.values()]
