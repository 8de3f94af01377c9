"""Verification reports and their canonical serializations.

The JSON rendering is the stable interface (schema "socle-lab/1"):
key-sorted, compact separators, no timing data, so two runs with the same
seed and version are byte-identical.  Wall-clock times per row are kept
on the objects and shown in the human-readable rendering only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA = "socle-lab/1"


@dataclass
class ReportRow:
    claim_id: str
    claim: str
    computed: object
    expected: object
    source: str  # "literature" | "derived" | "info"
    passed: bool
    flagged: bool = False
    error: str | None = None
    wall_ms: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "id": self.claim_id,
            "claim": self.claim,
            "computed": self.computed,
            "expected": self.expected,
            "source": self.source,
            "pass": self.passed,
            "flagged": self.flagged,
            "error": self.error,
        }


@dataclass
class VerificationReport:
    version: str
    instance: dict
    characteristic: int
    seed: int
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "version": self.version,
            "instance": self.instance,
            "characteristic": self.characteristic,
            "seed": self.seed,
            "rows": [r.to_json_dict() for r in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(
            self.to_json_dict(),
            sort_keys=True,
            separators=(",", ":"),
            ensure_ascii=False,
        )

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.instance.items()))
        lines = [f"# {params} char={self.characteristic} seed={self.seed}"]
        for r in self.rows:
            if r.error is not None:
                status = "ERROR"
                detail = r.error
            elif r.flagged:
                status = "NOTE "
                detail = f"computed={_fmt(r.computed)}"
            else:
                status = "PASS " if r.passed else "FAIL "
                detail = f"computed={_fmt(r.computed)} expected={_fmt(r.expected)}"
            lines.append(
                f"{status} {r.claim_id:<34} {detail}"
                f"  [{r.source}] ({r.wall_ms:.0f} ms)"
            )
        passed = sum(1 for r in self.rows if r.passed)
        failed = sum(1 for r in self.rows if not r.passed)
        flagged = sum(1 for r in self.rows if r.flagged)
        lines.append(
            f"# rows={len(self.rows)} passed={passed} failed={failed} "
            f"informational={flagged}"
        )
        return "\n".join(lines)


def _fmt(value) -> str:
    if value is None:
        return "-"
    return json.dumps(value, sort_keys=True)


def merge_reports(first: VerificationReport, *rest) -> VerificationReport:
    merged = VerificationReport(
        version=first.version,
        instance=first.instance,
        characteristic=first.characteristic,
        seed=first.seed,
        rows=list(first.rows),
    )
    for other in rest:
        merged.rows.extend(other.rows)
    return merged
