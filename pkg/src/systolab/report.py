"""Claim reports: one machine-checked numeric claim each, plus rendering."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import DomainError

VERDICTS = ("pass", "fail", "flagged")


@dataclass(frozen=True)
class ClaimReport:
    """A replayed numeric claim: computed value vs published reference.

    verdict "pass" means |computed - reference| <= tolerance, "fail" means a
    genuine mismatch, and "flagged" marks documented discrepancies that are
    surfaced without failing a verification run.
    """

    claim_id: str
    where: str
    computed: float
    reference: float
    tolerance: float
    verdict: str
    note: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise DomainError(f"verdict must be one of {VERDICTS}, got {self.verdict!r}")

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "where": self.where,
            "computed": self.computed,
            "reference": self.reference,
            "tolerance": self.tolerance,
            "verdict": self.verdict,
            "note": self.note,
        }


def checked_claim(claim_id, where, computed, reference, tolerance, note="") -> ClaimReport:
    """Build a pass/fail claim from the standard tolerance rule."""
    ok = (
        math.isfinite(computed)
        and math.isfinite(reference)
        and abs(computed - reference) <= tolerance
    )
    return ClaimReport(
        claim_id=claim_id,
        where=where,
        computed=float(computed),
        reference=float(reference),
        tolerance=float(tolerance),
        verdict="pass" if ok else "fail",
        note=note,
    )


def any_failed(reports) -> bool:
    return any(r.verdict == "fail" for r in reports)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=1)


def format_report_table(reports) -> str:
    """Aligned human-readable table, one claim per line."""
    rows = []
    for r in reports:
        rows.append(
            (
                r.verdict.upper(),
                r.claim_id,
                _sig6(r.computed),
                _sig6(r.reference),
                _sig6(r.tolerance),
                r.note or r.where,
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    header = ("VERDICT", "CLAIM", "COMPUTED", "REFERENCE", "TOL", "NOTE")
    widths = [max(w, len(h)) for w, h in zip(widths, header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)) + "  "]
    for row in rows:
        lines.append(
            "  ".join(cell.ljust(w) for cell, w in zip(row[:5], widths)) + "  " + row[5]
        )
    return "\n".join(lines) + "\n"


def _sig6(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return f"{x:.6g}"
