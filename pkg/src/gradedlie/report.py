"""Text and machine (JSON) renderings of a theorem report."""

from __future__ import annotations

import json

from .theorems import REPORT_VERSION, TheoremEntry, TheoremReport


def report_to_dict(report: TheoremReport, timings: bool = True) -> dict:
    entries = []
    for e in report.entries:
        d = e.to_dict()
        if not timings:
            d["millis"] = None
        entries.append(d)
    return {
        "version": report.version,
        "variant": report.variant,
        "corpus": list(report.corpus),
        "skipped": list(report.skipped),
        "entries": entries,
    }


def emit_report(report: TheoremReport, fmt: str = "text", timings: bool = True) -> str:
    """Render a report.  Output is byte-identical for identical reports;
    pass ``timings=False`` to drop wall-clock times and make reruns identical."""
    if fmt == "machine":
        return json.dumps(report_to_dict(report, timings), indent=2, sort_keys=True) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [f"theorem check, variant={report.variant}, corpus: {', '.join(report.corpus)}"]
    if report.skipped:
        lines.append(f"skipped (decisions need a finite field): {', '.join(report.skipped)}")
    width = max((len(e.id) for e in report.entries), default=2)
    for e in report.entries:
        cost = f"checked {e.instances} instances in {e.millis} ms" if timings else f"checked {e.instances} instances"
        lines.append(f"{e.id:<{width}}  {e.status:<14}  {cost}  | {e.statement}")
        if e.witness:
            lines.append(" " * (width + 2) + "witness: " + ", ".join(f"{k}={v}" for k, v in e.witness.items()))
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> TheoremReport:
    doc = json.loads(text)
    if doc.get("version") != REPORT_VERSION:
        raise ValueError(f"unsupported report version {doc.get('version')!r}")
    entries = [TheoremEntry(**e) for e in doc["entries"]]
    return TheoremReport(doc["variant"], doc["corpus"], doc["skipped"], entries, doc["version"])
