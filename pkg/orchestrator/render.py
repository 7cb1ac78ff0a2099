"""Rendering enumerations, reports and the summary table as markdown, CSV or JSON."""
import csv
import io
import json
from typing import Any, Dict, List, Sequence

from cycle.blowup import format_string
from cycle.enumerate import EnumeratedPlan
from models.report import ClassificationReport

FORMATS = ("markdown", "csv", "json")

# Known values for twistor spaces outside the computed family; shown, never computed
REFERENCE_ROWS: List[Dict[str, Any]] = [
    {
        "k": "",
        "string": "LeBrun (reference)",
        "case": "TypeIII",
        "h0_2F": 9,
        "movable_selfint": "",
        "image": "the system |2F| is generated by |F|; image a Veronese-embedded quadric surface (not computed)",
    },
    {
        "k": "",
        "string": "Campana-Kreussler (reference)",
        "case": "TypeIII",
        "h0_2F": 6,
        "movable_selfint": "",
        "image": "|2F| generated by |F|; image the Veronese surface in CP5 (not computed)",
    },
]


def _blank(value: Any) -> Any:
    return "" if value is None else value


def _markdown(headers: Sequence[str], rows: List[Sequence[Any]]) -> str:
    lines = ["| " + " | ".join(headers) + " |", "|" + "---|" * len(headers)]
    for row in rows:
        lines.append("| " + " | ".join(str(_blank(x)) for x in row) + " |")
    return "\n".join(lines) + "\n"


def _csv(headers: Sequence[str], rows: List[Sequence[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows([[_blank(x) for x in row] for row in rows])
    return out.getvalue()


def _tabular(headers: Sequence[str], rows: List[Sequence[Any]], fmt: str) -> str:
    if fmt == "markdown":
        return _markdown(headers, rows)
    if fmt == "csv":
        return _csv(headers, rows)
    if fmt == "json":
        return json.dumps([dict(zip(headers, row)) for row in rows], indent=2) + "\n"
    raise ValueError(f"Unknown output format {fmt!r}; choose from {', '.join(FORMATS)}")


def render_enumeration(plans: Sequence[EnumeratedPlan], fmt: str = "markdown") -> str:
    """One row per isomorphism class. JSON output is a list of loadable plans."""
    if fmt == "json":
        items = []
        for e in plans:
            item = e.plan.model_dump(mode="json", exclude_none=True)
            item.update(canonical_string=list(e.canonical_string), k=e.k,
                        kinds=list(e.kinds), pattern=e.pattern_text(), collision=e.collision)
            items.append(item)
        return json.dumps(items, indent=2) + "\n"
    headers = ["canonical string", "k", "node/off-node", "target pattern", "shared string", "plan"]
    rows = [
        [format_string(e.canonical_string), e.k, f"{e.kinds[0]}/{e.kinds[1]}", e.pattern_text(),
         "yes" if e.collision else "", e.plan.short()]
        for e in plans
    ]
    return _tabular(headers, rows, fmt)


REPORT_HEADERS = ["plan", "string", "k", "case", "h0(-K)", "h0(-2K)", "h0(2F)", "M^2",
                  "fixed part", "quadrics", "image dim", "3-fold quadrics", "3-fold dim", "errors"]


def _fixed(report: ClassificationReport) -> str:
    return " + ".join(f"{m}*C{i + 1}" if m > 1 else f"C{i + 1}" for i, m in sorted(report.fixed_part.items()))


def render_reports(reports: Sequence[ClassificationReport], fmt: str = "markdown") -> str:
    """One row per classification report."""
    if fmt == "json":
        return json.dumps([r.model_dump(mode="json") for r in reports], indent=2) + "\n"
    rows = [
        [r.plan.short(), format_string(r.string), r.k, r.case.value if r.case else "", r.h0_antican,
         r.h0_biantican, r.h0_2F, r.movable_selfint, _fixed(r), r.quadric_count, r.image_dimension,
         r.threefold_quadrics, r.threefold_dimension, "; ".join(r.errors)]
        for r in reports
    ]
    return _tabular(REPORT_HEADERS, rows, fmt)


def summary_rows(reports: Sequence[ClassificationReport]) -> List[Dict[str, Any]]:
    """One row per canonical string, ordered by k then string, plus the reference rows."""
    first: Dict[tuple, ClassificationReport] = {}
    for r in sorted(reports, key=lambda r: (r.k, r.canonical_string, r.plan.short())):
        if r.case is not None:
            first.setdefault(tuple(r.canonical_string), r)
    rows = [
        {
            "k": r.k,
            "string": format_string(r.canonical_string),
            "case": r.case.value,
            "h0_2F": _blank(r.h0_2F),
            "movable_selfint": _blank(r.movable_selfint) if r.case.is_classified else "",
            "image": r.image_description,
        }
        for r in first.values()
    ]
    return rows + REFERENCE_ROWS


def render_table(reports: Sequence[ClassificationReport], fmt: str = "markdown") -> str:
    rows = summary_rows(reports)
    headers = ["k", "string", "case", "h0_2F", "movable_selfint", "image"]
    return _tabular(headers, [[row[h] for h in headers] for row in rows], fmt)
