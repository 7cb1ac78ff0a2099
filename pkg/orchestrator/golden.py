"""Expected values per canonical string, kept as a CSV file next to the code."""
import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

from config.settings import settings
from core.errors import StructuralError
from cycle.blowup import canonical_form
from models.report import Case, ClassificationReport

COMPARED_FIELDS = (
    "h0_antican",
    "h0_biantican",
    "h0_2F",
    "movable_selfint",
    "quadric_count",
    "threefold_quadrics",
    "threefold_dimension",
)


@dataclass(frozen=True)
class GoldenRow:
    """One expected outcome. Blank numeric cells are not compared."""
    string: Tuple[int, ...]
    case: Case
    values: Dict[str, Optional[int]]
    source: str = ""
    note: str = ""
    
    @property
    def key(self) -> Tuple[int, ...]:
        return canonical_form(self.string)


def parse_string(text: str) -> Tuple[int, ...]:
    """Parse ``(-3,-1,-3,-1)`` or ``-3 -1 -3 -1``."""
    cleaned = text.strip().strip("()").replace(",", " ")
    try:
        return tuple(int(x) for x in cleaned.split())
    except ValueError as e:
        raise StructuralError(f"Bad string {text!r} in golden file") from e


def _cell(value: str) -> Optional[int]:
    value = value.strip()
    return int(value) if value else None


def load_golden(path: Union[str, Path, None] = None) -> Dict[Tuple[int, ...], GoldenRow]:
    """Rows keyed by canonical string; strings may be written in any rotation."""
    path = Path(path) if path is not None else settings.golden_path
    rows: Dict[Tuple[int, ...], GoldenRow] = {}
    with open(path, newline="", encoding="utf-8") as f:
        for record in csv.DictReader(f):
            row = GoldenRow(
                string=parse_string(record["string"]),
                case=Case(record["case"]),
                values={name: _cell(record.get(name, "")) for name in COMPARED_FIELDS},
                source=record.get("source", ""),
                note=record.get("note", ""),
            )
            if row.key in rows:
                raise StructuralError(f"Duplicate golden row for {record['string']}")
            rows[row.key] = row
    return rows


def diff(reports: Iterable[ClassificationReport], golden: Dict[Tuple[int, ...], GoldenRow],
         require_all: bool = False) -> List[str]:
    """Human-readable mismatches between computed reports and the golden table.

    With ``require_all`` every golden row must be matched by at least one report.
    """
    problems: List[str] = []
    seen = set()
    for report in reports:
        label = f"{report.plan.short()} {tuple(report.string)}"
        problems.extend(f"{label}: {error}" for error in report.errors)
        if report.case is None:
            continue
        key = tuple(report.canonical_string)
        row = golden.get(key)
        if row is None:
            problems.append(f"{label}: no golden row for canonical string {key}")
            continue
        seen.add(key)
        if report.case != row.case:
            problems.append(f"{label}: case {report.case.value}, expected {row.case.value} [{row.source}]")
        for name, expected in row.values.items():
            actual = getattr(report, name)
            if expected is not None and actual != expected:
                problems.append(f"{label}: {name} = {actual}, expected {expected} [{row.source}]")
    if require_all:
        problems.extend(f"golden row {row.string} never produced" for key, row in golden.items() if key not in seen)
    return problems
