"""Report tables built from evaluation results.

Average positive/negative distances are max-min normalized per method at
reporting time (over the pooled positive and negative distances of that
method), so the numbers are comparable across metrics with different
scales. Verdicts are never computed on normalized values.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .simulate import EvalReport


@dataclass
class ReportTable:
    columns: list[str]
    rows: list[list]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow(row)
        return buf.getvalue()

    def to_text(self) -> str:
        def fmt(value) -> str:
            if isinstance(value, float):
                return f"{value:.4f}"
            return str(value)

        cells = [self.columns] + [[fmt(v) for v in row] for row in self.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.columns))]
        lines = []
        for r, row in enumerate(cells):
            lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
            if r == 0:
                lines.append("  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"


def _method_bounds(report: EvalReport, method_id: str) -> tuple[float, float]:
    values = [
        v
        for o in report.outcomes
        if o.method_id == method_id
        for v in (o.d_pos, o.d_neg)
    ]
    if not values:
        return (0.0, 0.0)
    return (min(values), max(values))


def _rescale(value: float, lo: float, hi: float) -> float:
    if hi == lo:
        return 0.0
    return (value - lo) / (hi - lo)


def method_category_table(report: EvalReport) -> ReportTable:
    """Per-(method, category) accuracy and normalized average distances."""
    rows = []
    categories = report.category_values()
    for method_id in report.method_ids:
        lo, hi = _method_bounds(report, method_id)
        for category in categories:
            stats = report.stats_for(method_id, category)
            if stats.total == 0 and stats.errors == 0:
                continue
            rows.append(
                [
                    method_id,
                    category,
                    stats.accuracy,
                    _rescale(stats.avg_pos, lo, hi) if stats.total else 0.0,
                    _rescale(stats.avg_neg, lo, hi) if stats.total else 0.0,
                    stats.total,
                    stats.ties,
                    stats.errors,
                ]
            )
    return ReportTable(
        columns=["method", "category", "acc", "avg_d_pos", "avg_d_neg", "n", "ties", "errors"],
        rows=rows,
    )


def accuracy_table(report: EvalReport) -> ReportTable:
    """One row per method: per-category accuracies plus overall."""
    categories = report.category_values()
    rows = []
    for method_id in report.method_ids:
        row: list = [method_id]
        for category in categories:
            row.append(report.accuracy(method_id, category))
        row.append(report.accuracy(method_id))
        rows.append(row)
    return ReportTable(columns=["method", *categories, "overall"], rows=rows)


def accuracy_drop_table(base_report: EvalReport, control_report: EvalReport) -> ReportTable:
    """Accuracy on the control (non-metamorphic) corpus minus accuracy on
    the metamorphic corpus, per method."""
    rows = []
    for method_id in base_report.method_ids:
        if method_id not in control_report.method_ids:
            continue
        metamorphic = base_report.accuracy(method_id)
        control = control_report.accuracy(method_id)
        rows.append([method_id, control, metamorphic, control - metamorphic])
    return ReportTable(
        columns=["method", "acc_control", "acc_metamorphic", "accuracy_drop"],
        rows=rows,
    )
