"""Figure rendering for the report path.

Renders the same aggregates the CSV tables carry: per-category accuracy
bars per method, paired average positive/negative distance bars, and the
accuracy-drop chart when a control run is present. Files are written next
to the delimited output; callers can turn rendering off entirely.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .report import ReportTable, _method_bounds, _rescale
from .simulate import EvalReport


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def accuracy_figure(report: EvalReport, path: str | Path) -> Path:
    """Grouped bars: accuracy per category, one group per method."""
    categories = report.category_values()
    methods = report.method_ids
    x = np.arange(len(categories))
    width = 0.8 / max(len(methods), 1)
    fig, ax = plt.subplots(figsize=(max(6.0, 1.2 * len(categories)), 4.0))
    for i, method_id in enumerate(methods):
        accs = [report.accuracy(method_id, c) for c in categories]
        ax.bar(x + i * width, accs, width, label=method_id)
    ax.set_xticks(x + width * (len(methods) - 1) / 2)
    ax.set_xticklabels(categories, rotation=30, ha="right")
    ax.set_ylabel("accuracy")
    ax.set_ylim(0, 1.05)
    ax.legend(fontsize=7)
    return _save(fig, Path(path))


def distance_figure(report: EvalReport, path: str | Path) -> Path:
    """Paired bars per category: normalized average positive (left) and
    negative (right) distance, one panel per method."""
    categories = report.category_values()
    methods = report.method_ids
    fig, axes = plt.subplots(
        len(methods),
        1,
        figsize=(max(6.0, 1.2 * len(categories)), 2.6 * max(len(methods), 1)),
        squeeze=False,
    )
    x = np.arange(len(categories))
    for row, method_id in enumerate(methods):
        ax = axes[row][0]
        lo, hi = _method_bounds(report, method_id)
        pos = [_rescale(report.stats_for(method_id, c).avg_pos, lo, hi) for c in categories]
        neg = [_rescale(report.stats_for(method_id, c).avg_neg, lo, hi) for c in categories]
        ax.bar(x - 0.2, pos, 0.4, label="positive")
        ax.bar(x + 0.2, neg, 0.4, label="negative")
        ax.set_xticks(x)
        ax.set_xticklabels(categories, rotation=30, ha="right", fontsize=7)
        ax.set_ylabel("avg distance", fontsize=8)
        ax.set_title(method_id, fontsize=9)
        ax.legend(fontsize=7)
    return _save(fig, Path(path))


def accuracy_drop_figure(drop_table: ReportTable, path: str | Path) -> Path:
    """Horizontal bars of accuracy drop per method."""
    methods = [row[0] for row in drop_table.rows]
    drops = [row[3] for row in drop_table.rows]
    fig, ax = plt.subplots(figsize=(7.0, 0.5 * max(len(methods), 2) + 1.5))
    y = np.arange(len(methods))
    ax.barh(y, drops)
    ax.set_yticks(y)
    ax.set_yticklabels(methods, fontsize=8)
    ax.set_xlabel("accuracy drop (control - metamorphic)")
    return _save(fig, Path(path))


def render_figures(
    report: EvalReport,
    out_dir: str | Path,
    drop_table: ReportTable | None = None,
    prefix: str = "",
) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = [
        accuracy_figure(report, out / f"{prefix}accuracy_by_category.png"),
        distance_figure(report, out / f"{prefix}avg_distances.png"),
    ]
    if drop_table is not None and drop_table.rows:
        written.append(accuracy_drop_figure(drop_table, out / f"{prefix}accuracy_drop.png"))
    return written
