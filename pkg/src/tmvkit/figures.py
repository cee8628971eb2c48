"""Bar-chart rendering for report output. File-only, no interactive backend."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def grouped_bar_figure(
    x_labels: Sequence[str],
    series: Mapping[str, Sequence[float]],
    path: str | Path,
    log_scale: bool = False,
    ylabel: str = "relative frequency",
    title: str | None = None,
) -> Path:
    """One bar group per x label, one bar per series."""
    path = Path(path)
    n_series = max(len(series), 1)
    width = 0.8 / n_series
    fig, ax = plt.subplots(figsize=(max(6.0, 0.6 * len(x_labels) + 2), 4.5))
    for offset, (name, values) in enumerate(series.items()):
        positions = [i + offset * width for i in range(len(x_labels))]
        ax.bar(positions, list(values), width=width, label=name)
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(x_labels))])
    ax.set_xticklabels(x_labels, rotation=40, ha="right")
    if log_scale:
        ax.set_yscale("log")
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def stacked_bar_figure(
    x_labels: Sequence[str],
    segments: Mapping[str, Sequence[float]],
    path: str | Path,
    ylabel: str = "share",
    title: str | None = None,
) -> Path:
    """One bar per x label, stacked segments summing to the bar height."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(max(6.0, 0.5 * len(x_labels) + 2), 4.5))
    bottoms = [0.0] * len(x_labels)
    positions = list(range(len(x_labels)))
    for name, values in segments.items():
        heights = list(values)
        ax.bar(positions, heights, bottom=bottoms, label=name)
        bottoms = [b + h for b, h in zip(bottoms, heights)]
    ax.set_xticks(positions)
    ax.set_xticklabels(x_labels, rotation=60, ha="right")
    ax.set_ylabel(ylabel)
    ax.set_ylim(0, 1)
    if title:
        ax.set_title(title)
    ax.legend(fontsize="x-small", ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
