"""Figure rendering for sign tables and suite reports (Agg backend, file output)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_cochain_heatmap(cochain, path, title=None):
    """Render a dense S_n x S_n sign table as a +-1 heatmap."""
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(cochain.table, cmap="RdBu", vmin=-1.5, vmax=1.5, interpolation="nearest")
    ax.set_xlabel("second argument (lexicographic rank)")
    ax.set_ylabel("first argument (lexicographic rank)")
    if title:
        ax.set_title(title)
    cbar = fig.colorbar(im, ax=ax, ticks=[-1, 1])
    cbar.set_label("sign")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_report_chart(report, path):
    """Horizontal bar chart of passed/failed counts per suite check (log scale)."""
    checks = sorted(report.checks, key=lambda c: c.name)
    names = [c.name for c in checks]
    passed = np.array([c.passed for c in checks])
    failed = np.array([c.failed for c in checks])
    y = np.arange(len(names))
    fig, ax = plt.subplots(figsize=(8, 0.4 * len(names) + 1.5))
    ax.barh(y, np.maximum(passed, 1), color="tab:green", label="passed")
    if failed.any():
        ax.barh(y, np.maximum(failed, 1), color="tab:red", label="failed", alpha=0.8)
    ax.set_yticks(y)
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xscale("log")
    ax.set_xlabel("checks (log scale)")
    ax.set_title(f"identity suite, n={report.n_range[0]}..{report.n_range[1]}, seed={report.seed}")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
