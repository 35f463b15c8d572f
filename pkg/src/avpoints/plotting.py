"""Figures for the CLI: cyclic/rich percentage bars and Newton/Hodge polygon plots."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .classify import admissible_partitions  # noqa: E402
from .polygons import hodge_polygon, newton_polygon  # noqa: E402
from .table1 import CATEGORIES  # noqa: E402

COLORS = {"only_rich": "#4c72b0", "only_cyclic": "#dd8452", "both": "#55a868", "neither": "#8c8c8c"}


def plot_table1(rows, path) -> Path:
    """Stacked horizontal bars, one per (q, g)."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 0.5 * len(rows) + 1.2))
    labels = [f"F_{r.q}, g={r.g}" for r in rows]
    left = [0.0] * len(rows)
    for cat in CATEGORIES:
        vals = [100 * float(r.fractions()[cat]) for r in rows]
        ax.barh(labels, vals, left=left, color=COLORS[cat], label=cat.replace("_", " "))
        left = [a + b for a, b in zip(left, vals)]
    ax.set_xlim(0, 100)
    ax.set_xlabel("% of squarefree isogeny classes")
    ax.invert_yaxis()
    ax.legend(ncol=4, fontsize=8, loc="lower center", bbox_to_anchor=(0.5, 1.0), frameon=False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_polygons(W, ell: int, path) -> Path:
    """The ell-Newton polygon of h(1-t) with the Hodge polygons of admissible groups."""
    path = Path(path)
    width = 2 * W.g
    newt = newton_polygon(W.h, ell)
    fig, ax = plt.subplots(figsize=(4.5, 3.5))
    for part in admissible_partitions(W, ell):
        hp = hodge_polygon(part, width)
        xs, ys = zip(*hp.vertices)
        ax.plot(xs, ys, color="#999999", lw=1, ls="--")
    xs, ys = zip(*newt.vertices)
    ax.plot(xs, ys, color="#c44e52", lw=2, marker="o", label=f"Newton, l={ell}")
    ax.set_xlabel("i")
    ax.set_ylabel("valuation")
    ax.set_title(f"{W.label()}  (N = {W.N})", fontsize=9)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
