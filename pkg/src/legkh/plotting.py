"""PNG chart of a graded homology table."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .homology import GradedHomology, forget_k  # noqa: E402


def _cell_text(group) -> str:
    parts = []
    if group.rank:
        parts.append(str(group.rank))
    parts += [f"T{t}" for t in group.torsion]
    return "+".join(parts)


def homology_chart(panels: list[tuple[str, GradedHomology]], path: str | Path,
                   title: str = "") -> Path:
    """One panel per homology, four to a row: i across, j up, ranks in the cells.

    ``T2`` marks a Z/2 summand.  Each panel header gives the k offset
    (k = j - tb), which fixes the third grading.
    """
    path = Path(path)
    cols = min(len(panels), 4)
    rows = -(-len(panels) // cols)
    fig, axes = plt.subplots(rows, cols, figsize=(4.2 * cols, 4.2 * rows), squeeze=False)
    flat = list(axes.flat)
    for ax in flat[len(panels):]:
        ax.set_visible(False)
    for ax, (label, h) in zip(flat, panels):
        cells = forget_k(h)
        if cells:
            i_vals = [i for i, _ in cells]
            j_vals = [j for _, j in cells]
            i_lo, i_hi = min(i_vals), max(i_vals)
            j_lo, j_hi = min(j_vals), max(j_vals)
        else:
            i_lo = i_hi = j_lo = j_hi = 0
        ax.set_xlim(i_lo - 0.5, i_hi + 0.5)
        ax.set_ylim(j_lo - 1, j_hi + 1)
        ax.set_xticks(range(i_lo, i_hi + 1))
        ax.set_yticks(range(j_lo - (j_lo % 2), j_hi + 1, 2))
        ax.grid(True, color="0.85", linewidth=0.6)
        for (i, j), g in cells.items():
            ax.text(i, j, _cell_text(g), ha="center", va="center", fontsize=10)
        ax.set_xlabel("i")
        ax.set_ylabel("j")
        shift = "" if h.tb == 0 else f" - {h.tb}" if h.tb > 0 else f" + {-h.tb}"
        ax.set_title(f"{label} (k = j{shift})")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path
