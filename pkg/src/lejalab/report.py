"""Figure rendering for the CLI report path.

Renders the delimited study outputs (growth sweeps, convergence tables,
node listings) as PNG files next to the data. Uses the Agg backend so the
CLI works headless.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from lejalab.lebesgue import ConvergenceRow, LebesgueReport


def growth_figure(reports: Sequence[LebesgueReport], path: str) -> None:
    """Log-log Lebesgue constant against N with an N^(3/2) reference slope."""
    ns = np.array([r.N for r in reports], dtype=float)
    lams = np.array([r.lam for r in reports])
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.loglog(ns, lams, "o-", label="grid estimate")
    ax.loglog(ns, lams[0] * (ns / ns[0]) ** 1.5, "--", color="gray",
              label="slope 3/2 reference")
    ax.set_xlabel("N")
    ax.set_ylabel("Lebesgue constant")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def convergence_figure(rows: Sequence[ConvergenceRow], path: str, label: str = "") -> None:
    """Semi-log interpolation error decay against N."""
    ns = np.array([r.N for r in rows], dtype=float)
    errs = np.array([max(r.sup_error, 1e-18) for r in rows])
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.semilogy(ns, errs, "o-", label=label or None)
    ax.set_xlabel("N")
    ax.set_ylabel("sup error on the torus product")
    if label:
        ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def nodes_figure(axis_points: Sequence[np.ndarray], path: str) -> None:
    """Per-axis node scatter, colored by arrival order."""
    n_axes = len(axis_points)
    fig, axes = plt.subplots(1, n_axes, figsize=(4.5 * n_axes, 4.0), squeeze=False)
    for j, pts in enumerate(axis_points):
        pts = np.asarray(pts)
        ax = axes[0][j]
        order = np.arange(pts.size)
        sc = ax.scatter(pts.real, pts.imag, c=order, cmap="viridis", s=30)
        ax.set_aspect("equal")
        ax.set_title(f"axis {j + 1} nodes")
        ax.grid(True, alpha=0.3)
        fig.colorbar(sc, ax=ax, label="order")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
