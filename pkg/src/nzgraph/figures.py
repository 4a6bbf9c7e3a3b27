"""Matplotlib renderings of a verification run, written next to the text report."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .graph import ComponentGraph, degree_formula  # noqa: E402

STATUS_CODES = {"fail": 0, "skipped": 1, "pass": 2}
_STATUS_COLORS = ListedColormap(["#c0392b", "#d5d8dc", "#27ae60"])


def savefig(fig, path, **kwargs):
    # no timestamps so reruns give identical bytes
    fig.savefig(path, metadata={"Software": None}, **kwargs)
    plt.close(fig)
    return path


def claim_status_figure(report, path):
    """Instances down the side, claims across the top, cells coloured by status."""
    instances = []
    claims = []
    for row in report.rows:
        if (row.n, row.q) not in instances:
            instances.append((row.n, row.q))
        if row.claim not in claims:
            claims.append(row.claim)
    grid = [[STATUS_CODES["skipped"]] * len(claims) for _ in instances]
    for row in report.rows:
        grid[instances.index((row.n, row.q))][claims.index(row.claim)] = STATUS_CODES[row.status]

    fig, ax = plt.subplots(figsize=(0.45 * len(claims) + 2.5, 0.4 * len(instances) + 2.2))
    ax.imshow(grid, cmap=_STATUS_COLORS, vmin=0, vmax=2, aspect="auto")
    ax.set_xticks(range(len(claims)))
    ax.set_xticklabels(claims, rotation=70, ha="right", fontsize=8)
    ax.set_yticks(range(len(instances)))
    ax.set_yticklabels([f"n={n}, q={q}" for n, q in instances], fontsize=8)
    ax.set_title("claim status (green pass, grey skipped, red fail)", fontsize=9)
    fig.tight_layout()
    return savefig(fig, path, dpi=120)


def degree_figure(g: ComponentGraph, path):
    """Observed degrees per support size against the closed form."""
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    xs = [v.weight for v in g.vertices]
    ys = [row.bit_count() for row in g.adj]
    ax.scatter(xs, ys, s=18, color="#2e86c1", label="observed", zorder=3)
    s_values = range(1, g.n + 1)
    ax.plot(list(s_values), [degree_formula(g.n, g.q, s) for s in s_values],
            color="black", lw=1, ls="--", label="(q^s-1)q^(n-s)-1")
    ax.set_xlabel("nonzero coefficients s")
    ax.set_ylabel("degree")
    ax.set_xticks(list(s_values))
    ax.set_title(f"degrees, n={g.n}, q={g.q}", fontsize=9)
    ax.legend(fontsize=7, frameon=False)
    fig.tight_layout()
    return savefig(fig, path, dpi=120)


def write_verify_figures(report, graphs, directory) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    paths = [claim_status_figure(report, os.path.join(directory, "claims.png"))]
    for g in graphs:
        paths.append(degree_figure(g, os.path.join(directory, f"degree_n{g.n}_q{g.q}.png")))
    return paths
