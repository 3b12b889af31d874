"""Figure rendering for benchmark reports (headless, writes image files)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import BenchReport


def save_bench_figure(report: BenchReport, path) -> None:
    """Mean runtime per algorithm across sizes, one panel per edge probability."""
    ps = sorted({row.p for row in report.rows})
    algs: list[str] = []
    for row in report.rows:
        if row.algorithm not in algs:
            algs.append(row.algorithm)
    fig, axes = plt.subplots(
        1, max(len(ps), 1), figsize=(4.2 * max(len(ps), 1), 3.4), squeeze=False, sharey=True
    )
    for ax, p in zip(axes[0], ps):
        for alg in algs:
            pts = sorted(
                (r.n, r.mean_s, r.std_s)
                for r in report.rows
                if r.p == p and r.algorithm == alg
            )
            if not pts:
                continue
            ax.errorbar(
                [t[0] for t in pts],
                [t[1] for t in pts],
                yerr=[t[2] for t in pts],
                marker="o",
                capsize=3,
                label=alg,
            )
        ax.set_yscale("log")
        ax.set_xlabel("vertices")
        ax.set_title(f"{report.suite}, p={p:g}")
        ax.grid(True, which="both", alpha=0.3)
    axes[0][0].set_ylabel("mean seconds")
    axes[0][-1].legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
