"""Render benchmark summaries as bar-chart figures next to the CSV output."""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import METRIC_COLUMNS, BenchSummary

_PANEL_TITLES = {
    "emeg": "EMEG (higher = more contrast)",
    "gmsd": "GMSD (lower = closer gradients)",
    "pcqi_pc": "P_c (contrast change)",
    "pcqi_ps": "P_s (structure)",
    "pcqi_pi": "P_i (intensity)",
    "pcqi_p": "P (overall)",
}
# Fixed savefig metadata so reruns produce byte-identical PNGs.
_PNG_METADATA = {"Software": "agckit"}


def render_summary_figures(summary: BenchSummary, outdir, dpi: int = 110) -> list[Path]:
    """Write one metrics figure per distortion class; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    for dist in summary.distortions:
        methods = [m for m in summary.methods if (dist, m) in summary.groups]
        if not methods:
            continue
        fig, axes = plt.subplots(2, 3, figsize=(11, 6.5))
        fig.suptitle(f"Mean metrics, corpus: {dist}")
        for ax, col in zip(axes.flat, METRIC_COLUMNS):
            values = [getattr(summary.groups[(dist, m)], col) for m in methods]
            ax.bar(methods, values, color="#4878a8")
            ax.set_title(_PANEL_TITLES[col], fontsize=9)
            ax.tick_params(axis="x", labelrotation=30, labelsize=8)
            ax.grid(axis="y", alpha=0.3)
        fig.tight_layout(rect=(0, 0, 1, 0.95))
        path = outdir / f"metrics_{dist}.png"
        fig.savefig(path, dpi=dpi, metadata=_PNG_METADATA)
        plt.close(fig)
        paths.append(path)
    return paths
