"""Benchmark harness: synthesize distorted corpora, run methods, report.

The pipeline is simulate_corpus -> run_bench -> summarize -> emit_report.
Every stage is deterministic for a fixed corpus: rows are sorted before
aggregation, so the metric reports are byte-identical across reruns and
independent of worker count. Wall-clock timings are inherently jittery and
therefore live in their own table, never in the metric reports.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import enhance, metrics, pnm, raster
from .color import hsv_to_rgb, rgb_to_hsv

IMAGE_SUFFIXES = (".pgm", ".ppm", ".pnm", ".png")
DEFAULT_GAMMAS = (0.3, 2.0)
DEFAULT_METHODS = ("he", "agcwd", "imadj", "proposed")
METRIC_COLUMNS = ("emeg", "gmsd", "pcqi_pc", "pcqi_ps", "pcqi_pi", "pcqi_p")


def method_fn(name: str, cfg: enhance.EnhanceConfig):
    """Resolve a method id to a gray -> gray callable."""
    table = {
        "none": lambda g: g,
        "he": enhance.he,
        "agcwd": lambda g: enhance.agcwd(g, cfg.alpha_dimmed),
        "imadj": enhance.imadj,
        "proposed": lambda g: enhance.enhance_auto(g, cfg)[0],
    }
    try:
        return table[name]
    except KeyError:
        raise ValueError(f"unknown method {name!r}; choose from "
                         f"{sorted(table)}") from None


def distortion_label(gamma: float) -> str:
    if gamma < 1:
        return f"bright-g{gamma:g}"
    if gamma > 1:
        return f"dimmed-g{gamma:g}"
    return "none"


@dataclass(frozen=True)
class ManifestEntry:
    image_id: str
    original_path: Path
    distorted_path: Path
    gamma: float

    @property
    def distortion(self) -> str:
        return distortion_label(self.gamma)


@dataclass
class BenchRow:
    """One (image, method, distortion) measurement."""

    image_id: str
    method: str
    distortion: str
    gamma: float
    input_emeg: float | None = None
    metrics: metrics.MetricReport | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass
class GroupStats:
    """Arithmetic means over every ok row of one (distortion, method) group."""

    emeg: float
    gmsd: float
    pcqi_pc: float
    pcqi_ps: float
    pcqi_pi: float
    pcqi_p: float
    elapsed_ms: float
    n: int


@dataclass
class BenchSummary:
    distortions: list[str]
    methods: list[str]
    groups: dict[tuple[str, str], GroupStats]
    input_emeg: dict[str, float] = field(default_factory=dict)
    n_errors: int = 0


def list_images(directory) -> list[Path]:
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"not a directory: {directory}")
    return sorted(
        p for p in directory.iterdir()
        if p.is_file() and p.suffix.lower() in IMAGE_SUFFIXES
    )


def _distort_file(src: Path, dst: Path, gamma: float) -> None:
    img = pnm.read_image(src)
    if img.ndim == 2:
        out = raster.gamma_distort(img, gamma)
    else:
        hue, sat, value = rgb_to_hsv(img)
        out = hsv_to_rgb(hue, sat, raster.gamma_distort(value, gamma))
    pnm.write_image(out, dst)


def simulate_corpus(
    input_dir, output_dir, gammas=DEFAULT_GAMMAS
) -> tuple[list[ManifestEntry], int]:
    """Write gamma-distorted copies of every image; returns (manifest, skipped).

    Color images are distorted on their V channel. Output names are
    deterministic (<stem>__g<gamma><suffix>) and the manifest is written to
    output_dir/manifest.csv with columns original_path, distorted_path, gamma.
    """
    sources = list_images(input_dir)
    if not sources:
        raise FileNotFoundError(f"no images found in {input_dir}")
    output_dir = Path(output_dir)
    distorted_dir = output_dir / "distorted"
    distorted_dir.mkdir(parents=True, exist_ok=True)

    entries: list[ManifestEntry] = []
    skipped = 0
    for src in sources:
        for gamma in gammas:
            dst = distorted_dir / f"{src.stem}__g{gamma:g}{src.suffix.lower()}"
            try:
                _distort_file(src, dst, gamma)
            except (pnm.PnmError, ValueError, OSError) as exc:
                skipped += 1
                print(f"warning: skipping {src.name} (gamma={gamma:g}): {exc}")
                continue
            entries.append(ManifestEntry(src.stem, src, dst, gamma))

    with open(output_dir / "manifest.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["original_path", "distorted_path", "gamma"])
        for e in entries:
            writer.writerow([str(e.original_path), str(e.distorted_path),
                             f"{e.gamma:g}"])
    return entries, skipped


def _value_plane(img: np.ndarray) -> np.ndarray:
    if img.ndim == 2:
        return img
    return rgb_to_hsv(img)[2]


def _timed(fn, arg, reps: int) -> tuple[np.ndarray, float]:
    # Median of repeated runs; enhancement only, decode/encode excluded.
    out = fn(arg)
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn(arg)
        t1 = time.perf_counter()
        times.append((t1 - t0) * 1e3)
    return out, statistics.median(times)


def _bench_entry(
    entry: ManifestEntry,
    methods,
    cfg: enhance.EnhanceConfig,
    timing_reps: int,
    output_root: Path | None,
) -> list[BenchRow]:
    rows = []
    try:
        original = pnm.read_image(entry.original_path)
        distorted = pnm.read_image(entry.distorted_path)
        v_ref = _value_plane(original)
        v_in = _value_plane(distorted)
        input_emeg = metrics.emeg(v_in)
    except Exception as exc:
        return [
            BenchRow(entry.image_id, m, entry.distortion, entry.gamma,
                     error=f"{type(exc).__name__}: {exc}")
            for m in methods
        ]

    for name in methods:
        try:
            fn = method_fn(name, cfg)
            v_out, elapsed = _timed(fn, v_in, timing_reps)
            report = metrics.evaluate_pair(v_out, v_ref, elapsed_ms=elapsed)
            if output_root is not None:
                dst = output_root / name / entry.distortion
                dst.mkdir(parents=True, exist_ok=True)
                if distorted.ndim == 2:
                    out_img = v_out
                else:
                    hue, sat, _ = rgb_to_hsv(distorted)
                    out_img = hsv_to_rgb(hue, sat, v_out)
                pnm.write_image(out_img, dst / entry.distorted_path.name)
            rows.append(BenchRow(entry.image_id, name, entry.distortion,
                                 entry.gamma, input_emeg, report))
        except Exception as exc:
            rows.append(BenchRow(entry.image_id, name, entry.distortion,
                                 entry.gamma, input_emeg,
                                 error=f"{type(exc).__name__}: {exc}"))
    return rows


def run_bench(
    entries,
    methods=DEFAULT_METHODS,
    cfg: enhance.EnhanceConfig = enhance.EnhanceConfig(),
    jobs: int = 1,
    timing_reps: int = 5,
    output_root=None,
) -> list[BenchRow]:
    """Enhance every manifest entry with every method and measure it.

    Metrics compare against the pristine original (V channel for color).
    Per-image failures become error rows; the run always completes. Rows
    come back sorted by (distortion, method, image id) no matter how many
    worker threads ran.
    """
    methods = list(methods)
    for name in methods:
        method_fn(name, cfg)  # fail fast on typos
    output_root = Path(output_root) if output_root is not None else None

    if jobs <= 1:
        nested = [_bench_entry(e, methods, cfg, timing_reps, output_root)
                  for e in entries]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            nested = list(pool.map(
                lambda e: _bench_entry(e, methods, cfg, timing_reps, output_root),
                entries,
            ))
    rows = [row for group in nested for row in group]
    rows.sort(key=lambda r: (r.distortion, r.method, r.image_id))
    return rows


def summarize(rows) -> BenchSummary:
    """Arithmetic means per (distortion, method); order-independent."""
    rows = list(rows)
    if not rows:
        raise ValueError("no bench rows to summarize")
    ok_rows = [r for r in rows if r.ok]
    if not ok_rows:
        raise ValueError("every bench row failed")
    ok_rows.sort(key=lambda r: (r.distortion, r.method, r.image_id))

    distortions = sorted({r.distortion for r in ok_rows})
    methods = sorted({r.method for r in ok_rows})
    groups: dict[tuple[str, str], GroupStats] = {}
    for dist in distortions:
        for method in methods:
            sel = [r for r in ok_rows if r.distortion == dist and r.method == method]
            if not sel:
                continue
            mats = np.array(
                [[getattr(r.metrics, col) for col in METRIC_COLUMNS] for r in sel],
                dtype=np.float64,
            )
            elapsed = np.array([r.metrics.elapsed_ms or 0.0 for r in sel])
            means = mats.mean(axis=0)
            groups[(dist, method)] = GroupStats(
                *(float(v) for v in means),
                elapsed_ms=float(elapsed.mean()),
                n=len(sel),
            )

    input_emeg = {}
    for dist in distortions:
        seen = {}
        for r in ok_rows:
            if r.distortion == dist and r.input_emeg is not None:
                seen.setdefault(r.image_id, r.input_emeg)
        if seen:
            input_emeg[dist] = float(np.mean([seen[k] for k in sorted(seen)]))

    n_errors = sum(1 for r in rows if not r.ok)
    return BenchSummary(distortions, methods, groups, input_emeg, n_errors)


def _fmt(value: float, paper_scale: bool) -> str:
    if paper_scale:
        return str(int(raster.round_half_up(value * 1000.0)))
    return f"{value:.6f}"


def emit_report(summary: BenchSummary, fmt: str = "csv",
                paper_scale: bool = False) -> str:
    """Render the per-distortion metric tables as CSV or Markdown text.

    Both renderings carry identical numbers; paper_scale multiplies by 1000
    and rounds to integers for side-by-side reading with published tables.
    """
    if fmt not in ("csv", "markdown"):
        raise ValueError(f"unknown report format {fmt!r}")
    headers = ["E", "G", "P_c", "P_s", "P_i", "P"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["distortion", "method", "n"] + headers)
        for dist in summary.distortions:
            for method in summary.methods:
                stats = summary.groups.get((dist, method))
                if stats is None:
                    continue
                writer.writerow(
                    [dist, method, stats.n]
                    + [_fmt(getattr(stats, col), paper_scale)
                       for col in METRIC_COLUMNS]
                )
        return buf.getvalue()

    lines = []
    scale_note = " (x1000)" if paper_scale else ""
    for dist in summary.distortions:
        lines.append(f"## {dist}{scale_note}")
        lines.append("")
        lines.append("| method | n | " + " | ".join(headers) + " |")
        lines.append("|" + "---|" * (len(headers) + 2))
        for method in summary.methods:
            stats = summary.groups.get((dist, method))
            if stats is None:
                continue
            cells = [_fmt(getattr(stats, col), paper_scale)
                     for col in METRIC_COLUMNS]
            lines.append(f"| {method} | {stats.n} | " + " | ".join(cells) + " |")
        lines.append("")
    return "\n".join(lines)


def emit_timing(summary: BenchSummary) -> str:
    """Per-method mean enhancement time table (CSV). Jittery by nature."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["method", "distortion", "mean_elapsed_ms", "n"])
    for dist in summary.distortions:
        for method in summary.methods:
            stats = summary.groups.get((dist, method))
            if stats is None:
                continue
            writer.writerow([method, dist, f"{stats.elapsed_ms:.3f}", stats.n])
    return buf.getvalue()


def write_rows_csv(rows, path) -> None:
    """Dump every row (including failures and timings) for inspection."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["image_id", "method", "distortion", "gamma", "status",
             "input_emeg"] + list(METRIC_COLUMNS) + ["elapsed_ms", "error"]
        )
        for r in rows:
            base = [r.image_id, r.method, r.distortion, f"{r.gamma:g}",
                    "ok" if r.ok else "error",
                    "" if r.input_emeg is None else f"{r.input_emeg:.6f}"]
            if r.ok:
                vals = [f"{getattr(r.metrics, col):.6f}" for col in METRIC_COLUMNS]
                vals += [f"{r.metrics.elapsed_ms:.3f}", ""]
            else:
                vals = [""] * (len(METRIC_COLUMNS) + 1) + [r.error]
            writer.writerow(base + vals)
