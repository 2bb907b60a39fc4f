"""Command-line interface: enhance, distort, evaluate, and bench subcommands.

Exit codes: 0 success, 2 bad arguments or invalid input pair, 3 I/O
failure, 4 unsupported or malformed image format.
"""

import argparse
import json
import sys
from pathlib import Path

from . import bench, enhance, figures, metrics, pnm, raster
from .color import enhance_color

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_FORMAT = 4

MODES = ("auto", "bright", "dimmed", "agcwd", "he", "imadj")


def _positive(value: str) -> float:
    x = float(value)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return x


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("enhancement parameters")
    group.add_argument("--tt", type=float, default=enhance.DEFAULT_BRIGHTNESS_TARGET,
                       help="expected mean brightness of a normal image "
                            "(default %(default)s)")
    group.add_argument("--tau-t", type=float,
                       default=enhance.DEFAULT_CLASS_THRESHOLD,
                       help="relative deviation separating bright/dimmed from "
                            "normal (default %(default)s)")
    group.add_argument("--tau", type=float, default=enhance.DEFAULT_GAMMA_FLOOR,
                       help="gamma floor on the dimmed path, in (0,1] "
                            "(default %(default)s)")
    group.add_argument("--alpha-bright", type=_positive,
                       default=enhance.DEFAULT_ALPHA_BRIGHT,
                       help="histogram weighting exponent, bright path "
                            "(default %(default)s)")
    group.add_argument("--alpha-dimmed", type=_positive,
                       default=enhance.DEFAULT_ALPHA_DIMMED,
                       help="histogram weighting exponent, dimmed path "
                            "(default %(default)s)")


def _config_from(args) -> enhance.EnhanceConfig:
    return enhance.EnhanceConfig(
        brightness_target=args.tt,
        class_threshold=args.tau_t,
        gamma_floor=args.tau,
        alpha_bright=args.alpha_bright,
        alpha_dimmed=args.alpha_dimmed,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agckit",
        description="Contrast enhancement by adaptive gamma correction, plus "
                    "distortion simulation, quality metrics, and a benchmark "
                    "harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enh = sub.add_parser("enhance", help="enhance one image")
    p_enh.add_argument("input", type=Path)
    p_enh.add_argument("-o", "--output", type=Path, required=True)
    p_enh.add_argument("--mode", choices=MODES, default="auto",
                       help="enhancement method (default %(default)s)")
    p_enh.add_argument("--ascii", action="store_true",
                       help="write ASCII PNM instead of binary")
    _add_config_flags(p_enh)

    p_dis = sub.add_parser("distort", help="apply a fixed gamma curve")
    p_dis.add_argument("input", type=Path)
    p_dis.add_argument("-o", "--output", type=Path, required=True)
    p_dis.add_argument("--gamma", type=_positive, required=True,
                       help="distortion exponent; <1 brightens, >1 darkens")
    p_dis.add_argument("--ascii", action="store_true")

    p_eval = sub.add_parser("evaluate", help="score an image against a reference")
    p_eval.add_argument("test", type=Path)
    p_eval.add_argument("reference", type=Path)
    p_eval.add_argument("--format", choices=("csv", "json"), default="csv")

    p_bench = sub.add_parser("bench", help="distort a corpus, enhance, report")
    p_bench.add_argument("input_dir", type=Path)
    p_bench.add_argument("-o", "--output-dir", type=Path, required=True)
    p_bench.add_argument("--gammas", default="0.3,2.0",
                         help="comma-separated distortion exponents "
                              "(default %(default)s)")
    p_bench.add_argument("--methods", default=",".join(bench.DEFAULT_METHODS),
                         help="comma-separated subset of none,he,agcwd,imadj,"
                              "proposed (default %(default)s)")
    p_bench.add_argument("--format", choices=("csv", "markdown"), default="csv",
                         help="report table format (default %(default)s)")
    p_bench.add_argument("--paper-scale", action="store_true",
                         help="report metric means x1000 rounded to integers")
    p_bench.add_argument("--jobs", type=int, default=1,
                         help="worker threads (default %(default)s)")
    p_bench.add_argument("--timing-reps", type=int, default=5,
                         help="timing repetitions per image, median taken "
                              "(default %(default)s)")
    p_bench.add_argument("--no-figures", action="store_true",
                         help="skip rendering metric figures")
    _add_config_flags(p_bench)
    return parser


def _enhance_gray(gray, mode: str, cfg: enhance.EnhanceConfig):
    if mode == "auto":
        return enhance.enhance_auto(gray, cfg)
    if mode == "bright":
        return enhance.enhance_bright(gray, cfg.alpha_bright), None
    if mode == "dimmed":
        return enhance.enhance_dimmed(gray, cfg.alpha_dimmed, cfg.gamma_floor), None
    if mode == "agcwd":
        return enhance.agcwd(gray, cfg.alpha_dimmed), None
    if mode == "he":
        return enhance.he(gray), None
    return enhance.imadj(gray), None


def cmd_enhance(args) -> int:
    cfg = _config_from(args)
    img = pnm.read_image(args.input)
    classification = None
    if img.ndim == 2:
        out, classification = _enhance_gray(img, args.mode, cfg)
    else:
        holder = {}

        def method(v):
            result, holder["cls"] = _enhance_gray(v, args.mode, cfg)
            return result

        out = enhance_color(img, method)
        classification = holder.get("cls")
    pnm.write_image(out, args.output, ascii_=args.ascii)
    if args.mode == "auto" and classification is not None:
        print(f"{classification.label.value} t={classification.t:.4f}")
    return EXIT_OK


def cmd_distort(args) -> int:
    img = pnm.read_image(args.input)
    if img.ndim == 2:
        out = raster.gamma_distort(img, args.gamma)
    else:
        out = enhance_color(img, lambda v: raster.gamma_distort(v, args.gamma))
    pnm.write_image(out, args.output, ascii_=args.ascii)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    test = pnm.read_image(args.test)
    ref = pnm.read_image(args.reference)
    if test.ndim == 3:
        test = bench._value_plane(test)
    if ref.ndim == 3:
        ref = bench._value_plane(ref)
    report = metrics.evaluate_pair(test, ref)
    fields = [
        ("emeg", report.emeg), ("gmsd", report.gmsd), ("pc", report.pcqi_pc),
        ("ps", report.pcqi_ps), ("pi", report.pcqi_pi), ("p", report.pcqi_p),
    ]
    values = [(k, f"{v:.6f}") for k, v in fields]
    if args.format == "json":
        print(json.dumps({k: float(s) for k, s in values}))
    else:
        print(",".join(s for _, s in values))
    return EXIT_OK


def cmd_bench(args) -> int:
    gammas = tuple(float(g) for g in args.gammas.split(",") if g.strip())
    if not gammas or any(g <= 0 for g in gammas):
        print("error: --gammas must be positive numbers", file=sys.stderr)
        return EXIT_USAGE
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    cfg = _config_from(args)
    for m in methods:
        bench.method_fn(m, cfg)  # validate before any work

    outdir = args.output_dir
    outdir.mkdir(parents=True, exist_ok=True)
    try:
        entries, skipped = bench.simulate_corpus(args.input_dir, outdir, gammas)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not entries:
        print("error: no usable images in corpus", file=sys.stderr)
        return EXIT_USAGE

    rows = bench.run_bench(entries, methods, cfg, jobs=args.jobs,
                           timing_reps=args.timing_reps, output_root=outdir)
    bench.write_rows_csv(rows, outdir / "rows.csv")
    summary = bench.summarize(rows)

    suffix = "csv" if args.format == "csv" else "md"
    report_path = outdir / f"report.{suffix}"
    report_path.write_text(
        bench.emit_report(summary, args.format, paper_scale=args.paper_scale)
    )
    (outdir / "timing.csv").write_text(bench.emit_timing(summary))
    if not args.no_figures:
        figures.render_summary_figures(summary, outdir / "figures")

    processed = sum(s.n for s in summary.groups.values())
    print(f"bench: {processed} measurements, {summary.n_errors} errors, "
          f"{skipped} skipped files; report at {report_path}")
    return EXIT_OK


_DISPATCH = {
    "enhance": cmd_enhance,
    "distort": cmd_distort,
    "evaluate": cmd_evaluate,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except pnm.UnsupportedFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except pnm.PnmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
