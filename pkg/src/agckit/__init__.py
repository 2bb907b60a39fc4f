"""agckit: contrast enhancement by adaptive gamma correction.

Library surface:

- raster primitives: histograms, CDFs, LUTs, negation, gamma distortion
- enhancement: brightness classification, truncated and negative-image
  adaptive gamma correction, HE / AGCWD / percentile-stretch baselines
- color: HSV round-trip and V-channel enhancement of RGB images
- metrics: EMEG, GMSD, PCQI
- bench: corpus simulation, method comparison, CSV/Markdown/figure reports
"""

from .bench import (
    BenchRow,
    BenchSummary,
    emit_report,
    emit_timing,
    run_bench,
    simulate_corpus,
    summarize,
)
from .color import enhance_color, hsv_to_rgb, rgb_to_hsv
from .enhance import (
    Brightness,
    Classification,
    EnhanceConfig,
    agcwd,
    build_lut,
    classify,
    enhance_auto,
    enhance_bright,
    enhance_dimmed,
    gamma_from_cdf,
    he,
    imadj,
    truncate_gamma,
    weight_histogram,
)
from .metrics import MetricReport, emeg, evaluate_pair, gmsd, pcqi
from .pnm import PnmError, UnsupportedFormatError, read_image, write_image
from .raster import (
    apply_lut,
    cdf,
    compute_histogram,
    gamma_distort,
    mean_intensity,
    negate,
    normalize,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRow",
    "BenchSummary",
    "Brightness",
    "Classification",
    "EnhanceConfig",
    "MetricReport",
    "PnmError",
    "UnsupportedFormatError",
    "agcwd",
    "apply_lut",
    "build_lut",
    "cdf",
    "classify",
    "compute_histogram",
    "emeg",
    "emit_report",
    "emit_timing",
    "enhance_auto",
    "enhance_bright",
    "enhance_color",
    "enhance_dimmed",
    "evaluate_pair",
    "gamma_distort",
    "gamma_from_cdf",
    "gmsd",
    "he",
    "hsv_to_rgb",
    "imadj",
    "mean_intensity",
    "negate",
    "normalize",
    "pcqi",
    "read_image",
    "rgb_to_hsv",
    "run_bench",
    "simulate_corpus",
    "summarize",
    "truncate_gamma",
    "weight_histogram",
]
