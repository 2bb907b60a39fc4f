"""Brightness classification and CDF-driven gamma contrast enhancement.

The central idea: build a per-level gamma curve gamma(l) = 1 - c(l) from the
(weighted) CDF of the image histogram, turn it into a 256-entry LUT via
T(l) = round(255 * (l/255)**gamma(l)), and map pixels through it. Dimmed
images get the curve floored at a threshold so bright regions are never
pushed into saturation; bright images are enhanced on their negative and
inverted back. Everything here is pure and deterministic.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .raster import (
    LMAX,
    NLEVELS,
    apply_lut,
    as_gray,
    cdf,
    compute_histogram,
    identity_lut,
    mean_intensity,
    negate,
    normalize,
    round_half_up,
)

# Defaults validated experimentally for 8-bit natural images.
DEFAULT_BRIGHTNESS_TARGET = 112.0
DEFAULT_CLASS_THRESHOLD = 0.3
DEFAULT_GAMMA_FLOOR = 0.5
DEFAULT_ALPHA_BRIGHT = 0.25
DEFAULT_ALPHA_DIMMED = 0.75

_EPS_DEGENERATE = 1e-12


class Brightness(Enum):
    BRIGHT = "bright"
    DIMMED = "dimmed"
    NORMAL = "normal"


@dataclass(frozen=True)
class Classification:
    """Outcome of brightness classification: the class and its statistic t."""

    label: Brightness
    t: float


@dataclass(frozen=True)
class EnhanceConfig:
    """Tunables for classification and enhancement.

    brightness_target: expected mean gray level of a normal image (0..255).
    class_threshold: relative deviation beyond which an image counts as
        bright or dimmed.
    gamma_floor: lower bound applied to the adaptive gamma curve on the
        dimmed path; 1.0 turns enhancement into the identity.
    alpha_bright / alpha_dimmed: histogram-weighting exponents for the two
        enhancement paths.
    """

    brightness_target: float = DEFAULT_BRIGHTNESS_TARGET
    class_threshold: float = DEFAULT_CLASS_THRESHOLD
    gamma_floor: float = DEFAULT_GAMMA_FLOOR
    alpha_bright: float = DEFAULT_ALPHA_BRIGHT
    alpha_dimmed: float = DEFAULT_ALPHA_DIMMED

    def __post_init__(self):
        if not 0 < self.brightness_target < LMAX:
            raise ValueError("brightness_target must lie in (0, 255)")
        if not self.class_threshold > 0:
            raise ValueError("class_threshold must be > 0")
        if not 0 < self.gamma_floor <= 1:
            raise ValueError("gamma_floor must lie in (0, 1]")
        if not (self.alpha_bright > 0 and self.alpha_dimmed > 0):
            raise ValueError("alpha values must be > 0")


def weight_histogram(p, alpha: float) -> np.ndarray:
    """Smooth a probability distribution by exponentiating its spread.

    Each bin is remapped to p_max * ((p - p_min) / (p_max - p_min))**alpha
    and the result renormalized to sum 1. alpha < 1 flattens the histogram,
    alpha > 1 sharpens it. A (near-)uniform distribution is returned
    unchanged since the remap is undefined there.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    p = np.asarray(p, dtype=np.float64)
    p_max = p.max()
    p_min = p.min()
    if p_max - p_min < _EPS_DEGENERATE:
        return p.copy()
    weighted = p_max * np.power((p - p_min) / (p_max - p_min), alpha)
    return weighted / weighted.sum()


def gamma_from_cdf(c) -> np.ndarray:
    """Per-level adaptive gamma curve: gamma(l) = 1 - c(l), nonincreasing."""
    return 1.0 - np.asarray(c, dtype=np.float64)


def truncate_gamma(curve, floor: float) -> np.ndarray:
    """Clamp a gamma curve from below so no level maps with a tiny exponent."""
    if not 0 < floor <= 1:
        raise ValueError(f"gamma floor must lie in (0, 1], got {floor}")
    return np.maximum(floor, np.asarray(curve, dtype=np.float64))


def build_lut(curve) -> np.ndarray:
    """Realize a per-level gamma curve as a LUT: T(l) = round(255*(l/255)**g(l)).

    Entry 0 is pinned to 0 (0**0 is otherwise ambiguous and anything else
    would invert black). For nonincreasing curves in [0, 1] the LUT is
    nondecreasing.
    """
    curve = np.asarray(curve, dtype=np.float64)
    if curve.shape != (NLEVELS,):
        raise ValueError("gamma curve must have exactly 256 entries")
    levels = np.arange(NLEVELS, dtype=np.float64) / LMAX
    values = round_half_up(LMAX * np.power(levels, curve))
    values[0] = 0
    return values.astype(np.uint8)


def classify(img, cfg: EnhanceConfig = EnhanceConfig()) -> Classification:
    """Label an image bright, dimmed, or normal from its mean gray level.

    t = (mean - target) / target; dimmed iff t < -threshold, bright iff
    t > threshold, normal otherwise (boundary values are normal).
    """
    t = (mean_intensity(img) - cfg.brightness_target) / cfg.brightness_target
    if t < -cfg.class_threshold:
        label = Brightness.DIMMED
    elif t > cfg.class_threshold:
        label = Brightness.BRIGHT
    else:
        label = Brightness.NORMAL
    return Classification(label, t)


def weighted_gamma_curve(img, alpha: float) -> np.ndarray:
    """Adaptive gamma curve of an image from its alpha-weighted histogram."""
    p = normalize(compute_histogram(img))
    return gamma_from_cdf(cdf(weight_histogram(p, alpha)))


def agcwd_lut(img, alpha: float = DEFAULT_ALPHA_DIMMED) -> np.ndarray:
    return build_lut(weighted_gamma_curve(img, alpha))


def agcwd(img, alpha: float = DEFAULT_ALPHA_DIMMED) -> np.ndarray:
    """Weighted-CDF adaptive gamma correction, no truncation (the baseline)."""
    return apply_lut(img, agcwd_lut(img, alpha))


def dimmed_lut(
    img, alpha: float = DEFAULT_ALPHA_DIMMED, floor: float = DEFAULT_GAMMA_FLOOR
) -> np.ndarray:
    return build_lut(truncate_gamma(weighted_gamma_curve(img, alpha), floor))


def enhance_dimmed(
    img, alpha: float = DEFAULT_ALPHA_DIMMED, floor: float = DEFAULT_GAMMA_FLOOR
) -> np.ndarray:
    """Brighten a dimmed image with the floor-truncated adaptive gamma curve.

    The floor keeps every exponent in [floor, 1], so output pixels satisfy
    l <= T(l) <= round(255 * (l/255)**floor): brightening without blowing
    bright regions out to 255.
    """
    return apply_lut(img, dimmed_lut(img, alpha, floor))


def enhance_bright(img, alpha: float = DEFAULT_ALPHA_BRIGHT) -> np.ndarray:
    """Darken and re-contrast a bright image via its negative.

    The negative of a bright image is distributed like a dimmed one, so the
    weighted adaptive gamma correction applies; inverting back yields an
    output that is pixel-wise <= the input.
    """
    return negate(agcwd(negate(img), alpha))


def enhance_auto(
    img, cfg: EnhanceConfig = EnhanceConfig()
) -> tuple[np.ndarray, Classification]:
    """Classify an image and run the matching enhancement path.

    Bright images go through the negative-image path, dimmed ones through
    the truncated-gamma path. Normal images are returned unchanged: gamma
    reshaping does not help them.
    """
    img = as_gray(img)
    cls = classify(img, cfg)
    if cls.label is Brightness.BRIGHT:
        return enhance_bright(img, cfg.alpha_bright), cls
    if cls.label is Brightness.DIMMED:
        return enhance_dimmed(img, cfg.alpha_dimmed, cfg.gamma_floor), cls
    return img.copy(), cls


def he_lut(img) -> np.ndarray:
    """Histogram equalization LUT: T(l) = round(255 * c(l)), unweighted CDF."""
    c = cdf(normalize(compute_histogram(img)))
    return round_half_up(LMAX * c).astype(np.uint8)


def he(img) -> np.ndarray:
    """Classic histogram equalization."""
    return apply_lut(img, he_lut(img))


def imadj_lut(img, low_frac: float = 0.01, high_frac: float = 0.01) -> np.ndarray:
    """Saturating linear-stretch LUT between two histogram percentiles.

    lo is the first level whose CDF exceeds low_frac, hi the first whose CDF
    reaches 1 - high_frac; levels in between stretch linearly to the full
    range and the tails saturate. Degenerate lo == hi yields the identity.
    """
    if low_frac < 0 or high_frac < 0 or low_frac + high_frac >= 1:
        raise ValueError("percentile fractions must be >= 0 and sum below 1")
    c = cdf(normalize(compute_histogram(img)))
    lo = int(np.searchsorted(c, low_frac, side="right"))
    hi = int(np.searchsorted(c, 1.0 - high_frac, side="left"))
    if hi == lo:
        return identity_lut()
    levels = np.arange(NLEVELS, dtype=np.float64)
    scaled = np.clip((levels - lo) / (hi - lo), 0.0, 1.0)
    return round_half_up(LMAX * scaled).astype(np.uint8)


def imadj(img, low_frac: float = 0.01, high_frac: float = 0.01) -> np.ndarray:
    """Percentile linear contrast stretch with 1% two-tail saturation."""
    return apply_lut(img, imadj_lut(img, low_frac, high_frac))
