"""8-bit raster primitives: histograms, CDFs, lookup tables, pixel transforms.

Images are plain numpy arrays: 2-D uint8 for grayscale, (H, W, 3) uint8 for
RGB. Real-valued intermediates (probabilities, CDFs, gamma curves) are
float64. Every function is pure and never mutates its inputs.
"""

import numpy as np

LMAX = 255
NLEVELS = 256


def round_half_up(x):
    """Round to nearest integer, halves away from zero (0.5 -> 1).

    Only defined for non-negative input, which is all this package produces.
    Plain ``np.round`` would round halves to even and shift LUT entries by one.
    """
    return np.floor(np.asarray(x, dtype=np.float64) + 0.5)


def as_gray(img) -> np.ndarray:
    """Validate a 2-D uint8 grayscale image and return it as an ndarray."""
    a = np.asarray(img)
    if a.ndim != 2 or a.dtype != np.uint8:
        raise ValueError("expected a 2-D uint8 grayscale image")
    if a.size == 0:
        raise ValueError("empty image")
    return a


def as_rgb(img) -> np.ndarray:
    """Validate an (H, W, 3) uint8 color image and return it as an ndarray."""
    a = np.asarray(img)
    if a.ndim != 3 or a.shape[2] != 3 or a.dtype != np.uint8:
        raise ValueError("expected an (H, W, 3) uint8 color image")
    if a.shape[0] == 0 or a.shape[1] == 0:
        raise ValueError("empty image")
    return a


def compute_histogram(img) -> np.ndarray:
    """Count pixels per gray level. Returns 256 int64 counts."""
    img = as_gray(img)
    return np.bincount(img.reshape(-1), minlength=NLEVELS).astype(np.int64)


def normalize(hist) -> np.ndarray:
    """Turn counts into a probability distribution over the 256 levels."""
    hist = np.asarray(hist, dtype=np.float64)
    total = hist.sum()
    if total <= 0:
        raise ValueError("empty image: histogram has zero total")
    return hist / total


def cdf(p) -> np.ndarray:
    """Cumulative distribution over gray levels: c[l] = sum(p[0..l])."""
    return np.cumsum(np.asarray(p, dtype=np.float64))


def apply_lut(img, lut) -> np.ndarray:
    """Map every pixel through a 256-entry uint8 lookup table."""
    img = as_gray(img)
    lut = np.asarray(lut, dtype=np.uint8)
    if lut.shape != (NLEVELS,):
        raise ValueError("LUT must have exactly 256 entries")
    return lut[img]


def identity_lut() -> np.ndarray:
    return np.arange(NLEVELS, dtype=np.uint8)


def negate(img) -> np.ndarray:
    """Pixel-wise complement 255 - v. Applying it twice restores the image."""
    return (LMAX - as_gray(img)).astype(np.uint8)


def mean_intensity(img) -> float:
    """Arithmetic mean gray level, accumulated exactly in integers."""
    img = as_gray(img)
    return int(img.sum(dtype=np.int64)) / img.size


def gamma_lut(gamma: float) -> np.ndarray:
    """LUT for the fixed power-law mapping l -> round(255 * (l/255)**gamma)."""
    if not gamma > 0:
        raise ValueError(f"gamma must be > 0, got {gamma}")
    levels = np.arange(NLEVELS, dtype=np.float64) / LMAX
    return round_half_up(LMAX * np.power(levels, gamma)).astype(np.uint8)


def gamma_distort(img, gamma: float) -> np.ndarray:
    """Apply a fixed-exponent gamma curve; gamma < 1 brightens, > 1 darkens."""
    return apply_lut(img, gamma_lut(gamma))
