"""Hexcone HSV conversion and V-channel application of grayscale enhancers.

Color images are enhanced by converting to HSV, mapping only the 8-bit V
plane (V = max(R, G, B)) through a grayscale method, and converting back.
Hue and saturation are untouched, so chromaticity survives enhancement.
"""

import numpy as np

from .raster import as_gray, as_rgb, round_half_up


def rgb_to_hsv(rgb) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split an (H, W, 3) uint8 image into hue, saturation, value planes.

    Hue is float degrees in [0, 360), saturation float in [0, 1], value the
    uint8 max of the three channels. Achromatic pixels get H = 0, S = 0.
    """
    rgb = as_rgb(rgb)
    chans = rgb.astype(np.float64)
    r, g, b = chans[..., 0], chans[..., 1], chans[..., 2]
    mx = chans.max(axis=2)
    mn = chans.min(axis=2)
    c = mx - mn

    with np.errstate(invalid="ignore", divide="ignore"):
        hue = np.select(
            [c == 0, mx == r, mx == g],
            [0.0, np.mod((g - b) / c, 6.0), (b - r) / c + 2.0],
            default=(r - g) / c + 4.0,
        )
        sat = np.where(mx > 0, c / np.where(mx > 0, mx, 1.0), 0.0)
    hue = np.mod(hue * 60.0, 360.0)
    return hue, sat, mx.astype(np.uint8)


def hsv_to_rgb(hue, sat, value) -> np.ndarray:
    """Inverse hexcone conversion with round-to-nearest 8-bit quantization."""
    hue = np.asarray(hue, dtype=np.float64)
    sat = np.asarray(sat, dtype=np.float64)
    v = np.asarray(value, dtype=np.float64)
    if not (hue.shape == sat.shape == v.shape):
        raise ValueError("H, S, V planes must share one shape")

    c = v * sat
    hp = np.mod(hue, 360.0) / 60.0
    x = c * (1.0 - np.abs(np.mod(hp, 2.0) - 1.0))
    m = v - c

    sector = np.floor(hp).astype(np.int64) % 6
    zeros = np.zeros_like(c)
    # (R', G', B') per 60-degree sector before adding the common offset m.
    r_p = np.choose(sector, [c, x, zeros, zeros, x, c])
    g_p = np.choose(sector, [x, c, c, x, zeros, zeros])
    b_p = np.choose(sector, [zeros, zeros, x, c, c, x])

    rgb = np.stack([r_p + m, g_p + m, b_p + m], axis=-1)
    return np.clip(round_half_up(rgb), 0, 255).astype(np.uint8)


def enhance_color(rgb, method) -> np.ndarray:
    """Apply a grayscale enhancement to the V channel of a color image.

    `method` maps a 2-D uint8 array to another of the same shape. The hue
    and saturation planes are carried through bit-identically.
    """
    hue, sat, value = rgb_to_hsv(rgb)
    enhanced = as_gray(method(value))
    if enhanced.shape != value.shape:
        raise ValueError("enhancement method changed the image shape")
    return hsv_to_rgb(hue, sat, enhanced)
