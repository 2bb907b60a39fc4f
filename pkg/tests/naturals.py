"""Deterministic natural-image test corpus built from scikit-image samples.

The benchmark-style tests need a couple dozen real photographs. scikit-image
ships a bank of public sample photos, so each one is cut into five 128x128
tiles (four quadrants plus a centered tile) and a tile is kept only if

- its gamma-0.3 version classifies bright and its gamma-2.0 version
  classifies dimmed with a safety margin (so auto enhancement exercises the
  intended paths on every corpus member), and
- its 2..98 percentile spread is at least 120 gray levels (scene-like
  dynamic range; near-constant slabs are degenerate inputs for any
  histogram-driven method).

Everything is pure and ordered, so the corpus is identical on every run.
"""

import numpy as np

from agckit import raster
from agckit.color import rgb_to_hsv

BASE_IMAGES = (
    "camera", "moon", "coins", "text", "clock", "brick", "grass", "gravel",
    "astronaut", "chelsea", "coffee", "rocket", "immunohistochemistry",
    "cell", "page", "microaneurysms", "hubble_deep_field", "retina",
    "colorwheel", "logo",
)
TILE_ANCHORS = ((0, 0), (0, 2), (2, 0), (2, 2), (1, 1))
TILE_SIZE = 128
BRIGHT_MEAN_MARGIN = 150.0   # above the 145.6 bright threshold
DIMMED_MEAN_MARGIN = 74.0    # below the 78.4 dimmed threshold
MIN_PERCENTILE_SPREAD = 120


def _gray(name: str) -> np.ndarray:
    import skimage.data as skdata

    img = getattr(skdata, name)()
    if img.ndim == 3:
        img = rgb_to_hsv(np.ascontiguousarray(img[..., :3]))[2]
    return img.astype(np.uint8)


def _tiles(img: np.ndarray, size: int = TILE_SIZE) -> list[np.ndarray]:
    h, w = img.shape
    h2, w2 = h // 2, w // 2
    if h2 < size or w2 < size:
        return []
    step = min(h2 // size, w2 // size)
    out = []
    for ri, ci in TILE_ANCHORS:
        r0 = (h - h2) * ri // 2
        c0 = (w - w2) * ci // 2
        crop = img[r0:r0 + h2, c0:c0 + w2][:step * size:step, :step * size:step]
        if crop.shape == (size, size):
            out.append(np.ascontiguousarray(crop))
    return out


def natural_tiles() -> list[tuple[str, np.ndarray]]:
    """All qualifying (tile id, 128x128 uint8 image) pairs, stable order."""
    kept = []
    for name in BASE_IMAGES:
        for i, tile in enumerate(_tiles(_gray(name))):
            bright = raster.gamma_distort(tile, 0.3)
            dimmed = raster.gamma_distort(tile, 2.0)
            lo, hi = np.percentile(tile, [2, 98])
            if (
                bright.mean() > BRIGHT_MEAN_MARGIN
                and dimmed.mean() < DIMMED_MEAN_MARGIN
                and hi - lo >= MIN_PERCENTILE_SPREAD
            ):
                kept.append((f"{name}_{i}", tile))
    return kept
