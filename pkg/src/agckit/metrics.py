"""Objective contrast-quality metrics.

Three complementary views of an enhancement result:

- emeg: no-reference blockwise contrast in [0, 1] built from the ratio of
  the largest to smallest absolute first difference inside each block.
- gmsd: full-reference standard deviation of the gradient-magnitude
  similarity map; 0 means the gradient structure is identical.
- pcqi: full-reference patch decomposition into mean / signal strength /
  structure, scoring contrast change (P_c), structure preservation (P_s),
  and mean-intensity preservation (P_i); P = P_c * P_s * P_i per patch.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.signal import convolve2d

from .raster import as_gray

GMS_STABILITY = 170.0
PCQI_EPS = 1e-12
PCQI_INTENSITY_SCALE = 128.0

_PREWITT_X = np.array([[1, 0, -1], [1, 0, -1], [1, 0, -1]], dtype=np.float64) / 3.0
_PREWITT_Y = _PREWITT_X.T


@dataclass(frozen=True)
class MetricReport:
    """All metric values for one (enhanced, reference) pair."""

    emeg: float
    gmsd: float
    pcqi_pc: float
    pcqi_ps: float
    pcqi_pi: float
    pcqi_p: float
    elapsed_ms: float | None = None


def emeg(img, block: int = 8, stride: int = 4) -> float:
    """Blockwise max/min derivative-ratio contrast measure in [0, 1].

    The image is tiled with overlapping `block` x `block` windows stepped by
    `stride` (partial edge blocks are dropped). Each block scores
    (1/255) * max(dh_max/(dh_min+1), dv_max/(dv_min+1)) over the absolute
    horizontal and vertical first differences inside it; the result is the
    mean block score. Constant blocks score 0, a hard step edge scores 1.
    """
    img = as_gray(img)
    h, w = img.shape
    if block < 2 or stride < 1:
        raise ValueError("block must be >= 2 and stride >= 1")
    if h < block or w < block:
        raise ValueError(f"image smaller than one {block}x{block} block")

    wide = img.astype(np.int16)
    dh = np.abs(np.diff(wide, axis=1))  # (h, w-1)
    dv = np.abs(np.diff(wide, axis=0))  # (h-1, w)

    rows = h - block + 1
    cols = w - block + 1
    dh_win = sliding_window_view(dh, (block, block - 1))[:rows:stride, :cols:stride]
    dv_win = sliding_window_view(dv, (block - 1, block))[:rows:stride, :cols:stride]

    ratio_h = dh_win.max(axis=(2, 3)) / (dh_win.min(axis=(2, 3)) + 1.0)
    ratio_v = dv_win.max(axis=(2, 3)) / (dv_win.min(axis=(2, 3)) + 1.0)
    return float(np.mean(np.maximum(ratio_h, ratio_v)) / 255.0)


def _gradient_magnitude(img: np.ndarray) -> np.ndarray:
    gx = convolve2d(img, _PREWITT_X, mode="same", boundary="symm")
    gy = convolve2d(img, _PREWITT_Y, mode="same", boundary="symm")
    return np.hypot(gx, gy)


def gmsd(test, ref, c: float = GMS_STABILITY) -> float:
    """Gradient-magnitude similarity deviation between two equal-size images.

    Gradient magnitudes come from 3x3 Prewitt operators; the per-pixel
    similarity (2*m_t*m_r + c) / (m_t**2 + m_r**2 + c) is pooled by its
    population standard deviation. Identical gradient structure gives 0.
    Note the pooling sees only gradients: two constant images of different
    levels also score 0.
    """
    test = as_gray(test).astype(np.float64)
    ref = as_gray(ref).astype(np.float64)
    if test.shape != ref.shape:
        raise ValueError("images must have equal dimensions")
    m_t = _gradient_magnitude(test)
    m_r = _gradient_magnitude(ref)
    gms = (2.0 * m_t * m_r + c) / (m_t * m_t + m_r * m_r + c)
    return float(np.std(gms))


def pcqi(
    test, ref, patch: int = 11, stride: int = 4
) -> tuple[float, float, float, float]:
    """Patch-based contrast quality: returns (P_c, P_s, P_i, P) means.

    Each overlapping `patch` x `patch` window is decomposed into its mean,
    its signal strength s (norm of the mean-removed patch), and a unit
    structure vector. Per patch:

      P_c = (4/pi) * arctan(s_test / s_ref)   contrast change, in [0, 2]
      P_s = max(0, <u_test, u_ref>)           structure preservation, [0, 1]
      P_i = exp(-|mu_test - mu_ref| / 128)    intensity preservation, (0, 1]

    A flat patch compared against a flat patch counts as unchanged
    (P_c = P_s = 1). The reported values are per-patch means of each factor
    and of the per-patch product P_c * P_s * P_i.
    """
    test = as_gray(test)
    ref = as_gray(ref)
    if test.shape != ref.shape:
        raise ValueError("images must have equal dimensions")
    h, w = test.shape
    if h < patch or w < patch:
        raise ValueError(f"image smaller than one {patch}x{patch} patch")

    rows = h - patch + 1
    cols = w - patch + 1
    wins_t = sliding_window_view(test, (patch, patch))[:rows:stride, :cols:stride]
    wins_r = sliding_window_view(ref, (patch, patch))[:rows:stride, :cols:stride]

    sums = np.zeros(4, dtype=np.float64)
    count = 0
    # Row-chunked so the float64 window copies stay small on large images.
    chunk = max(1, int(2**22 // max(1, wins_t.shape[1] * patch * patch)))
    for start in range(0, wins_t.shape[0], chunk):
        t = wins_t[start : start + chunk].astype(np.float64)
        r = wins_r[start : start + chunk].astype(np.float64)
        mu_t = t.mean(axis=(2, 3))
        mu_r = r.mean(axis=(2, 3))
        d_t = t - mu_t[..., None, None]
        d_r = r - mu_r[..., None, None]
        s_t = np.sqrt((d_t * d_t).sum(axis=(2, 3)))
        s_r = np.sqrt((d_r * d_r).sum(axis=(2, 3)))

        p_c = np.clip((4.0 / np.pi) * np.arctan(s_t / (s_r + PCQI_EPS)), 0.0, 2.0)
        cross = (d_t * d_r).sum(axis=(2, 3))
        denom = s_t * s_r
        p_s = np.maximum(0.0, np.divide(cross, denom, out=np.zeros_like(cross),
                                        where=denom > 0))
        flat_pair = (s_t == 0) & (s_r == 0)
        p_c[flat_pair] = 1.0
        p_s[flat_pair] = 1.0
        p_i = np.exp(-np.abs(mu_t - mu_r) / PCQI_INTENSITY_SCALE)

        sums[0] += p_c.sum()
        sums[1] += p_s.sum()
        sums[2] += p_i.sum()
        sums[3] += (p_c * p_s * p_i).sum()
        count += p_c.size

    means = sums / count
    return float(means[0]), float(means[1]), float(means[2]), float(means[3])


def evaluate_pair(test, ref, elapsed_ms: float | None = None) -> MetricReport:
    """Full metric report for an enhanced image against its reference."""
    p_c, p_s, p_i, p = pcqi(test, ref)
    return MetricReport(
        emeg=emeg(test),
        gmsd=gmsd(test, ref),
        pcqi_pc=p_c,
        pcqi_ps=p_s,
        pcqi_pi=p_i,
        pcqi_p=p,
        elapsed_ms=elapsed_ms,
    )
