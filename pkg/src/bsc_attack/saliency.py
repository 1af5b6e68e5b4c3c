"""Per-frame gradient-magnitude saliency and quantile thresholding.

Used for the salient-occlusion metric and for breaking ties between equally
successful candidates: among winners, prefer the one covering the least
conspicuous content. Sobel magnitude is the detector; an external mask file
can replace it wherever a mask array is accepted.
"""

from __future__ import annotations

import math

import numpy as np

from .tensor_io import VideoClip

DEFAULT_QUANTILE = 0.75


def saliency_map(frame: np.ndarray) -> np.ndarray:
    """Sobel gradient magnitude of a frame, normalized to [0, 1].

    Channels are averaged to gray first; borders use replicate padding; an
    all-constant frame maps to all zeros.
    """
    frame = np.asarray(frame)
    gray = frame.astype(np.float64)
    if gray.ndim == 3:
        gray = gray.mean(axis=2)
    p = np.pad(gray, 1, mode="edge")
    gx = (p[:-2, 2:] + 2 * p[1:-1, 2:] + p[2:, 2:]) - (
        p[:-2, :-2] + 2 * p[1:-1, :-2] + p[2:, :-2]
    )
    gy = (p[2:, :-2] + 2 * p[2:, 1:-1] + p[2:, 2:]) - (
        p[:-2, :-2] + 2 * p[:-2, 1:-1] + p[:-2, 2:]
    )
    mag = np.hypot(gx, gy)
    peak = mag.max()
    return mag / peak if peak > 0 else mag


def salient_mask(smap: np.ndarray, quantile: float = DEFAULT_QUANTILE) -> np.ndarray:
    """True where the map reaches the per-frame value quantile, ties included."""
    if not 0 <= quantile < 1:
        raise ValueError(f"quantile must be in [0, 1), got {quantile}")
    flat = np.sort(np.asarray(smap, dtype=np.float64).ravel())
    idx = min(flat.size - 1, math.floor(quantile * flat.size))
    return np.asarray(smap) >= flat[idx]


def clip_salient_masks(clip: VideoClip, quantile: float = DEFAULT_QUANTILE) -> np.ndarray:
    """Per-frame boolean salient masks for a whole clip, shape (T, H, W)."""
    return np.stack(
        [salient_mask(saliency_map(clip.data[t]), quantile) for t in range(clip.frames)]
    )


def masks_from_clip(clip: VideoClip) -> np.ndarray:
    """Interpret a single-channel 0/255 clip as externally supplied masks."""
    if clip.channels != 1:
        raise ValueError(f"mask clip must have 1 channel, got {clip.channels}")
    data = clip.data[..., 0]
    values = np.unique(data)
    if not set(values.tolist()) <= {0, 255}:
        raise ValueError(f"mask clip values must be 0 or 255, found {values[:5]}")
    return data == 255
