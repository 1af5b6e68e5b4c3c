import math

import numpy as np
import pytest

from bsc_attack.saliency import (
    clip_salient_masks,
    masks_from_clip,
    saliency_map,
    salient_mask,
)
from bsc_attack.tensor_io import VideoClip


def sobel_by_hand(gray):
    """Direct 3x3 correlation with replicate padding, no vectorization."""
    h, w = gray.shape
    out = np.zeros((h, w))
    kx = [[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]]
    ky = [[-1, -2, -1], [0, 0, 0], [1, 2, 1]]
    for i in range(h):
        for j in range(w):
            gx = gy = 0.0
            for di in (-1, 0, 1):
                for dj in (-1, 0, 1):
                    px = gray[min(max(i + di, 0), h - 1), min(max(j + dj, 0), w - 1)]
                    gx += kx[di + 1][dj + 1] * px
                    gy += ky[di + 1][dj + 1] * px
            out[i, j] = math.hypot(gx, gy)
    peak = out.max()
    return out / peak if peak > 0 else out


class TestSaliencyMap:
    def test_constant_frame_is_zero(self):
        frame = np.full((8, 8, 3), 77, dtype=np.uint8)
        assert (saliency_map(frame) == 0).all()

    def test_range(self):
        rng = np.random.default_rng(0)
        frame = rng.integers(0, 256, (12, 12, 3), dtype=np.uint8)
        smap = saliency_map(frame)
        assert smap.min() >= 0.0 and smap.max() == pytest.approx(1.0)

    def test_vertical_step_edge_maxima(self):
        frame = np.zeros((10, 12), dtype=np.uint8)
        frame[:, 6:] = 255
        smap = saliency_map(frame)
        hot = set(np.unique(np.nonzero(smap)[1]).tolist())
        assert hot == {5, 6}
        assert (smap[:, [5, 6]] == 1.0).all()

    def test_matches_scalar_reference(self):
        rng = np.random.default_rng(5)
        gray = rng.integers(0, 256, (9, 11)).astype(np.float64)
        assert np.allclose(saliency_map(gray), sobel_by_hand(gray))

    def test_channel_mean_first(self):
        rng = np.random.default_rng(2)
        frame = rng.integers(0, 256, (7, 7, 3), dtype=np.uint8)
        gray = frame.astype(np.float64).mean(axis=2)
        assert np.allclose(saliency_map(frame), saliency_map(gray))

    def test_translation_equivariant_in_interior(self):
        rng = np.random.default_rng(9)
        frame = rng.integers(0, 256, (20, 24)).astype(np.float64)
        shifted = np.roll(frame, 3, axis=1)
        a = saliency_map(frame)
        b = saliency_map(shifted)
        # compare away from borders and the wrap seam
        assert np.allclose(a[2:-2, 2:-6], b[2:-2, 5:-3])


class TestSalientMask:
    def test_zero_quantile_all_true(self):
        rng = np.random.default_rng(1)
        smap = rng.random((6, 6))
        assert salient_mask(smap, 0.0).all()

    def test_strictly_increasing_values_count(self):
        smap = np.arange(64, dtype=np.float64).reshape(8, 8) / 64
        mask = salient_mask(smap, 0.75)
        assert mask.sum() == math.ceil(0.25 * 64)

    def test_constant_map_all_true(self):
        smap = np.full((5, 5), 0.4)
        assert salient_mask(smap, 0.75).all()

    def test_ties_included(self):
        smap = np.zeros((4, 4))
        smap[0, :] = 1.0
        mask = salient_mask(smap, 0.75)
        assert mask.sum() == 4 and mask[0].all()

    def test_monotone_in_quantile(self):
        rng = np.random.default_rng(8)
        smap = rng.random((10, 10))
        prev = None
        for q in (0.0, 0.25, 0.5, 0.75, 0.9):
            mask = salient_mask(smap, q)
            if prev is not None:
                assert not (mask & ~prev).any()  # raising q never adds pixels
            prev = mask

    def test_quantile_validation(self):
        with pytest.raises(ValueError):
            salient_mask(np.zeros((2, 2)), 1.0)


class TestClipHelpers:
    def test_clip_masks_shape(self):
        rng = np.random.default_rng(4)
        clip = VideoClip(rng.integers(0, 256, (3, 8, 9, 3), dtype=np.uint8))
        masks = clip_salient_masks(clip)
        assert masks.shape == (3, 8, 9) and masks.dtype == bool

    def test_external_masks(self):
        data = np.zeros((2, 4, 4, 1), dtype=np.uint8)
        data[0, 1, 2, 0] = 255
        masks = masks_from_clip(VideoClip(data))
        assert masks.sum() == 1 and masks[0, 1, 2]

    def test_external_masks_reject_gray(self):
        data = np.full((1, 2, 2, 1), 128, dtype=np.uint8)
        with pytest.raises(ValueError, match="values"):
            masks_from_clip(VideoClip(data))

    def test_external_masks_reject_rgb(self):
        with pytest.raises(ValueError, match="channel"):
            masks_from_clip(VideoClip(np.zeros((1, 2, 2, 3), dtype=np.uint8)))
