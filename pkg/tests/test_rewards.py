import math

import numpy as np
import pytest

from bsc_attack.overlay import BscPlacement, GlyphMask, RegionSet, regions_for
from bsc_attack.rewards import (
    RewardConfig,
    aoa,
    aoa_star,
    attack_reward,
    iou_penalty,
    total_reward,
)
from bsc_attack.tensor_io import Label


def regions_from_boxes(boxes):
    """RegionSet with the given frame-0 boxes; masks are irrelevant for IoU."""
    return RegionSet(
        owner=np.full((1, 1, 1), -1, dtype=np.int16),
        boxes=tuple(boxes),
        glyphs=(),
    )


def rasterized_regions(boxes, frames=4, height=40, width=50):
    glyphs = [GlyphMask(np.ones((h, w), dtype=bool)) for (_, _, w, h) in boxes]
    placements = [BscPlacement(u, v, 255) for (u, v, _, _) in boxes]
    return regions_for(placements, glyphs, frames, height, width)


def brute_force_iou(boxes):
    """Pixel-level rasterization oracle for the overlap ratio."""
    if len(boxes) == 1:
        return 0.0
    xs = [u for (u, _, _, _) in boxes] + [u + w for (u, _, w, _) in boxes]
    ys = [v for (_, v, _, _) in boxes] + [v + h for (_, v, _, h) in boxes]
    x0, y0 = min(xs), min(ys)
    canvas = np.zeros((max(ys) - y0, max(xs) - x0), dtype=np.int32)
    for (u, v, w, h) in boxes:
        canvas[v - y0 : v + h - y0, u - x0 : u + w - x0] += 1
    union = int((canvas >= 1).sum())
    shared = int((canvas >= 2).sum())
    return 0.0 if shared == 0 else -shared / union


class TestAttackReward:
    def test_point_nine(self):
        probs = np.zeros(5)
        probs[2] = 0.9
        probs[0] = 0.1
        assert attack_reward(probs, Label(2, 5)) == pytest.approx(math.log(0.1))

    def test_zero_true_prob_is_best(self):
        probs = np.array([0.0, 1.0])
        assert attack_reward(probs, Label(0, 2)) == 0.0

    def test_clamp_at_full_confidence(self):
        probs = np.array([1.0, 0.0])
        assert attack_reward(probs, Label(0, 2)) == pytest.approx(math.log(1e-6))

    def test_always_nonpositive_and_monotone(self):
        prev = 0.0
        for p in np.linspace(0, 1, 101):
            r = attack_reward(np.array([p, 1 - p]), Label(0, 2))
            assert r <= 0.0
            assert r <= prev + 1e-12
            prev = r

    def test_label_out_of_range(self):
        with pytest.raises(ValueError):
            attack_reward(np.array([1.0, 0.0]), Label(3, 4))


class TestIouPenalty:
    def test_single_box(self):
        assert iou_penalty(regions_from_boxes([(0, 0, 5, 5)])) == 0.0

    def test_disjoint(self):
        rs = regions_from_boxes([(0, 0, 5, 5), (10, 10, 5, 5)])
        assert iou_penalty(rs) == 0.0

    def test_touching_is_disjoint(self):
        rs = regions_from_boxes([(0, 0, 5, 5), (5, 0, 5, 5)])
        assert iou_penalty(rs) == 0.0

    def test_identical(self):
        rs = regions_from_boxes([(3, 4, 7, 2), (3, 4, 7, 2)])
        assert iou_penalty(rs) == -1.0

    def test_half_overlap(self):
        rs = regions_from_boxes([(0, 0, 10, 10), (5, 0, 10, 10)])
        assert iou_penalty(rs) == pytest.approx(-50 / 150)

    def test_negative_coordinates(self):
        rs = regions_from_boxes([(-8, 0, 10, 4), (-3, 0, 10, 4)])
        assert iou_penalty(rs) == pytest.approx(-20 / 60)

    def test_matches_brute_force_on_random_sets(self):
        rng = np.random.default_rng(17)
        for _ in range(400):
            m = int(rng.integers(1, 6))
            boxes = [
                (
                    int(rng.integers(-15, 30)),
                    int(rng.integers(0, 30)),
                    int(rng.integers(1, 15)),
                    int(rng.integers(1, 12)),
                )
                for _ in range(m)
            ]
            assert iou_penalty(regions_from_boxes(boxes)) == pytest.approx(
                brute_force_iou(boxes), abs=0.0
            )

    def test_zero_iff_pairwise_disjoint(self):
        rng = np.random.default_rng(23)
        for _ in range(300):
            boxes = [
                (
                    int(rng.integers(-5, 20)),
                    int(rng.integers(0, 20)),
                    int(rng.integers(1, 10)),
                    int(rng.integers(1, 10)),
                )
                for _ in range(int(rng.integers(2, 5)))
            ]
            disjoint = all(
                a[0] + a[2] <= b[0]
                or b[0] + b[2] <= a[0]
                or a[1] + a[3] <= b[1]
                or b[1] + b[3] <= a[1]
                for i, a in enumerate(boxes)
                for b in boxes[i + 1 :]
            )
            assert (iou_penalty(regions_from_boxes(boxes)) == 0.0) == disjoint


class TestTotalReward:
    def test_paper_weight_is_default(self):
        assert RewardConfig().iou_weight == pytest.approx(1e-3)

    def test_zero_iou_passthrough(self):
        assert total_reward(-2.5, 0.0, RewardConfig()) == -2.5

    def test_weighted_sum(self):
        cfg = RewardConfig(iou_weight=0.5)
        assert total_reward(-2.0, -1.0, cfg) == pytest.approx(-2.5)

    def test_zero_weight_ignores_overlap(self):
        cfg = RewardConfig(iou_weight=0.0)
        assert total_reward(-1.3, -0.9, cfg) == -1.3

    def test_config_validation(self):
        with pytest.raises(ValueError):
            RewardConfig(iou_weight=-0.1)
        with pytest.raises(ValueError):
            RewardConfig(log_floor=0.0)


class TestOccludedArea:
    def test_empty_regions(self):
        rs = RegionSet(
            owner=np.full((4, 8, 8), -1, dtype=np.int16), boxes=((0, 0, 1, 1),),
            glyphs=(),
        )
        assert aoa(rs) == 0.0

    def test_static_fully_visible_bsc(self):
        # an 8-px-tall, 10-px-wide solid block, kept fully inside the frame:
        # drift is avoided by checking one frame at a time
        owner = np.full((16, 64, 64), -1, dtype=np.int16)
        owner[:, 0:8, 0:10] = 0
        rs = RegionSet(owner=owner, boxes=((0, 0, 10, 8),), glyphs=())
        assert aoa(rs) == pytest.approx(100 * (16 * 80) / (16 * 64 * 64))

    def test_salient_everywhere_matches_aoa(self):
        rs = rasterized_regions([(2, 3, 6, 4)])
        salient = np.ones(rs.owner.shape, dtype=bool)
        assert aoa_star(rs, salient) == pytest.approx(aoa(rs))

    def test_salient_nowhere_is_zero(self):
        rs = rasterized_regions([(2, 3, 6, 4)])
        assert aoa_star(rs, np.zeros(rs.owner.shape, dtype=bool)) == 0.0

    def test_half_plane_salient(self):
        # block kept in-frame over all frames; salient = left half of each row
        owner = np.full((2, 20, 40), -1, dtype=np.int16)
        owner[:, 5:9, 10:30] = 0
        rs = RegionSet(owner=owner, boxes=((10, 5, 20, 4),), glyphs=())
        salient = np.zeros((2, 20, 40), dtype=bool)
        salient[:, :, :20] = True
        assert aoa_star(rs, salient) == pytest.approx(aoa(rs) / 2)

    def test_ordering_invariant(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            rs = rasterized_regions(
                [
                    (
                        int(rng.integers(-5, 40)),
                        int(rng.integers(0, 30)),
                        int(rng.integers(1, 12)),
                        int(rng.integers(1, 8)),
                    )
                ]
            )
            salient = rng.random(rs.owner.shape) < 0.3
            a, s = aoa(rs), aoa_star(rs, salient)
            assert 0.0 <= s <= a <= 100.0

    def test_dimension_mismatch(self):
        rs = rasterized_regions([(0, 0, 4, 4)])
        with pytest.raises(ValueError):
            aoa_star(rs, np.zeros((1, 2, 3), dtype=bool))
