"""Reward terms steering the search, plus the occluded-area metrics.

The attacker maximizes r = r_attack + weight * r_iou: the log-probability
term rises as the true class loses mass, and the overlap term punishes any
box intersection between overlays. Both are <= 0, so 0 is the best case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .overlay import RegionSet
from .tensor_io import Label

LOG_FLOOR = 1e-6  # keeps r_attack finite when the oracle is fully confident


@dataclass(frozen=True)
class RewardConfig:
    iou_weight: float = 1e-3
    log_floor: float = LOG_FLOOR

    def __post_init__(self):
        if self.iou_weight < 0:
            raise ValueError(f"iou_weight must be >= 0, got {self.iou_weight}")
        if not 0 < self.log_floor < 1:
            raise ValueError(f"log_floor must be in (0, 1), got {self.log_floor}")


def attack_reward(probs: np.ndarray, label: Label, log_floor: float = LOG_FLOOR) -> float:
    """ln of the mass the oracle puts off the true class, floored to stay finite."""
    if label.y >= len(probs):
        raise ValueError(f"label {label.y} outside prediction of size {len(probs)}")
    return math.log(max(1.0 - float(probs[label.y]), log_floor))


def iou_penalty(regions: RegionSet) -> float:
    """Minus the overlap ratio of the overlay boxes: pairwise-intersection
    area over union area, on the unclipped frame-0 boxes.

    Uniform drift keeps relative layout constant, so frame 0 decides every
    frame; boxes are used unclipped so an overlap hiding off-frame still
    counts before it drifts into view. Exactly 0.0 iff all boxes are pairwise
    disjoint; -1.0 when every covered pixel is shared.
    """
    boxes = regions.boxes
    if len(boxes) == 1:
        return 0.0
    u, v, w, h = (np.array(col, dtype=np.int64) for col in zip(*boxes))
    # coordinate compression: every box is a union of grid cells, exactly
    xs = np.unique(np.concatenate([u, u + w]))
    ys = np.unique(np.concatenate([v, v + h]))
    cover_x = (u[:, None] <= xs[None, :-1]) & (xs[None, 1:] <= (u + w)[:, None])
    cover_y = (v[:, None] <= ys[None, :-1]) & (ys[None, 1:] <= (v + h)[:, None])
    hits = cover_y.astype(np.int64).T @ cover_x.astype(np.int64)  # (ny, nx)
    cell = (ys[1:] - ys[:-1])[:, None] * (xs[1:] - xs[:-1])[None, :]
    shared = int(cell[hits >= 2].sum())
    if shared == 0:
        return 0.0
    return -shared / int(cell[hits >= 1].sum())


def total_reward(r_attack: float, r_iou: float, cfg: RewardConfig) -> float:
    return r_attack + cfg.iou_weight * r_iou


def aoa(regions: RegionSet) -> float:
    """Percentage of all video pixels occluded by the overlays."""
    return 100.0 * regions.covered() / regions.owner.size


def aoa_star(regions: RegionSet, salient: np.ndarray) -> float:
    """Percentage of all video pixels that are both occluded and salient.

    Same denominator as aoa, so aoa_star <= aoa always holds.
    """
    salient = np.asarray(salient, dtype=bool)
    if salient.shape != regions.owner.shape:
        raise ValueError(
            f"salient masks {salient.shape} vs regions {regions.owner.shape}"
        )
    covered = regions.owner >= 0
    return 100.0 * int((covered & salient).sum()) / regions.owner.size
