"""Query-budgeted baselines over the placement space: random search and
Basin Hopping. Both consume the same objective the policy sees, count every
evaluation, and stop the moment a candidate both fools the oracle and keeps
the overlays disjoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .agent import ActionSpace


@dataclass
class Objective:
    """Counts evaluations of the underlying reward function against a budget.

    fn maps a decoded placement vector (u_1, v_1, alpha_1, ..., alpha_m) to
    (reward, success). Every call to evaluate consumes exactly one query.
    """

    fn: Callable[[tuple[int, ...]], tuple[float, bool]]
    budget: int
    queries: int = 0

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError(f"budget must be >= 1, got {self.budget}")

    @property
    def exhausted(self) -> bool:
        return self.queries >= self.budget

    def evaluate(self, point: tuple[int, ...]) -> tuple[float, bool]:
        if self.exhausted:
            raise RuntimeError("query budget exhausted")
        self.queries += 1
        return self.fn(point)


@dataclass(frozen=True)
class BhConfig:
    """Hop magnitudes, Metropolis temperature, and local-descent effort.

    hop_scale=None derives one tenth of each dimension's range (at least 1).
    temperature 0 never accepts a worsening hop.
    """

    hop_scale: tuple[int, ...] | None = None
    temperature: float = 1.0
    local_passes: int = 1

    def __post_init__(self):
        if self.hop_scale is not None and any(s < 1 for s in self.hop_scale):
            raise ValueError(f"hop scale entries must be >= 1: {self.hop_scale}")
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")
        if self.local_passes < 0:
            raise ValueError(f"local passes must be >= 0, got {self.local_passes}")


@dataclass
class SearchResult:
    point: tuple[int, ...]
    reward: float
    success: bool
    queries: int


class _Stop(Exception):
    """Internal: budget ran out or a success ended the search."""


@dataclass
class _Tracker:
    obj: Objective
    best_point: tuple[int, ...] | None = None
    best_reward: float = -math.inf
    success_point: tuple[int, ...] | None = None
    success_reward: float = 0.0

    def eval(self, point: tuple[int, ...]) -> float:
        if self.obj.exhausted:
            raise _Stop
        reward, success = self.obj.evaluate(point)
        if reward > self.best_reward:
            self.best_reward = reward
            self.best_point = point
        if success:
            self.success_point = point
            self.success_reward = reward
            raise _Stop
        return reward

    def result(self) -> SearchResult:
        if self.success_point is not None:
            return SearchResult(
                self.success_point, self.success_reward, True, self.obj.queries
            )
        return SearchResult(self.best_point, self.best_reward, False, self.obj.queries)


def _bounds(space: ActionSpace) -> list[tuple[int, int]]:
    return [(off, off + size - 1) for off, size in zip(space.offsets, space.sizes)]


def _uniform_point(space: ActionSpace, rng: np.random.Generator) -> tuple[int, ...]:
    return tuple(
        int(off + rng.integers(size)) for off, size in zip(space.offsets, space.sizes)
    )


def random_search(
    obj: Objective, space: ActionSpace, rng: np.random.Generator
) -> SearchResult:
    """Uniform i.i.d. sampling over the decoded ranges until success or budget."""
    tracker = _Tracker(obj)
    try:
        while True:
            tracker.eval(_uniform_point(space, rng))
    except _Stop:
        pass
    return tracker.result()


def basin_hopping(
    obj: Objective, space: ActionSpace, cfg: BhConfig, rng: np.random.Generator
) -> SearchResult:
    """Random hop, greedy +-1 coordinate descent, Metropolis accept/reject.

    Each hop perturbs every coordinate by a uniform integer offset within the
    hop scale (clamped to range); the local step tries +-1 per dimension for
    the configured passes, keeping improvements; a worsening hop is accepted
    with probability exp(delta / temperature).
    """
    bounds = _bounds(space)
    scale = cfg.hop_scale or tuple(max(1, s // 10) for s in space.sizes)
    if len(scale) != space.steps:
        raise ValueError(f"{len(scale)} hop scales for {space.steps} dimensions")
    tracker = _Tracker(obj)

    def clamp(vals):
        return tuple(
            min(max(v, lo), hi) for v, (lo, hi) in zip(vals, bounds)
        )

    def descend(point, reward):
        for _ in range(cfg.local_passes):
            improved = False
            for dim in range(space.steps):
                for delta in (1, -1):
                    cand = list(point)
                    cand[dim] = min(max(cand[dim] + delta, bounds[dim][0]), bounds[dim][1])
                    cand = tuple(cand)
                    if cand == point:
                        continue
                    r = tracker.eval(cand)
                    if r > reward:
                        point, reward = cand, r
                        improved = True
            if not improved:
                break
        return point, reward

    try:
        current = _uniform_point(space, rng)
        cur_reward = tracker.eval(current)
        current, cur_reward = descend(current, cur_reward)
        while True:
            hop = clamp(
                tuple(
                    v + int(rng.integers(-s, s + 1))
                    for v, s in zip(current, scale)
                )
            )
            hop_reward = tracker.eval(hop)
            hop, hop_reward = descend(hop, hop_reward)
            if hop_reward > cur_reward:
                accept = True
            elif cfg.temperature == 0:
                accept = False
            else:
                accept = rng.random() < math.exp(
                    (hop_reward - cur_reward) / cfg.temperature
                )
            if accept:
                current, cur_reward = hop, hop_reward
    except _Stop:
        pass
    return tracker.result()
