"""End-to-end attack driver and dataset-level evaluation.

One attack = one video, one agent. Per epoch the policy proposes a batch of
placements; each candidate is rendered, blended, and scored with one oracle
query; a candidate wins outright when the oracle's argmax leaves the true
class while the overlay boxes stay exactly disjoint. Failing that, the batch
rewards update the policy and the loop continues until the query budget is
spent. Everything is seeded, and per-video work is independent, so dataset
runs produce identical output at any thread count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from . import saliency
from .agent import (
    ActionSpace,
    AdamState,
    AgentParams,
    init_agent,
    reinforce_step,
    sample_batch,
)
from .oracle import Oracle
from .overlay import (
    BscPlacement,
    FontAtlas,
    RegionSet,
    blend,
    get_atlas,
    rasterize,
    regions_for,
)
from .rewards import RewardConfig, aoa, aoa_star, attack_reward, iou_penalty, total_reward
from .search import BhConfig, Objective, SearchResult, basin_hopping, random_search
from .tensor_io import Label, VideoClip

STRATEGIES = ("rl", "bh", "random")


class CleanMisclassified(ValueError):
    """The oracle already gets the clean clip wrong: nothing to attack."""


class AttackAborted(RuntimeError):
    """The oracle failed mid-attack; queries spent so far are preserved."""

    def __init__(self, message: str, queries: int):
        super().__init__(message)
        self.queries = queries


@dataclass(frozen=True)
class AttackConfig:
    """Everything one attack needs beyond the clip, label, and oracle."""

    text: str | tuple[str, ...]
    bsc_count: int = 4
    font_size: int = 9
    iou_weight: float = 1e-3
    font: str = "DejaVuSerif-like"
    batch_size: int = 500
    max_queries: int = 50_000
    strategy: str = "rl"
    color: tuple[int, ...] = (255, 255, 255)
    seed: int = 0
    match_queries: int | None = None
    baseline: bool = False
    quantile: float = saliency.DEFAULT_QUANTILE
    log_floor: float = 1e-6
    bh: BhConfig = field(default_factory=BhConfig)

    def __post_init__(self):
        if self.bsc_count < 1:
            raise ValueError(f"need >= 1 overlay, got {self.bsc_count}")
        if self.font_size < 1:
            raise ValueError(f"font size must be >= 1, got {self.font_size}")
        if self.batch_size < 1:
            raise ValueError(f"batch size must be >= 1, got {self.batch_size}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if self.strategy == "rl" and self.max_queries < self.batch_size:
            raise ValueError(
                f"max_queries {self.max_queries} < batch size {self.batch_size}"
            )
        if self.max_queries < 1:
            raise ValueError("max_queries must be >= 1")
        if any(not 0 <= c <= 255 for c in self.color):
            raise ValueError(f"overlay color must be bytes: {self.color}")

    def texts(self) -> tuple[str, ...]:
        if isinstance(self.text, str):
            return (self.text,) * self.bsc_count
        if len(self.text) != self.bsc_count:
            raise ValueError(
                f"{len(self.text)} texts for {self.bsc_count} overlays"
            )
        return tuple(self.text)

    def rewards(self) -> RewardConfig:
        return RewardConfig(iou_weight=self.iou_weight, log_floor=self.log_floor)


@dataclass
class AttackResult:
    success: bool
    queries: int
    final_attack_reward: float
    aoa: float | None = None
    aoa_star: float | None = None
    placements: tuple[BscPlacement, ...] | None = None
    clip: VideoClip | None = None
    reward_trace: tuple[float, ...] = ()
    agent: tuple[AgentParams, AdamState] | None = None


@dataclass
class _Candidate:
    values: tuple[int, ...]
    placements: tuple[BscPlacement, ...]
    regions: RegionSet
    riou: float
    clip: VideoClip
    probs: np.ndarray
    r_attack: float
    reward: float
    success: bool


class _Evaluator:
    """Renders, blends, and scores one decoded placement vector per call."""

    def __init__(self, clip, label, oracle, cfg, glyphs, salient):
        self.clip = clip
        self.label = label
        self.oracle = oracle
        self.cfg = cfg
        self.glyphs = glyphs
        self.salient = salient
        self.rewards = cfg.rewards()
        self.best_r_attack = -math.inf
        self.last: _Candidate | None = None

    def __call__(self, values: tuple[int, ...]) -> _Candidate:
        placements = tuple(
            BscPlacement(u=values[3 * k], v=values[3 * k + 1], alpha=values[3 * k + 2])
            for k in range(len(self.glyphs))
        )
        regions = regions_for(
            list(placements), list(self.glyphs),
            self.clip.frames, self.clip.height, self.clip.width,
        )
        riou = iou_penalty(regions)
        adv = blend(self.clip, regions, self.cfg.color, [p.alpha for p in placements])
        probs = self.oracle.predict(adv)
        r_att = attack_reward(probs, self.label, self.rewards.log_floor)
        reward = total_reward(r_att, riou, self.rewards)
        success = int(probs.argmax()) != self.label.y and riou == 0.0
        cand = _Candidate(
            values, placements, regions, riou, adv, probs, r_att, reward, success
        )
        self.best_r_attack = max(self.best_r_attack, r_att)
        self.last = cand
        return cand

    def objective(self, values: tuple[int, ...]) -> tuple[float, bool]:
        cand = self(values)
        return cand.reward, cand.success


def _result_for(cand: _Candidate, evaluator: _Evaluator, queries: int, trace=()) -> AttackResult:
    return AttackResult(
        success=True,
        queries=queries,
        final_attack_reward=cand.r_attack,
        aoa=aoa(cand.regions),
        aoa_star=aoa_star(cand.regions, evaluator.salient),
        placements=cand.placements,
        clip=cand.clip,
        reward_trace=tuple(trace),
    )


def attack(
    clip: VideoClip,
    label: Label,
    oracle: Oracle,
    cfg: AttackConfig,
    atlas: FontAtlas | None = None,
    salient: np.ndarray | None = None,
    agent_state: tuple[AgentParams, AdamState] | None = None,
) -> AttackResult:
    """Run one attack to success or budget exhaustion.

    The clean clip must be classified correctly first (that validation query
    is not billed against the budget). For the rl strategy the budget rounds
    down to whole epochs of batch_size rollouts.
    """
    atlas = atlas if atlas is not None else get_atlas(cfg.font)
    clean = oracle.predict(clip)
    if int(clean.argmax()) != label.y:
        raise CleanMisclassified(
            f"oracle predicts {int(clean.argmax())} on the clean clip, label is {label.y}"
        )
    glyphs = [rasterize(t, atlas, cfg.font_size) for t in cfg.texts()]
    space = ActionSpace.for_placements(
        [g.width for g in glyphs], clip.height, clip.width, cfg.font_size
    )
    if salient is None:
        salient = saliency.clip_salient_masks(clip, cfg.quantile)
    evaluator = _Evaluator(clip, label, oracle, cfg, glyphs, salient)

    if cfg.strategy == "rl":
        return _attack_rl(evaluator, space, cfg, agent_state)
    budget = cfg.match_queries if cfg.match_queries is not None else cfg.max_queries
    obj = Objective(fn=evaluator.objective, budget=budget)
    rng = np.random.default_rng([cfg.seed, 2])
    try:
        if cfg.strategy == "random":
            res = random_search(obj, space, rng)
        else:
            res = basin_hopping(obj, space, cfg.bh, rng)
    except Exception as exc:
        raise AttackAborted(str(exc), obj.queries) from exc
    return _search_result(res, evaluator)


def _search_result(res: SearchResult, evaluator: _Evaluator) -> AttackResult:
    if res.success:
        # the search stops on the success evaluation, so it is the last one
        cand = evaluator.last
        assert cand is not None and cand.values == res.point
        return _result_for(cand, evaluator, res.queries)
    return AttackResult(
        success=False,
        queries=res.queries,
        final_attack_reward=evaluator.best_r_attack,
    )


def _attack_rl(evaluator, space, cfg: AttackConfig, agent_state) -> AttackResult:
    if agent_state is not None:
        params, opt = agent_state
    else:
        params = init_agent(space, cfg.seed)
        opt = AdamState()
    rng = np.random.default_rng([cfg.seed, 1])
    epochs = cfg.max_queries // cfg.batch_size
    queries = 0
    trace = []
    for _ in range(epochs):
        sequences = sample_batch(params, space, cfg.batch_size, rng)
        scored: list[tuple] = []
        winners: list[tuple[float, int, _Candidate]] = []
        for idx, seq in enumerate(sequences):
            try:
                cand = evaluator(space.decode(seq.actions))
            except Exception as exc:
                if isinstance(exc, (ValueError, ArithmeticError)):
                    raise
                raise AttackAborted(str(exc), queries + len(scored)) from exc
            scored.append((seq, cand.reward))
            if cand.success:
                # stop querying: the first success ends the attack, keeping
                # reported queries equal to the oracle-counter delta
                winners.append(
                    (aoa_star(cand.regions, evaluator.salient), idx, cand)
                )
                break
        queries += len(scored)
        trace.append(sum(r for _, r in scored) / len(scored))
        if winners:
            star, _, cand = min(winners, key=lambda w: (w[0], w[1]))
            result = _result_for(cand, evaluator, queries, trace)
            result.agent = (params, opt)
            return result
        params = reinforce_step(params, opt, space, scored, baseline=cfg.baseline)
    return AttackResult(
        success=False,
        queries=queries,
        final_attack_reward=evaluator.best_r_attack,
        reward_trace=tuple(trace),
        agent=(params, opt),
    )


@dataclass(frozen=True)
class DatasetEntry:
    name: str
    clip: VideoClip
    label: Label
    text: str | None = None  # overrides cfg.text when set


@dataclass
class VideoRow:
    name: str
    status: str  # "1" success, "0" failure, "skipped" clean misclassification
    queries: int
    aoa: float | None
    aoa_star: float | None
    r_attack: float | None


@dataclass
class DatasetReport:
    rows: list[VideoRow]
    aggregate: dict


def _video_seed(base_seed: int, index: int) -> int:
    return int(np.random.SeedSequence([base_seed, index]).generate_state(1)[0])


def _attack_one(entry: DatasetEntry, index: int, oracle_factory, cfg, atlas) -> VideoRow:
    video_cfg = replace(cfg, seed=_video_seed(cfg.seed, index))
    if entry.text is not None:
        video_cfg = replace(video_cfg, text=entry.text)
    oracle = oracle_factory()  # factory owns the lifetime (may be shared)
    try:
        res = attack(entry.clip, entry.label, oracle, video_cfg, atlas=atlas)
    except CleanMisclassified:
        return VideoRow(entry.name, "skipped", 0, None, None, None)
    return VideoRow(
        entry.name,
        "1" if res.success else "0",
        res.queries,
        res.aoa,
        res.aoa_star,
        res.final_attack_reward,
    )


def evaluate_dataset(
    entries: list[DatasetEntry],
    oracle_factory: Callable[[], Oracle],
    cfg: AttackConfig,
    threads: int = 1,
    atlas: FontAtlas | None = None,
) -> DatasetReport:
    """Attack every correctly classified clip; aggregate FR/AOA/AOA*/AQN.

    Per-video seeds derive from (cfg.seed, index), and each video gets a
    fresh oracle from the factory, so results do not depend on threads.
    """
    if not entries:
        raise ValueError("empty dataset")
    atlas = atlas if atlas is not None else get_atlas(cfg.font)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(
                pool.map(
                    lambda pair: _attack_one(pair[1], pair[0], oracle_factory, cfg, atlas),
                    enumerate(entries),
                )
            )
    else:
        rows = [
            _attack_one(e, i, oracle_factory, cfg, atlas) for i, e in enumerate(entries)
        ]
    wins = [r for r in rows if r.status == "1"]
    attacked = [r for r in rows if r.status != "skipped"]
    aggregate = {
        "fr": round(100.0 * len(wins) / len(attacked), 6) if attacked else None,
        "aoa": round(sum(r.aoa for r in wins) / len(wins), 6) if wins else None,
        "aoa_star": round(sum(r.aoa_star for r in wins) / len(wins), 6) if wins else None,
        "aqn": round(sum(r.queries for r in wins) / len(wins), 6) if wins else None,
        "n": len(attacked),
        "skipped": len(rows) - len(attacked),
        "seed": cfg.seed,
    }
    return DatasetReport(rows=rows, aggregate=aggregate)


GRID_AXES = {
    "m": "bsc_count",
    "h": "font_size",
    "lambda": "iou_weight",
    "font": "font",
}


def grid_search(
    base_cfg: AttackConfig,
    axis: str,
    values: list,
    entries: list[DatasetEntry],
    oracle_factory: Callable[[], Oracle],
    threads: int = 1,
) -> list[tuple[object, dict]]:
    """One evaluate_dataset per axis value, identical seeds across rows."""
    if axis not in GRID_AXES:
        raise ValueError(f"axis must be one of {sorted(GRID_AXES)}, got {axis!r}")
    if not values:
        raise ValueError("no grid values")
    out = []
    for value in values:
        cfg = replace(base_cfg, **{GRID_AXES[axis]: value})
        report = evaluate_dataset(entries, oracle_factory, cfg, threads=threads)
        out.append((value, report.aggregate))
    return out
