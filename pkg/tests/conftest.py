"""Shared fixtures: the frozen desk-scale toy setup used across suites.

DESK_* constants pin the canonical experiment: an 8-class 16x64x64x3 oracle
at temperature 20 with 24 generated videos, text "8"x18, m=4 overlays at
font size 9. The acceptance suite asserts against exactly this setup.
"""

import pytest

from bsc_attack.oracle import ToyClassifierSpec, ToyOracle, toy_video
from bsc_attack.orchestrator import AttackConfig, DatasetEntry
from bsc_attack.tensor_io import Label, save_video

DESK_TEXT = "8" * 18
DESK_SPEC = ToyClassifierSpec()  # 8 classes, 64x64, tau=20, seed 0
DESK_VIDEOS = 24
DESK_BUDGET = 5000
DESK_BATCH = 32


def desk_clip(label: int, video_seed: int):
    return toy_video(DESK_SPEC, label=label, seed=100 + video_seed * 8 + label)


def desk_entries(count: int = DESK_VIDEOS):
    entries = []
    for i in range(count):
        label, vseed = i % 8, i // 8
        entries.append(
            DatasetEntry(
                name=f"clip_{i:02d}.vten",
                clip=desk_clip(label, vseed),
                label=Label(label, DESK_SPEC.classes),
            )
        )
    return entries


def desk_config(**overrides):
    base = dict(
        text=DESK_TEXT,
        bsc_count=4,
        font_size=9,
        iou_weight=1e-3,
        batch_size=DESK_BATCH,
        max_queries=DESK_BUDGET,
        strategy="rl",
        seed=0,
    )
    base.update(overrides)
    return AttackConfig(**base)


def desk_oracle_factory():
    return ToyOracle(DESK_SPEC)


@pytest.fixture
def toy_dataset_dir(tmp_path):
    """Six desk videos written as .vten files plus a labels.csv."""
    rows = []
    for i, entry in enumerate(desk_entries(6)):
        save_video(entry.clip, tmp_path / entry.name)
        rows.append(f"{entry.name},{entry.label.y}")
    (tmp_path / "labels.csv").write_text("\n".join(rows) + "\n")
    return tmp_path
