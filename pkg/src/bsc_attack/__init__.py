"""Black-box attacks on video classifiers via drifting text overlays."""

from .agent import ActionSpace, AdamState, AgentParams, init_agent, reinforce_step, sample_batch
from .oracle import Oracle, SubprocessOracle, ToyClassifierSpec, ToyOracle, toy_video
from .orchestrator import (
    AttackConfig,
    AttackResult,
    CleanMisclassified,
    DatasetEntry,
    attack,
    evaluate_dataset,
    grid_search,
)
from .overlay import (
    BscPlacement,
    FontAtlas,
    GlyphMask,
    RegionSet,
    blend,
    default_atlas,
    load_atlas,
    rasterize,
    regions_for,
    save_atlas,
)
from .rewards import RewardConfig, aoa, aoa_star, attack_reward, iou_penalty, total_reward
from .saliency import saliency_map, salient_mask
from .search import BhConfig, Objective, basin_hopping, random_search
from .tensor_io import Label, VideoClip, export_frames, load_video, save_video

__version__ = "0.1.0"
