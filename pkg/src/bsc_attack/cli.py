"""Command-line front end.

Subcommands: attack (one video), eval (a dataset), grid (one hyperparameter
axis), export (clip frames to PPM/PGM), serve-check (handshake an external
oracle). Machine-readable CSV/JSON goes to stdout; logs and progress go to
stderr. Exit codes: 0 done, 1 attack found no adversary, 2 usage or bad
input, 3 runtime failure (oracle died, I/O error).

Flags may also come from a JSON config file (--config); explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import shlex
import sys
from pathlib import Path

from . import agent, saliency
from .oracle import OracleError, SubprocessOracle, ToyClassifierSpec, ToyOracle
from .orchestrator import (
    AttackAborted,
    AttackConfig,
    CleanMisclassified,
    DatasetEntry,
    attack,
    evaluate_dataset,
    grid_search,
)
from .overlay import AtlasError
from .search import BhConfig
from .tensor_io import Label, VtenError, export_frames, load_video, save_video

log = logging.getLogger("bsc_attack")

EXIT_OK = 0
EXIT_NO_ADVERSARY = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3

# name, type, default: everything here is overridable from --config JSON
_ATTACK_OPTIONS = [
    ("text", str, None),
    ("text_file", str, None),
    ("m", int, 4),
    ("font_size", int, 9),
    ("lambda", float, 1e-3),
    ("font", str, "DejaVuSerif-like"),
    ("batch", int, 500),
    ("max_queries", int, 50_000),
    ("strategy", str, "rl"),
    ("match_queries", int, None),
    ("seed", int, 0),
    ("threads", int, 0),  # 0 = all cores
    ("saliency", str, "sobel"),
    ("quantile", float, saliency.DEFAULT_QUANTILE),
    ("oracle", str, "builtin"),
    ("oracle_classes", int, 8),
    ("oracle_seed", int, 0),
    ("oracle_timeout", float, 30.0),
]


def _add_attack_options(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("attack options")
    g.add_argument("--text", help="overlay text (default: ask the oracle for a caption)")
    g.add_argument("--text-file", help="file with overlay text (attack: whole file; "
                                       "eval/grid: CSV of filename,text)")
    g.add_argument("--m", type=int, help="number of overlays [4]")
    g.add_argument("--font-size", type=int, help="overlay text height in px [9]")
    g.add_argument("--lambda", type=float, dest="lambda", help="overlap penalty weight [1e-3]")
    g.add_argument("--font", help="atlas name or FATL file [DejaVuSerif-like]")
    g.add_argument("--batch", type=int, help="policy rollouts per update [500]")
    g.add_argument("--max-queries", type=int, help="oracle query budget [50000]")
    g.add_argument("--strategy", choices=["rl", "bh", "random"], help="search strategy [rl]")
    g.add_argument("--match-queries", type=int,
                   help="exact budget for bh/random runs (equal-trials comparisons)")
    g.add_argument("--seed", type=int, help="master seed [0]")
    g.add_argument("--threads", type=int, help="worker threads for eval/grid [all cores]")
    g.add_argument("--baseline", action="store_true", default=None,
                   help="subtract the batch-mean reward in policy updates")
    g.add_argument("--saliency", help="sobel | file:<masks.vten> [sobel]")
    g.add_argument("--quantile", type=float, help="salient-mask quantile [0.75]")
    g.add_argument("--oracle", help="builtin | cmd:<command line> [builtin]")
    g.add_argument("--oracle-classes", type=int, help="builtin oracle class count [8]")
    g.add_argument("--oracle-seed", type=int, help="builtin oracle template seed [0]")
    g.add_argument("--oracle-timeout", type=float, help="per-query timeout, seconds [30]")
    p.add_argument("--config", help="JSON file of option defaults (explicit flags win)")
    p.add_argument("--out", help="directory for result artifacts")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bsc-attack",
        description="Attack video classifiers with drifting text overlays.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("attack", help="attack one video")
    a.add_argument("--video", required=True, help=".vten clip to attack")
    a.add_argument("--label", required=True, type=int, help="true class index")
    a.add_argument("--resume", help="agent checkpoint to continue from")
    _add_attack_options(a)

    e = sub.add_parser("eval", help="attack a labeled dataset and report metrics")
    e.add_argument("--dataset", required=True, help="directory of .vten clips")
    e.add_argument("--labels", help="CSV of filename,label_index [<dataset>/labels.csv]")
    _add_attack_options(e)

    g = sub.add_parser("grid", help="sweep one hyperparameter axis over a dataset")
    g.add_argument("--dataset", required=True, help="directory of .vten clips")
    g.add_argument("--labels", help="CSV of filename,label_index [<dataset>/labels.csv]")
    g.add_argument("--axis", required=True, choices=["m", "h", "lambda", "font"])
    g.add_argument("--values", required=True, help="comma-separated axis values")
    _add_attack_options(g)

    x = sub.add_parser("export", help="dump clip frames as PPM/PGM images")
    x.add_argument("--video", required=True)
    x.add_argument("--out", required=True, help="output directory")

    s = sub.add_parser("serve-check", help="handshake an external oracle command")
    s.add_argument("--oracle", required=True, help="cmd:<command line>")
    s.add_argument("--oracle-timeout", type=float, default=30.0)
    return p


class UsageError(Exception):
    pass


def _merge_options(args) -> dict:
    """Layer hard defaults, then the config file, then explicit flags."""
    merged = {name: default for name, _, default in _ATTACK_OPTIONS}
    merged["baseline"] = False
    if getattr(args, "config", None):
        path = Path(args.config)
        if not path.is_file():
            raise UsageError(f"config file not found: {path}")
        try:
            loaded = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file is not valid JSON: {exc}")
        known = set(merged)
        for key, value in loaded.items():
            if key not in known:
                raise UsageError(f"unknown config key {key!r}")
            merged[key] = value
    for name, _, _ in _ATTACK_OPTIONS:
        value = getattr(args, name, None)
        if value is not None:
            merged[name] = value
    if getattr(args, "baseline", None) is not None:
        merged["baseline"] = args.baseline
    if merged["threads"] in (0, None):
        merged["threads"] = os.cpu_count() or 1
    return merged


def _attack_config(opts: dict, text) -> AttackConfig:
    return AttackConfig(
        text=text,
        bsc_count=opts["m"],
        font_size=opts["font_size"],
        iou_weight=opts["lambda"],
        font=opts["font"],
        batch_size=opts["batch"],
        max_queries=opts["max_queries"],
        strategy=opts["strategy"],
        seed=opts["seed"],
        match_queries=opts["match_queries"],
        baseline=opts["baseline"],
        quantile=opts["quantile"],
        bh=BhConfig(),
    )


class _SharedFactory:
    """Hands out one shared oracle; used for subprocess backends."""

    def __init__(self, oracle):
        self.oracle = oracle

    def __call__(self):
        return self.oracle

    def close(self):
        self.oracle.close()


def _make_oracle(opts: dict, height: int, width: int):
    """Returns (factory, oracle_for_meta, shared: bool)."""
    spec = opts["oracle"]
    if spec == "builtin":
        toy_spec = ToyClassifierSpec(
            classes=opts["oracle_classes"],
            height=height,
            width=width,
            seed=opts["oracle_seed"],
        )
        return (lambda: ToyOracle(toy_spec)), ToyOracle(toy_spec), False
    if spec.startswith("cmd:"):
        oracle = SubprocessOracle(
            shlex.split(spec[4:]), timeout=opts["oracle_timeout"]
        )
        factory = _SharedFactory(oracle)
        return factory, oracle, True
    raise UsageError(f"--oracle must be 'builtin' or 'cmd:...', got {spec!r}")


def _resolve_text(opts: dict, oracle, clip) -> str:
    if opts["text"] is not None:
        return opts["text"]
    if opts["text_file"] is not None:
        path = Path(opts["text_file"])
        if not path.is_file():
            raise UsageError(f"text file not found: {path}")
        return path.read_text(encoding="utf-8").strip()
    if isinstance(oracle, SubprocessOracle):
        log.info("no --text given; asking the oracle for a caption")
        return oracle.caption(clip)
    raise UsageError("no overlay text: pass --text or --text-file "
                     "(the builtin oracle cannot caption)")


def _load_salient(opts: dict, clip):
    spec = opts["saliency"]
    if spec == "sobel":
        return None  # attack computes Sobel masks itself
    if spec.startswith("file:"):
        masks_clip = load_video(spec[5:])
        masks = saliency.masks_from_clip(masks_clip)
        if masks.shape != (clip.frames, clip.height, clip.width):
            raise UsageError(
                f"mask clip shape {masks.shape} does not match video "
                f"{(clip.frames, clip.height, clip.width)}"
            )
        return masks
    raise UsageError(f"--saliency must be 'sobel' or 'file:<path>', got {spec!r}")


def _fmt(value) -> str:
    return "" if value is None else f"{value:.6f}"


def _cmd_attack(args) -> int:
    opts = _merge_options(args)
    video = Path(args.video)
    if not video.is_file():
        raise UsageError(f"video not found: {video}")
    clip = load_video(video)
    factory, oracle, shared = _make_oracle(opts, clip.height, clip.width)
    try:
        text = _resolve_text(opts, oracle, clip)
        cfg = _attack_config(opts, text)
        label = Label(y=args.label, classes=oracle.classes)
        salient = _load_salient(opts, clip)
        agent_state = None
        if args.resume:
            if not Path(args.resume).is_file():
                raise UsageError(f"checkpoint not found: {args.resume}")
            agent_state = agent.load_checkpoint(args.resume)
            log.info("resumed agent from %s", args.resume)
        result = attack(clip, label, oracle, cfg, salient=salient, agent_state=agent_state)
    finally:
        if shared:
            factory.close()
    payload = {
        "success": result.success,
        "queries": result.queries,
        "r_attack": round(result.final_attack_reward, 6),
        "aoa": None if result.aoa is None else round(result.aoa, 6),
        "aoa_star": None if result.aoa_star is None else round(result.aoa_star, 6),
        "placements": None
        if result.placements is None
        else [[p.u, p.v, p.alpha] for p in result.placements],
        "seed": cfg.seed,
        "strategy": cfg.strategy,
        "text": text,
    }
    print(json.dumps(payload, sort_keys=True))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "result.json").write_text(json.dumps(payload, sort_keys=True) + "\n")
        if result.clip is not None:
            save_video(result.clip, out / "adversarial.vten")
        if result.agent is not None:
            agent.save_checkpoint(out / "agent.ckpt", *result.agent)
        log.info("artifacts written to %s", out)
    return EXIT_OK if result.success else EXIT_NO_ADVERSARY


def _load_entries(args, opts) -> list[DatasetEntry]:
    dataset = Path(args.dataset)
    if not dataset.is_dir():
        raise UsageError(f"dataset directory not found: {dataset}")
    labels_path = Path(args.labels) if args.labels else dataset / "labels.csv"
    if not labels_path.is_file():
        raise UsageError(f"labels file not found: {labels_path}")
    per_video_text = {}
    if opts["text"] is None and opts["text_file"] is not None:
        tf = Path(opts["text_file"])
        if not tf.is_file():
            raise UsageError(f"text file not found: {tf}")
        with tf.open(newline="") as fh:
            for row in csv.reader(fh):
                if len(row) >= 2:
                    per_video_text[row[0]] = ",".join(row[1:])
    entries = []
    with labels_path.open(newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].startswith("#"):
                continue
            if len(row) != 2:
                raise UsageError(f"bad labels row: {row}")
            name, label_idx = row[0].strip(), int(row[1])
            clip_path = dataset / name
            if not clip_path.is_file():
                raise UsageError(f"clip listed in labels but missing: {clip_path}")
            entries.append((name, clip_path, label_idx, per_video_text.get(name)))
    if not entries:
        raise UsageError(f"no videos listed in {labels_path}")
    entries.sort(key=lambda e: e[0])
    return entries


def _build_dataset(args, opts):
    raw = _load_entries(args, opts)
    clips = [(name, load_video(path), label, text) for name, path, label, text in raw]
    height, width = clips[0][1].height, clips[0][1].width
    factory, oracle, shared = _make_oracle(opts, height, width)
    entries = [
        DatasetEntry(name=name, clip=clip, label=Label(y=label, classes=oracle.classes),
                     text=text)
        for name, clip, label, text in clips
    ]
    threads = opts["threads"]
    if shared and threads > 1:
        log.info("subprocess oracle: forcing --threads 1")
        threads = 1
    return entries, factory, shared, threads


_EVAL_HEADER = ["video", "success", "queries", "aoa", "aoa_star", "r_attack"]


def _emit_report(report, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(_EVAL_HEADER)
    for row in report.rows:
        writer.writerow(
            [row.name, row.status, row.queries, _fmt(row.aoa), _fmt(row.aoa_star),
             _fmt(row.r_attack)]
        )
    stream.write(json.dumps(report.aggregate, sort_keys=True) + "\n")


def _cmd_eval(args) -> int:
    opts = _merge_options(args)
    if opts["text"] is None and opts["text_file"] is None:
        raise UsageError("eval needs --text or --text-file (per-video captions "
                         "via the oracle are only supported in attack mode)")
    entries, factory, shared, threads = _build_dataset(args, opts)
    cfg = _attack_config(opts, opts["text"] if opts["text"] is not None else "")
    try:
        report = evaluate_dataset(entries, factory, cfg, threads=threads)
    finally:
        if shared:
            factory.close()
    for row in report.rows:
        log.info("%s: %s queries=%d", row.name, row.status, row.queries)
    _emit_report(report, sys.stdout)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        with (out / "metrics.csv").open("w", newline="") as fh:
            _emit_report(report, fh)
        log.info("report written to %s", out / "metrics.csv")
    return EXIT_OK


def _cmd_grid(args) -> int:
    opts = _merge_options(args)
    if opts["text"] is None and opts["text_file"] is None:
        raise UsageError("grid needs --text or --text-file")
    values_raw = [v for v in args.values.split(",") if v]
    if not values_raw:
        raise UsageError("--values is empty")
    caster = {"m": int, "h": int, "lambda": float, "font": str}[args.axis]
    try:
        values = [caster(v) for v in values_raw]
    except ValueError as exc:
        raise UsageError(f"bad --values for axis {args.axis}: {exc}")
    entries, factory, shared, threads = _build_dataset(args, opts)
    cfg = _attack_config(opts, opts["text"] if opts["text"] is not None else "")
    try:
        table = grid_search(cfg, args.axis, values, entries, factory, threads=threads)
    finally:
        if shared:
            factory.close()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow([args.axis, "fr", "aoa", "aoa_star", "aqn", "n", "skipped"])
    for value, agg in table:
        writer.writerow(
            [value, _fmt(agg["fr"]), _fmt(agg["aoa"]), _fmt(agg["aoa_star"]),
             _fmt(agg["aqn"]), agg["n"], agg["skipped"]]
        )
    print(json.dumps({"axis": args.axis, "values": values_raw, "seed": cfg.seed},
                     sort_keys=True))
    return EXIT_OK


def _cmd_export(args) -> int:
    video = Path(args.video)
    if not video.is_file():
        raise UsageError(f"video not found: {video}")
    paths = export_frames(load_video(video), args.out)
    print(json.dumps({"frames": [str(p) for p in paths]}, sort_keys=True))
    return EXIT_OK


def _cmd_serve_check(args) -> int:
    if not args.oracle.startswith("cmd:"):
        raise UsageError("serve-check needs --oracle cmd:<command line>")
    oracle = SubprocessOracle(
        shlex.split(args.oracle[4:]), timeout=args.oracle_timeout
    )
    try:
        print(json.dumps({"K": oracle.classes, "dims": list(oracle.dims)},
                         sort_keys=True))
    finally:
        oracle.close()
    return EXIT_OK


_COMMANDS = {
    "attack": _cmd_attack,
    "eval": _cmd_eval,
    "grid": _cmd_grid,
    "export": _cmd_export,
    "serve-check": _cmd_serve_check,
}


def run(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(levelname)s %(message)s", force=True)
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, CleanMisclassified, VtenError, AtlasError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except (OracleError, AttackAborted, OSError) as exc:
        log.error("%s", exc)
        return EXIT_RUNTIME


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
