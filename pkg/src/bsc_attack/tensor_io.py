"""Video tensors as dense byte arrays, plus deterministic binary persistence.

The on-disk container (.vten) is intentionally dumb: a fixed header followed by
the raw pixel payload, row-major ``[t][row][col][channel]``. Byte-exact round
trips are part of the contract, so no codec is involved anywhere.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

MAGIC = b"VTEN"
VERSION = 1
_HEADER = struct.Struct("<4sBIIII")  # magic | version | T H W C


class VtenError(ValueError):
    """A .vten file (or in-memory clip) violates the format contract."""


@dataclass(frozen=True)
class VideoClip:
    """Immutable T x H x W x C uint8 tensor.

    The pixel buffer is frozen on construction; every transform in the
    pipeline builds a new clip instead of mutating, so clips can be shared
    freely across concurrent readers.
    """

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.dtype != np.uint8:
            raise VtenError(f"clip pixels must be uint8, got {arr.dtype}")
        if arr.ndim != 4:
            raise VtenError(f"clip must be T x H x W x C, got shape {arr.shape}")
        t, h, w, c = arr.shape
        if t < 1 or h < 1 or w < 1:
            raise VtenError(f"zero dimension in clip shape {arr.shape}")
        if c not in (1, 3):
            raise VtenError(f"channel count must be 1 or 3, got {c}")
        if arr.flags.writeable or not arr.flags.c_contiguous:
            arr = np.ascontiguousarray(arr).copy()
            arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def shape(self) -> tuple[int, int, int, int]:
        return self.data.shape

    @property
    def frames(self) -> int:
        return self.data.shape[0]

    @property
    def height(self) -> int:
        return self.data.shape[1]

    @property
    def width(self) -> int:
        return self.data.shape[2]

    @property
    def channels(self) -> int:
        return self.data.shape[3]

    def __eq__(self, other):
        if not isinstance(other, VideoClip):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(
            np.array_equal(self.data, other.data)
        )


@dataclass(frozen=True)
class Label:
    """Ground-truth class index y within a K-class label space."""

    y: int
    classes: int

    def __post_init__(self):
        if self.classes < 2:
            raise ValueError(f"label space needs >= 2 classes, got {self.classes}")
        if not 0 <= self.y < self.classes:
            raise ValueError(f"label {self.y} outside [0, {self.classes})")


def load_video(path) -> VideoClip:
    """Parse a .vten file; raises VtenError naming the first violation found."""
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size:
        raise VtenError(f"truncated header: {len(raw)} bytes < {_HEADER.size}")
    magic, version, t, h, w, c = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise VtenError(f"bad magic {magic!r}")
    if version != VERSION:
        raise VtenError(f"unsupported version {version}")
    if t == 0 or h == 0 or w == 0 or c == 0:
        raise VtenError(f"zero dimension in header ({t}, {h}, {w}, {c})")
    if c not in (1, 3):
        raise VtenError(f"channel count must be 1 or 3, got {c}")
    need = t * h * w * c
    payload = raw[_HEADER.size :]
    if len(payload) < need:
        raise VtenError(f"truncated payload: {len(payload)} bytes < {need}")
    if len(payload) > need:
        raise VtenError(f"trailing bytes after payload: {len(payload) - need}")
    data = np.frombuffer(payload, dtype=np.uint8).reshape(t, h, w, c)
    return VideoClip(data)


def save_video(clip: VideoClip, path) -> None:
    """Write a clip as .vten; load_video(path) recovers an equal clip."""
    t, h, w, c = clip.shape
    header = _HEADER.pack(MAGIC, VERSION, t, h, w, c)
    Path(path).write_bytes(header + clip.data.tobytes())


def export_frames(clip: VideoClip, out_dir) -> list[Path]:
    """Dump each frame as binary PPM (P6, C=3) or PGM (P5, C=1), pixel-exact.

    Files are named frame_0000.ppm .. frame_NNNN.ppm (or .pgm) and are meant
    for eyeballing attack results with any image viewer.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ext = "ppm" if clip.channels == 3 else "pgm"
    tag = b"P6" if clip.channels == 3 else b"P5"
    header = tag + f"\n{clip.width} {clip.height}\n255\n".encode("ascii")
    paths = []
    for t in range(clip.frames):
        p = out / f"frame_{t:04d}.{ext}"
        p.write_bytes(header + clip.data[t].tobytes())
        paths.append(p)
    return paths
