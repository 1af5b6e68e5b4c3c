"""Text overlays: bitmap-font rasterization, drifting occlusion regions, alpha blending.

The pipeline is rasterize -> regions_for -> blend. Overlays drift one pixel
left per frame, so a placement is fully described by its frame-0 position and
one transparency byte. All three stages are pure functions over immutable
inputs and are deliberately integer-exact: candidate evaluation must be
reproducible bit for bit.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import fontdata
from .tensor_io import VideoClip

ALPHA_MIN = 127
ALPHA_MAX = 255
WHITE = (255, 255, 255)


class AtlasError(ValueError):
    """A font atlas file or rasterization request is invalid."""


@dataclass(frozen=True)
class Glyph:
    advance: int
    bitmap: np.ndarray  # bool, glyph_height x bitmap_width

    def __post_init__(self):
        object.__setattr__(self, "bitmap", np.asarray(self.bitmap, dtype=bool))
        if self.advance < self.bitmap.shape[1]:
            raise AtlasError(
                f"advance {self.advance} < bitmap width {self.bitmap.shape[1]}"
            )


@dataclass(frozen=True)
class FontAtlas:
    """Monochrome glyph bitmaps at a fixed base height, keyed by character."""

    name: str
    glyph_height: int
    glyphs: dict[str, Glyph]

    def __post_init__(self):
        if self.glyph_height < 1:
            raise AtlasError(f"glyph height must be >= 1, got {self.glyph_height}")
        for ch, g in self.glyphs.items():
            if g.bitmap.shape[0] != self.glyph_height:
                raise AtlasError(
                    f"glyph {ch!r} height {g.bitmap.shape[0]} != {self.glyph_height}"
                )
        missing = [chr(c) for c in range(0x20, 0x7F) if chr(c) not in self.glyphs]
        if missing:
            raise AtlasError(f"atlas missing printable ASCII: {missing[:5]}...")

    def __contains__(self, ch: str) -> bool:
        return ch in self.glyphs


@dataclass(frozen=True)
class GlyphMask:
    """Rasterized text: a boolean coverage grid, True = text pixel."""

    coverage: np.ndarray

    def __post_init__(self):
        cov = np.asarray(self.coverage, dtype=bool)
        cov.setflags(write=False)
        object.__setattr__(self, "coverage", cov)

    @property
    def height(self) -> int:
        return self.coverage.shape[0]

    @property
    def width(self) -> int:
        return self.coverage.shape[1]


@dataclass(frozen=True)
class BscPlacement:
    """Frame-0 position and transparency of one overlay.

    u may run off-frame on either side (the overlay drifts in and out);
    v keeps the text fully inside vertically; alpha 127 is half-transparent,
    255 fully opaque.
    """

    u: int
    v: int
    alpha: int


@functools.lru_cache(maxsize=1)
def default_atlas() -> FontAtlas:
    """The embedded 8x16 serif-style ASCII atlas."""
    glyphs = {}
    for ch in fontdata.charset():
        rows = fontdata.glyph_rows(ch)
        bitmap = np.array([[px == "#" for px in row] for row in rows], dtype=bool)
        glyphs[ch] = Glyph(advance=fontdata.GLYPH_WIDTH, bitmap=bitmap)
    return FontAtlas(
        name="DejaVuSerif-like", glyph_height=fontdata.GLYPH_HEIGHT, glyphs=glyphs
    )


def load_atlas(path) -> FontAtlas:
    """Parse a FATL atlas file (see save_atlas for the layout)."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise AtlasError("empty atlas file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "FATL":
        raise AtlasError(f"bad atlas header: {lines[0]!r}")
    if head[1] != "1":
        raise AtlasError(f"unsupported atlas version {head[1]}")
    try:
        height, count = int(head[2]), int(head[3])
    except ValueError as exc:
        raise AtlasError(f"bad atlas header: {lines[0]!r}") from exc
    glyphs = {}
    pos = 1
    for _ in range(count):
        if pos >= len(lines):
            raise AtlasError("truncated atlas: missing glyph record")
        fields = lines[pos].split()
        if len(fields) != 3:
            raise AtlasError(f"bad glyph record: {lines[pos]!r}")
        codepoint, advance, width = (int(f) for f in fields)
        pos += 1
        if pos + height > len(lines):
            raise AtlasError(f"truncated atlas: glyph {codepoint} rows missing")
        rows = lines[pos : pos + height]
        pos += height
        bitmap = np.zeros((height, width), dtype=bool)
        for r, row in enumerate(rows):
            if len(row) != width or set(row) - {"0", "1"}:
                raise AtlasError(f"bad bitmap row for glyph {codepoint}: {row!r}")
            bitmap[r] = [c == "1" for c in row]
        glyphs[chr(codepoint)] = Glyph(advance=advance, bitmap=bitmap)
    name = Path(path).stem
    return FontAtlas(name=name, glyph_height=height, glyphs=glyphs)


def save_atlas(atlas: FontAtlas, path) -> None:
    """Write a FATL file: header line, then per glyph a metrics line and
    glyph_height rows of '0'/'1'."""
    out = [f"FATL 1 {atlas.glyph_height} {len(atlas.glyphs)}"]
    for ch in sorted(atlas.glyphs):
        g = atlas.glyphs[ch]
        out.append(f"{ord(ch)} {g.advance} {g.bitmap.shape[1]}")
        for row in g.bitmap:
            out.append("".join("1" if px else "0" for px in row))
    Path(path).write_text("\n".join(out) + "\n", encoding="utf-8")


def get_atlas(spec: str) -> FontAtlas:
    """Resolve an atlas id: the embedded default's name, or a FATL file path."""
    if spec == default_atlas().name:
        return default_atlas()
    if Path(spec).is_file():
        return load_atlas(spec)
    raise AtlasError(f"unknown font {spec!r} (not the embedded atlas, not a file)")


def _scaled(value: int, target_h: int, base_h: int) -> int:
    # round-half-up keeps per-glyph error within one pixel of the exact ratio
    return (2 * value * target_h + base_h) // (2 * base_h)


def rasterize(text: str, atlas: FontAtlas, height: int) -> GlyphMask:
    """Lay out text left to right at the requested pixel height.

    Glyph bitmaps and advances are scaled from the atlas base height by
    nearest neighbor; total mask width is the sum of scaled advances.
    """
    if not text:
        raise AtlasError("empty text")
    if height < 1:
        raise AtlasError(f"font size must be >= 1, got {height}")
    unsupported = sorted({ch for ch in text if ch not in atlas.glyphs})
    if unsupported:
        raise AtlasError(f"characters not in atlas {atlas.name!r}: {unsupported}")
    base = atlas.glyph_height
    advances = [max(1, _scaled(atlas.glyphs[ch].advance, height, base)) for ch in text]
    total = sum(advances)
    grid = np.zeros((height, total), dtype=bool)
    pen = 0
    for ch, adv in zip(text, advances):
        bitmap = atlas.glyphs[ch].bitmap
        bw = bitmap.shape[1]
        sw = min(adv, _scaled(bw, height, base)) if bw else 0
        if sw > 0:
            rows = (np.arange(height) * base) // height
            cols = (np.arange(sw) * bw) // sw
            grid[:, pen : pen + sw] |= bitmap[np.ix_(rows, cols)]
        pen += adv
    return GlyphMask(grid)


@dataclass(frozen=True)
class RegionSet:
    """Per-frame occlusion state for a set of drifting overlays.

    owner[t, i, j] holds the index of the overlay covering that pixel
    (lowest index wins where candidates overlap) or -1. Bounding boxes are
    recorded unclipped at frame 0; uniform drift makes every later frame's
    box a pure horizontal translate.
    """

    owner: np.ndarray  # (T, H, W) int16
    boxes: tuple[tuple[int, int, int, int], ...]  # per overlay: (u, v, w, h)
    glyphs: tuple[GlyphMask, ...]

    def __post_init__(self):
        self.owner.setflags(write=False)

    @property
    def frames(self) -> int:
        return self.owner.shape[0]

    def mask(self, t: int) -> np.ndarray:
        return self.owner[t] >= 0

    def masks(self) -> np.ndarray:
        return self.owner >= 0

    def box_at(self, i: int, t: int) -> tuple[int, int, int, int]:
        u, v, w, h = self.boxes[i]
        return (u - t, v, w, h)

    def covered(self) -> int:
        return int((self.owner >= 0).sum())


def regions_for(
    placements: list[BscPlacement],
    glyphs: list[GlyphMask],
    frames: int,
    height: int,
    width: int,
) -> RegionSet:
    """Compute occlusion masks for every frame, drifting 1 px left per frame."""
    if len(placements) != len(glyphs):
        raise ValueError(
            f"{len(placements)} placements vs {len(glyphs)} glyph masks"
        )
    if not placements:
        raise ValueError("need at least one placement")
    for k, (pl, gm) in enumerate(zip(placements, glyphs)):
        if not -gm.width <= pl.u <= width:
            raise ValueError(f"placement {k}: u={pl.u} outside [{-gm.width}, {width}]")
        if not 0 <= pl.v <= height - gm.height:
            raise ValueError(
                f"placement {k}: v={pl.v} outside [0, {height - gm.height}]"
            )
        if not ALPHA_MIN <= pl.alpha <= ALPHA_MAX:
            raise ValueError(
                f"placement {k}: alpha={pl.alpha} outside [{ALPHA_MIN}, {ALPHA_MAX}]"
            )
    owner = np.full((frames, height, width), -1, dtype=np.int16)
    for k, (pl, gm) in enumerate(zip(placements, glyphs)):
        # drift means frame t sees columns [u-t, u-t+w): paint the glyph once
        # on a canvas wide enough for every frame, then stride a sliding
        # window over it - frame t's coverage is canvas[:, t : t + width]
        canvas = np.zeros((gm.height, width + frames - 1), dtype=bool)
        c0, c1 = max(pl.u, 0), min(pl.u + gm.width, canvas.shape[1])
        if c0 < c1:
            canvas[:, c0:c1] = gm.coverage[:, c0 - pl.u : c1 - pl.u]
        cov = np.lib.stride_tricks.sliding_window_view(canvas, width, axis=1)
        cov = np.moveaxis(cov, 1, 0)  # (T, h, W)
        strip = owner[:, pl.v : pl.v + gm.height, :]
        strip[cov & (strip == -1)] = k
    boxes = tuple(
        (pl.u, pl.v, gm.width, gm.height) for pl, gm in zip(placements, glyphs)
    )
    return RegionSet(owner=owner, boxes=boxes, glyphs=tuple(glyphs))


def blend(
    clip: VideoClip,
    regions: RegionSet,
    color: tuple[int, ...],
    alphas: list[int],
) -> VideoClip:
    """Alpha-blend the overlay color into the clip inside the occlusion regions.

    Inside a region the output pixel is (color*alpha + x*(255-alpha)) // 255
    with that overlay's alpha; outside, pixels pass through untouched. Pure
    integer arithmetic, floor division, input clip never mutated.
    """
    t, h, w, c = clip.shape
    if regions.owner.shape != (t, h, w):
        raise ValueError(
            f"regions computed for {regions.owner.shape}, clip is {(t, h, w)}"
        )
    if len(color) != c:
        raise ValueError(f"{len(color)}-channel color for a {c}-channel clip")
    if len(alphas) != len(regions.boxes):
        raise ValueError(f"{len(alphas)} alphas for {len(regions.boxes)} overlays")
    if any(not 0 <= a <= 255 for a in alphas):
        raise ValueError(f"alphas outside byte range: {alphas}")
    out = np.array(clip.data)
    flat_owner = regions.owner.ravel()
    idx = np.flatnonzero(flat_owner >= 0)
    if idx.size:
        alpha = np.asarray(alphas, dtype=np.int32)[flat_owner[idx], None]
        flat = out.reshape(-1, c)
        x = flat[idx].astype(np.int32)
        tint = np.asarray(color, dtype=np.int32)[None, :]
        flat[idx] = (tint * alpha + x * (255 - alpha)) // 255
    return VideoClip(out)
