/**
 * FATL bitmap-atlas generation from TrueType fonts.
 *
 * Glyph outlines come from opentype.js; rasterization is a 4x4-supersampled
 * nonzero-winding scanline fill, binarized at 50% coverage. Advance widths
 * come straight from the font's metrics scaled to the requested pixel
 * height; outline parts that overhang the advance box are clipped so the
 * atlas keeps advance >= bitmap width (the engine's invariant). Characters
 * the font lacks get a hollow tofu box and a warning on stderr.
 */

import { promises as fs } from "node:fs";
import opentype from "opentype.js";

const SS = 4; // supersamples per axis
const FIRST = 0x20;
const LAST = 0x7e;

interface Segment {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

function flattenPath(path: opentype.Path): Segment[] {
  const segments: Segment[] = [];
  let cx = 0;
  let cy = 0;
  let sx = 0;
  let sy = 0;
  const lineTo = (x: number, y: number) => {
    if (x !== cx || y !== cy) segments.push({ x0: cx, y0: cy, x1: x, y1: y });
    cx = x;
    cy = y;
  };
  for (const cmd of path.commands) {
    switch (cmd.type) {
      case "M":
        cx = sx = cmd.x;
        cy = sy = cmd.y;
        break;
      case "L":
        lineTo(cmd.x, cmd.y);
        break;
      case "Q": {
        const steps = 8;
        for (let i = 1; i <= steps; i++) {
          const t = i / steps;
          const mt = 1 - t;
          lineTo(
            mt * mt * cx + 2 * mt * t * cmd.x1 + t * t * cmd.x,
            mt * mt * cy + 2 * mt * t * cmd.y1 + t * t * cmd.y
          );
        }
        break;
      }
      case "C": {
        const steps = 12;
        const [p0x, p0y] = [cx, cy];
        for (let i = 1; i <= steps; i++) {
          const t = i / steps;
          const mt = 1 - t;
          lineTo(
            mt ** 3 * p0x + 3 * mt * mt * t * cmd.x1 + 3 * mt * t * t * cmd.x2 + t ** 3 * cmd.x,
            mt ** 3 * p0y + 3 * mt * mt * t * cmd.y1 + 3 * mt * t * t * cmd.y2 + t ** 3 * cmd.y
          );
        }
        break;
      }
      case "Z":
        lineTo(sx, sy);
        break;
    }
  }
  return segments;
}

/** Nonzero-winding coverage of a pixel grid by the flattened outline. */
function rasterize(segments: Segment[], width: number, height: number): boolean[][] {
  const coverage: number[][] = Array.from({ length: height }, () =>
    new Array(width).fill(0)
  );
  for (let sub = 0; sub < height * SS; sub++) {
    const y = (sub + 0.5) / SS;
    // directed crossings of the scanline
    const crossings: { x: number; dir: number }[] = [];
    for (const s of segments) {
      if (s.y0 === s.y1) continue;
      const [lo, hi] = s.y0 < s.y1 ? [s.y0, s.y1] : [s.y1, s.y0];
      if (y < lo || y >= hi) continue;
      const t = (y - s.y0) / (s.y1 - s.y0);
      crossings.push({ x: s.x0 + t * (s.x1 - s.x0), dir: s.y1 > s.y0 ? 1 : -1 });
    }
    if (!crossings.length) continue;
    crossings.sort((a, b) => a.x - b.x);
    const row = coverage[Math.floor(sub / SS)];
    const fill = (from: number, to: number) => {
      from = Math.max(0, from);
      to = Math.min(width, to);
      if (to <= from) return;
      const firstSub = Math.ceil(from * SS - 0.5);
      const lastSub = Math.floor(to * SS - 0.5 - 1e-9);
      for (let sx = firstSub; sx <= lastSub; sx++) {
        const px = Math.floor((sx + 0.5) / SS);
        if (px >= 0 && px < width) row[px]++;
      }
    };
    let winding = 0;
    let spanStart = 0;
    for (const c of crossings) {
      const wasInside = winding !== 0;
      winding += c.dir;
      if (!wasInside && winding !== 0) {
        spanStart = c.x;
      } else if (wasInside && winding === 0) {
        fill(spanStart, c.x);
      }
    }
  }
  return coverage.map((row) => row.map((hits) => hits >= (SS * SS) / 2));
}

function tofuBox(width: number, height: number): boolean[][] {
  const grid = Array.from({ length: height }, () => new Array(width).fill(false));
  const top = Math.max(1, Math.floor(height * 0.15));
  const bottom = Math.min(height - 2, Math.floor(height * 0.8));
  for (let c = 1; c < width - 1; c++) {
    grid[top][c] = grid[bottom][c] = true;
  }
  for (let r = top; r <= bottom; r++) {
    grid[r][1] = grid[r][width - 2] = true;
  }
  return grid;
}

export interface AtlasGlyph {
  codepoint: number;
  advance: number;
  bitmap: boolean[][];
}

export async function buildAtlas(ttfPath: string, height: number): Promise<AtlasGlyph[]> {
  const data = await fs.readFile(ttfPath);
  const font = opentype.parse(
    data.buffer.slice(data.byteOffset, data.byteOffset + data.byteLength)
  );
  const scale = height / font.unitsPerEm;
  const baseline = Math.round((font.ascender / font.unitsPerEm) * height * 0.92);
  const glyphs: AtlasGlyph[] = [];
  for (let code = FIRST; code <= LAST; code++) {
    const ch = String.fromCodePoint(code);
    const index = font.charToGlyphIndex(ch);
    const glyph = font.glyphs.get(index > 0 ? index : 0);
    const advance = Math.max(1, Math.round((glyph.advanceWidth ?? 0) * scale));
    if (index === 0 && code !== 0x20) {
      process.stderr.write(
        `warning: font has no glyph for ${JSON.stringify(ch)}; using tofu box\n`
      );
      glyphs.push({ codepoint: code, advance, bitmap: tofuBox(advance, height) });
      continue;
    }
    const path = glyph.getPath(0, baseline, height);
    const segments = flattenPath(path);
    const bitmap = segments.length
      ? rasterize(segments, advance, height)
      : Array.from({ length: height }, () => new Array(0).fill(false));
    const width = bitmap[0]?.length ?? 0;
    glyphs.push({
      codepoint: code,
      advance: Math.max(advance, width),
      bitmap,
    });
  }
  return glyphs;
}

export function formatAtlas(glyphs: AtlasGlyph[], height: number): string {
  const lines = [`FATL 1 ${height} ${glyphs.length}`];
  for (const g of glyphs.slice().sort((a, b) => a.codepoint - b.codepoint)) {
    const width = g.bitmap[0]?.length ?? 0;
    lines.push(`${g.codepoint} ${g.advance} ${width}`);
    for (const row of g.bitmap) {
      lines.push(row.map((px) => (px ? "1" : "0")).join(""));
    }
  }
  return lines.join("\n") + "\n";
}

export async function makeAtlas(
  ttfPath: string,
  height: number,
  outPath: string
): Promise<void> {
  const glyphs = await buildAtlas(ttfPath, height);
  await fs.writeFile(outPath, formatAtlas(glyphs, height), "utf-8");
}
