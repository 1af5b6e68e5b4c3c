import { describe, expect, it } from "vitest";
import { existsSync } from "node:fs";
// the built output is tested: vitest's module interop disagrees with
// opentype.js's UMD bundle, while node's own loader (what the CLI uses)
// handles it fine
// @ts-expect-error importing the untyped build artifact
import { buildAtlas, formatAtlas } from "../dist/atlas.js";

const FONT_CANDIDATES = [
  "/usr/share/fonts/truetype/dejavu/DejaVuSerif.ttf",
  "/usr/share/fonts/truetype/dejavu/DejaVuSans.ttf",
  "/usr/local/lib/python3.10/dist-packages/matplotlib/mpl-data/fonts/ttf/DejaVuSerif.ttf",
];

const FONT = FONT_CANDIDATES.find((p) => existsSync(p));

describe.skipIf(!FONT)("atlas generation", () => {
  it("covers printable ASCII at the requested height", async () => {
    const glyphs = await buildAtlas(FONT!, 16);
    expect(glyphs).toHaveLength(0x7f - 0x20);
    for (const g of glyphs) {
      expect(g.bitmap).toHaveLength(16);
      const width = g.bitmap[0]?.length ?? 0;
      expect(g.advance).toBeGreaterThanOrEqual(width);
      expect(g.advance).toBeGreaterThanOrEqual(1);
    }
  });

  it("produces ink for visible characters and none for space", async () => {
    const glyphs = await buildAtlas(FONT!, 16);
    const byChar = new Map(glyphs.map((g) => [String.fromCodePoint(g.codepoint), g]));
    for (const ch of "AgW8#x") {
      const ink = byChar
        .get(ch)!
        .bitmap.flat()
        .filter(Boolean).length;
      expect(ink, `glyph ${ch}`).toBeGreaterThan(6);
    }
    const space = byChar.get(" ")!;
    expect(space.bitmap.flat().filter(Boolean)).toHaveLength(0);
  });

  it("serializes to the FATL layout", async () => {
    const glyphs = await buildAtlas(FONT!, 12);
    const text = formatAtlas(glyphs, 12);
    const lines = text.trimEnd().split("\n");
    expect(lines[0]).toBe(`FATL 1 12 ${glyphs.length}`);
    // second line is the first glyph record: codepoint advance width
    const [code, advance, width] = lines[1].split(" ").map(Number);
    expect(code).toBe(0x20);
    expect(advance).toBeGreaterThanOrEqual(width);
    // its bitmap rows follow, each exactly `width` wide
    for (let r = 0; r < 12; r++) {
      expect(lines[2 + r]).toHaveLength(width);
      expect(lines[2 + r]).toMatch(/^[01]*$/);
    }
  });

  it("capital letters are taller than their x-height partners", async () => {
    const glyphs = await buildAtlas(FONT!, 16);
    const byChar = new Map(glyphs.map((g) => [String.fromCodePoint(g.codepoint), g]));
    const inkRows = (ch: string) =>
      byChar.get(ch)!.bitmap.filter((row) => row.some(Boolean)).length;
    expect(inkRows("X")).toBeGreaterThan(inkRows("x"));
  });
});
