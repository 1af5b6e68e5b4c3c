/**
 * Command-line entry point.
 *
 *   serve --model <spec> --dims T,H,W,C [--classes K] [--caption]
 *   make-atlas <font.ttf> <pixel-height> <out.fatl>
 *
 * `serve` speaks the line-JSON oracle protocol on stdin/stdout until the
 * pipe closes. Diagnostics go to stderr only.
 */

import { serve } from "./protocol.js";
import { loadModel, Dims } from "./models.js";
import { makeAtlas } from "./atlas.js";

function fail(message: string): never {
  process.stderr.write(`error: ${message}\n`);
  process.exit(2);
}

function flagValue(args: string[], name: string): string | undefined {
  const at = args.indexOf(name);
  if (at < 0) return undefined;
  if (at + 1 >= args.length) fail(`${name} needs a value`);
  return args[at + 1];
}

async function cmdServe(args: string[]): Promise<void> {
  const modelSpec = flagValue(args, "--model") ?? "identity";
  const dimsRaw = flagValue(args, "--dims") ?? "16,64,64,3";
  const classes = Number(flagValue(args, "--classes") ?? "10");
  const caption = args.includes("--caption");
  const dims = dimsRaw.split(",").map((d) => Number(d));
  if (dims.length !== 4 || dims.some((d) => !Number.isInteger(d) || d < 1)) {
    fail(`--dims must be four positive integers, got ${dimsRaw}`);
  }
  const model = await loadModel(modelSpec, classes);
  process.stderr.write(
    `serving ${modelSpec} (K=${model.classes}, dims=${dims.join("x")})\n`
  );
  await serve({ model, dims: dims as Dims, caption });
}

async function cmdMakeAtlas(args: string[]): Promise<void> {
  const [ttf, heightRaw, out] = args;
  if (!ttf || !heightRaw || !out) {
    fail("usage: make-atlas <font.ttf> <pixel-height> <out.fatl>");
  }
  const height = Number(heightRaw);
  if (!Number.isInteger(height) || height < 4) {
    fail(`glyph height must be an integer >= 4, got ${heightRaw}`);
  }
  await makeAtlas(ttf, height, out);
  process.stderr.write(`wrote ${out} at height ${height}\n`);
}

async function main(): Promise<void> {
  const [command, ...rest] = process.argv.slice(2);
  switch (command) {
    case "serve":
      await cmdServe(rest);
      break;
    case "make-atlas":
      await cmdMakeAtlas(rest);
      break;
    default:
      fail(`unknown command ${JSON.stringify(command)}: expected serve or make-atlas`);
  }
}

main().catch((err) => {
  process.stderr.write(`fatal: ${err instanceof Error ? err.stack : err}\n`);
  process.exit(3);
});
