/**
 * Deterministic frame-0 captions.
 *
 * No vision model here: the caption is a template sentence assembled from
 * first-frame statistics (brightness, edge density, dominant channel). The
 * engine only needs a stable string per clip to render as overlay text.
 */

import { Dims } from "./models.js";

const BRIGHTNESS = ["a dark", "a dim", "a bright"];
const BUSYNESS = ["calm", "textured", "busy"];
const TINT = ["red-tinted", "green-tinted", "blue-tinted", "gray"];

function bucket(value: number, edges: [number, number]): number {
  return value < edges[0] ? 0 : value < edges[1] ? 1 : 2;
}

export function captionFrame(payload: Uint8Array, dims: Dims): string {
  const [, height, width, channels] = dims;
  const frame = payload.subarray(0, height * width * channels);
  let sum = 0;
  const channelSums = new Array(channels).fill(0);
  for (let i = 0; i < frame.length; i++) {
    sum += frame[i];
    channelSums[i % channels] += frame[i];
  }
  const mean = frame.length ? sum / frame.length : 0;

  // horizontal gradient magnitude on the grayscale frame as edge density
  let edges = 0;
  for (let r = 0; r < height; r++) {
    for (let c = 1; c < width; c++) {
      let a = 0;
      let b = 0;
      for (let ch = 0; ch < channels; ch++) {
        a += frame[(r * width + c) * channels + ch];
        b += frame[(r * width + c - 1) * channels + ch];
      }
      if (Math.abs(a - b) > 24 * channels) edges++;
    }
  }
  const edgeRatio = edges / (height * Math.max(width - 1, 1));

  let tint = TINT.length - 1;
  if (channels === 3) {
    const top = Math.max(...channelSums);
    const rest = channelSums.filter((s) => s !== top);
    if (rest.every((s) => top > 1.15 * s)) {
      tint = channelSums.indexOf(top);
    }
  }
  const b = BRIGHTNESS[bucket(mean, [70, 150])];
  const busy = BUSYNESS[bucket(edgeRatio, [0.02, 0.12])];
  return `${b} ${busy} ${TINT[tint]} scene`;
}
