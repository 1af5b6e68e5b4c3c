/**
 * Model backends the server can wrap.
 *
 * `identity[:p1,p2,...]` returns a fixed probability vector regardless of
 * input (the integration-test double). `intensity` buckets the mean payload
 * byte through a softmax so predictions actually depend on the clip.
 * `module:<path>` dynamically imports a user model: the module must default-
 * export `{ classes, predict(payload, dims) }` returning K probabilities.
 */

export type Dims = [number, number, number, number];

export interface Model {
  classes: number;
  predict(payload: Uint8Array, dims: Dims): Promise<number[]> | number[];
}

function softmax(z: number[]): number[] {
  const top = Math.max(...z);
  const e = z.map((v) => Math.exp(v - top));
  const total = e.reduce((a, b) => a + b, 0);
  return e.map((v) => v / total);
}

function identityModel(spec: string, classes: number): Model {
  let probs: number[];
  const colon = spec.indexOf(":");
  if (colon >= 0) {
    probs = spec
      .slice(colon + 1)
      .split(",")
      .map((s) => Number(s));
    if (probs.some((p) => !Number.isFinite(p) || p < 0)) {
      throw new Error(`bad identity probabilities: ${spec}`);
    }
    const total = probs.reduce((a, b) => a + b, 0);
    probs = probs.map((p) => p / total);
  } else {
    probs = new Array(classes).fill(1 / classes);
  }
  return { classes: probs.length, predict: () => probs };
}

function intensityModel(classes: number): Model {
  return {
    classes,
    predict(payload: Uint8Array): number[] {
      let sum = 0;
      for (let i = 0; i < payload.length; i++) sum += payload[i];
      const mean = payload.length ? sum / payload.length : 0;
      const scores = [];
      for (let k = 0; k < classes; k++) {
        scores.push(((mean * (k + 1)) % 37) / 10);
      }
      return softmax(scores);
    },
  };
}

export async function loadModel(spec: string, classes: number): Promise<Model> {
  if (spec === "identity" || spec.startsWith("identity:")) {
    return identityModel(spec, classes);
  }
  if (spec === "intensity") {
    return intensityModel(classes);
  }
  if (spec.startsWith("module:")) {
    const path = spec.slice("module:".length);
    const mod = await import(new URL(`file://${path}`).href);
    const model: Model = mod.default;
    if (!model || typeof model.predict !== "function" || !model.classes) {
      throw new Error(`module ${path} does not export a model`);
    }
    return model;
  }
  throw new Error(
    `unknown model spec "${spec}": expected identity[:probs], intensity, or module:<path>`
  );
}
