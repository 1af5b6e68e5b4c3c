/**
 * Line-delimited JSON oracle protocol over stdin/stdout.
 *
 * One JSON object per line in both directions; replies carry the request id;
 * malformed or unknown requests get a typed error reply, never a crash.
 * The `caption` message is an extension: it describes frame 0 of the
 * shipped payload so the engine can use the text as overlay content.
 */

import * as readline from "node:readline";
import { Model, Dims } from "./models.js";
import { captionFrame } from "./caption.js";

interface Request {
  id?: number;
  type?: string;
  dims?: number[];
  data_b64?: string;
}

export interface ServeOptions {
  model: Model;
  dims: Dims;
  caption: boolean;
  input?: NodeJS.ReadableStream;
  output?: NodeJS.WritableStream;
}

function decodePayload(req: Request, expected: Dims): Uint8Array {
  const dims = req.dims;
  if (!Array.isArray(dims) || dims.length !== 4) {
    throw new Error(`dims must be [T,H,W,C], got ${JSON.stringify(dims)}`);
  }
  if (dims.some((d, i) => d !== expected[i])) {
    throw new Error(`dims ${dims} do not match served dims ${expected}`);
  }
  if (typeof req.data_b64 !== "string") {
    throw new Error("missing data_b64");
  }
  const payload = Buffer.from(req.data_b64, "base64");
  const need = expected.reduce((a, b) => a * b, 1);
  if (payload.length !== need) {
    throw new Error(`payload is ${payload.length} bytes, expected ${need}`);
  }
  return new Uint8Array(payload);
}

export function serve(options: ServeOptions): Promise<void> {
  const input = options.input ?? process.stdin;
  const output = options.output ?? process.stdout;
  const rl = readline.createInterface({ input, terminal: false });

  const send = (reply: Record<string, unknown>) => {
    output.write(JSON.stringify(reply) + "\n");
  };

  rl.on("line", async (line) => {
    if (!line.trim()) return;
    let req: Request;
    try {
      req = JSON.parse(line);
    } catch {
      send({ id: null, type: "error", message: "request is not valid JSON" });
      return;
    }
    const id = req.id ?? null;
    try {
      switch (req.type) {
        case "hello":
          send({ id, type: "hello", K: options.model.classes, dims: options.dims });
          break;
        case "predict": {
          const payload = decodePayload(req, options.dims);
          const probs = await options.model.predict(payload, options.dims);
          send({ id, type: "prediction", probs });
          break;
        }
        case "caption": {
          if (!options.caption) {
            throw new Error("captioning is not enabled (start with --caption)");
          }
          const payload = decodePayload(req, options.dims);
          send({ id, type: "caption", text: captionFrame(payload, options.dims) });
          break;
        }
        default:
          throw new Error(`unknown request type ${JSON.stringify(req.type)}`);
      }
    } catch (err) {
      send({ id, type: "error", message: err instanceof Error ? err.message : String(err) });
    }
  });

  return new Promise((resolve) => rl.on("close", () => resolve()));
}
