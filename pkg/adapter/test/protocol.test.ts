import { describe, expect, it } from "vitest";
import { spawn, ChildProcess } from "node:child_process";
import * as readline from "node:readline";
import { fileURLToPath } from "node:url";
import path from "node:path";

const MAIN = path.join(
  path.dirname(fileURLToPath(import.meta.url)),
  "..",
  "dist",
  "main.js"
);

class Client {
  private proc: ChildProcess;
  private lines: Promise<string>[] = [];
  private resolvers: ((line: string) => void)[] = [];
  private nextId = 0;

  constructor(args: string[]) {
    this.proc = spawn("node", [MAIN, ...args], {
      stdio: ["pipe", "pipe", "inherit"],
    });
    const rl = readline.createInterface({ input: this.proc.stdout! });
    rl.on("line", (line) => {
      const resolver = this.resolvers.shift();
      if (resolver) resolver(line);
    });
  }

  sendRaw(text: string): Promise<any> {
    const reply = new Promise<string>((resolve) => this.resolvers.push(resolve));
    this.proc.stdin!.write(text + "\n");
    return reply.then((line) => JSON.parse(line));
  }

  send(payload: Record<string, unknown>): Promise<any> {
    return this.sendRaw(JSON.stringify({ id: this.nextId++, ...payload }));
  }

  close() {
    this.proc.stdin!.end();
    this.proc.kill();
  }
}

const DIMS = [2, 4, 4, 3];
const BYTES = DIMS.reduce((a, b) => a * b, 1);

function clipB64(value: number): string {
  return Buffer.from(new Uint8Array(BYTES).fill(value)).toString("base64");
}

describe("oracle protocol", () => {
  it("answers hello with K and dims", async () => {
    const client = new Client([
      "serve", "--model", "identity", "--classes", "7", "--dims", "2,4,4,3",
    ]);
    try {
      const reply = await client.send({ type: "hello" });
      expect(reply.type).toBe("hello");
      expect(reply.K).toBe(7);
      expect(reply.dims).toEqual(DIMS);
    } finally {
      client.close();
    }
  });

  it("predicts with probabilities summing to one", async () => {
    const client = new Client([
      "serve", "--model", "intensity", "--classes", "5", "--dims", "2,4,4,3",
    ]);
    try {
      const reply = await client.send({
        type: "predict",
        dims: DIMS,
        data_b64: clipB64(90),
      });
      expect(reply.type).toBe("prediction");
      expect(reply.probs).toHaveLength(5);
      const total = reply.probs.reduce((a: number, b: number) => a + b, 0);
      expect(Math.abs(total - 1)).toBeLessThan(1e-6);
      const other = await client.send({
        type: "predict",
        dims: DIMS,
        data_b64: clipB64(200),
      });
      expect(other.probs).not.toEqual(reply.probs);
    } finally {
      client.close();
    }
  });

  it("serves a fixed identity vector", async () => {
    const client = new Client([
      "serve", "--model", "identity:0.5,0.25,0.25", "--dims", "2,4,4,3",
    ]);
    try {
      const hello = await client.send({ type: "hello" });
      expect(hello.K).toBe(3);
      const reply = await client.send({
        type: "predict",
        dims: DIMS,
        data_b64: clipB64(1),
      });
      expect(reply.probs).toEqual([0.5, 0.25, 0.25]);
    } finally {
      client.close();
    }
  });

  it("captions frame zero deterministically", async () => {
    const client = new Client([
      "serve", "--model", "identity", "--dims", "2,4,4,3", "--caption",
    ]);
    try {
      const a = await client.send({ type: "caption", dims: DIMS, data_b64: clipB64(200) });
      const b = await client.send({ type: "caption", dims: DIMS, data_b64: clipB64(200) });
      expect(a.type).toBe("caption");
      expect(typeof a.text).toBe("string");
      expect(a.text.length).toBeGreaterThan(0);
      expect(b.text).toBe(a.text);
    } finally {
      client.close();
    }
  });

  it("answers malformed requests with typed errors, not crashes", async () => {
    const client = new Client(["serve", "--model", "identity", "--dims", "2,4,4,3"]);
    try {
      const bad = await client.sendRaw("this is not json");
      expect(bad.type).toBe("error");

      const unknown = await client.send({ type: "transmogrify" });
      expect(unknown.type).toBe("error");
      expect(unknown.message).toContain("unknown");

      const wrongDims = await client.send({
        type: "predict",
        dims: [1, 1, 1, 1],
        data_b64: clipB64(0),
      });
      expect(wrongDims.type).toBe("error");

      const shortPayload = await client.send({
        type: "predict",
        dims: DIMS,
        data_b64: Buffer.from([1, 2, 3]).toString("base64"),
      });
      expect(shortPayload.type).toBe("error");

      // the server is still alive and answering
      const hello = await client.send({ type: "hello" });
      expect(hello.type).toBe("hello");
    } finally {
      client.close();
    }
  });

  it("echoes the request id on every reply", async () => {
    const client = new Client(["serve", "--model", "identity", "--dims", "2,4,4,3"]);
    try {
      const reply = await client.sendRaw(JSON.stringify({ id: 41, type: "hello" }));
      expect(reply.id).toBe(41);
    } finally {
      client.close();
    }
  });
});
