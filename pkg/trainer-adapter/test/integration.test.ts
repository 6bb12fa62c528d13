import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { readFileSync } from "node:fs";
import { createServer } from "node:net";
import { dirname, resolve } from "node:path";
import { fileURLToPath } from "node:url";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { RewardClient } from "../src/client.js";
import { ConnectionError } from "../src/errors.js";
import { checksumResponses, demoGrpoStep } from "../src/grpoDemo.js";
import type { GroupRequest, ScoreRequest } from "../src/types.js";

const REPO_ROOT = resolve(dirname(fileURLToPath(import.meta.url)), "../..");
const FIXTURE = resolve(REPO_ROOT, "fixtures/reward_requests.jsonl");

let server: ChildProcess;
let serverErr = "";
let endpoint: string;

function freePort(): Promise<number> {
  return new Promise((resolvePort, reject) => {
    const probe = createServer();
    probe.once("error", reject);
    probe.listen(0, "127.0.0.1", () => {
      const address = probe.address();
      if (address === null || typeof address === "string") {
        reject(new Error("no port assigned"));
        return;
      }
      probe.close(() => resolvePort(address.port));
    });
  });
}

async function waitForService(client: RewardClient): Promise<void> {
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      await client.health();
      return;
    } catch {
      if (Date.now() > deadline) {
        throw new Error(`reward service never came up\n${serverErr}`);
      }
      await new Promise((r) => setTimeout(r, 200));
    }
  }
}

beforeAll(async () => {
  const port = await freePort();
  endpoint = `http://127.0.0.1:${port}`;
  server = spawn(
    "python3",
    ["-m", "psydx.cli", "serve-rewards", "--port", String(port)],
    { cwd: REPO_ROOT, stdio: ["ignore", "ignore", "pipe"] },
  );
  server.stderr!.on("data", (chunk: Buffer) => {
    serverErr += chunk.toString();
  });
  await waitForService(new RewardClient(endpoint));
});

afterAll(() => {
  server?.kill();
});

describe("protocol equivalence against the primary engine", () => {
  it("HTTP responses match `score --batch` output byte for byte", async () => {
    const oracle = spawnSync(
      "python3",
      ["-m", "psydx.cli", "score", "--batch", FIXTURE],
      { cwd: REPO_ROOT, encoding: "utf-8" },
    );
    expect(oracle.status).toBe(0);
    const oracleLines = oracle.stdout.trim().split("\n");
    const requests = readFileSync(FIXTURE, "utf-8").trim().split("\n");
    expect(oracleLines).toHaveLength(requests.length);

    const client = new RewardClient(endpoint);
    for (let i = 0; i < requests.length; i += 1) {
      const doc = JSON.parse(requests[i]!) as Record<string, unknown>;
      const scored =
        "trajectories" in doc
          ? await client.scoreGroup(doc as unknown as GroupRequest)
          : await client.scoreOne(doc as unknown as ScoreRequest);
      expect(scored.raw).toBe(oracleLines[i]);
    }
  });

  it("matches the checked-in response fixture as well", async () => {
    const pinned = readFileSync(
      resolve(REPO_ROOT, "fixtures/reward_responses.jsonl"),
      "utf-8",
    )
      .trim()
      .split("\n");
    const requests = readFileSync(FIXTURE, "utf-8").trim().split("\n");
    const client = new RewardClient(endpoint);
    const scoreDocs = requests
      .map((line) => JSON.parse(line) as Record<string, unknown>)
      .filter((doc) => "trajectory" in doc) as unknown as ScoreRequest[];
    const scored = await client.scoreBatch(scoreDocs);
    scored.forEach((s, i) => {
      expect(s.raw).toBe(pinned[i]);
    });
  });
});

describe("live demo step", () => {
  it("prints the service's zero objective for the {1.0, 0.125} pair", async () => {
    const result = await demoGrpoStep(2, endpoint);
    expect(result.rewards).toEqual([
      "1.0000000000000000e0",
      "1.2500000000000000e-1",
    ]);
    expect(result.advantages).toEqual([
      "9.9977148080438760e-1",
      "-9.9977148080438760e-1",
    ]);
    expect(result.objective).toBe("0.0000000000000000e0");
    expect(checksumResponses(result.rawResponses)).toBe(result.responseChecksum);
  });

  it("gives a zero objective for an all-identical group", async () => {
    const result = await demoGrpoStep(4, endpoint, { uniform: true });
    expect(new Set(result.rewards).size).toBe(1);
    expect(result.advantages).toEqual(Array(4).fill("0.0000000000000000e0"));
    expect(result.objective).toBe("0.0000000000000000e0");
  });

  it("a single-trajectory group gets a zero advantage", async () => {
    const result = await demoGrpoStep(1, endpoint);
    expect(result.advantages).toEqual(["0.0000000000000000e0"]);
    expect(result.objective).toBe("0.0000000000000000e0");
  });
});

describe("failure surfaces", () => {
  it("service down maps to ConnectionError", async () => {
    const down = await freePort();
    const client = new RewardClient(`http://127.0.0.1:${down}`);
    await expect(
      demoGrpoStep(2, `http://127.0.0.1:${down}`),
    ).rejects.toBeInstanceOf(ConnectionError);
    await expect(client.health()).rejects.toBeInstanceOf(ConnectionError);
  });

  it("manifest carries the trainer passthrough block untouched", async () => {
    const manifest = await new RewardClient(endpoint).manifest();
    const passthrough = manifest.passthrough as Record<string, unknown>;
    expect(passthrough.sft_lr).toBe(5e-5);
    expect(passthrough.kl_coeff).toBe(0.001);
    expect(passthrough.discount).toBe(1.0);
  });
});
