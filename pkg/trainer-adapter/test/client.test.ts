import { readFileSync } from "node:fs";
import { dirname, resolve } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { RewardClient, type FetchLike } from "../src/client.js";
import { ConnectionError, ProtocolError } from "../src/errors.js";
import type { ScoreRequest } from "../src/types.js";

const REPO_ROOT = resolve(dirname(fileURLToPath(import.meta.url)), "../..");

const GOOD_SCORE_BODY = JSON.stringify({
  id: "ok",
  reward: {
    r_cat: "1.0000000000000000e0",
    r_hypo: "1.0000000000000000e0",
    r_diff: "1.0000000000000000e0",
    weights: [
      "5.0000000000000000e-1",
      "2.5000000000000000e-1",
      "2.5000000000000000e-1",
    ],
    composite: "1.0000000000000000e0",
  },
});

const SCORE_REQ: ScoreRequest = {
  trajectory: { category: "Mood disorders", candidates: ["6A70"], final: "6A70" },
  gold: { category: "Mood disorders", disorder: "6A70" },
  epoch: 0,
};

interface Call {
  url: string;
  body?: string;
}

function stubFetch(
  handler: (call: Call, n: number) => { status: number; text: string } | Error,
) {
  const calls: Call[] = [];
  const impl: FetchLike = async (url, init) => {
    const call: Call = { url, body: init?.body };
    calls.push(call);
    const out = handler(call, calls.length);
    if (out instanceof Error) throw out;
    return { status: out.status, text: async () => out.text };
  };
  return { impl, calls };
}

describe("scoreBatch", () => {
  it("replays the shared fixture in request order, byte for byte", async () => {
    const requests = readFileSync(
      resolve(REPO_ROOT, "fixtures/reward_requests.jsonl"),
      "utf-8",
    )
      .trim()
      .split("\n");
    const responses = readFileSync(
      resolve(REPO_ROOT, "fixtures/reward_responses.jsonl"),
      "utf-8",
    )
      .trim()
      .split("\n");
    const byId = new Map<string, string>();
    for (const line of responses) {
      byId.set((JSON.parse(line) as { id: string }).id, line);
    }
    const scoreLines = requests
      .map((line) => JSON.parse(line) as ScoreRequest & { id: string })
      .filter((doc) => "trajectory" in doc);
    expect(scoreLines).toHaveLength(8);

    const { impl, calls } = stubFetch((call) => {
      const id = (JSON.parse(call.body!) as { id: string }).id;
      return { status: 200, text: byId.get(id)! };
    });
    const client = new RewardClient("http://svc", impl);
    const scored = await client.scoreBatch(scoreLines);

    expect(calls.map((c) => c.url)).toEqual(
      Array(8).fill("http://svc/v1/score"),
    );
    scoreLines.forEach((req, i) => {
      expect(scored[i]!.response.id).toBe(req.id);
      expect(scored[i]!.raw).toBe(byId.get(req.id));
    });
  });

  it("retries a transport failure once, then succeeds", async () => {
    const { impl, calls } = stubFetch((_call, n) =>
      n === 1 ? new TypeError("fetch failed") : { status: 200, text: GOOD_SCORE_BODY },
    );
    const client = new RewardClient("http://svc", impl);
    const scored = await client.scoreOne(SCORE_REQ);
    expect(scored.response.reward.composite).toBe("1.0000000000000000e0");
    expect(calls).toHaveLength(2);
  });

  it("raises ConnectionError after the second transport failure", async () => {
    const { impl, calls } = stubFetch(() => new TypeError("fetch failed"));
    const client = new RewardClient("http://svc", impl);
    await expect(client.scoreOne(SCORE_REQ)).rejects.toBeInstanceOf(
      ConnectionError,
    );
    expect(calls).toHaveLength(2);
  });

  it("does not retry a service-side rejection", async () => {
    const { impl, calls } = stubFetch(() => ({
      status: 400,
      text: '{"error":"give exactly one of \'weights\' or \'epoch\'"}',
    }));
    const client = new RewardClient("http://svc", impl);
    await expect(client.scoreOne(SCORE_REQ)).rejects.toThrowError(
      /weights' or 'epoch/,
    );
    expect(calls).toHaveLength(1);
  });
});

describe("response validation", () => {
  async function expectProtocolError(body: string) {
    const { impl } = stubFetch(() => ({ status: 200, text: body }));
    const client = new RewardClient("http://svc", impl);
    await expect(client.scoreOne(SCORE_REQ)).rejects.toBeInstanceOf(
      ProtocolError,
    );
  }

  it("rejects a non-JSON body", async () => {
    await expectProtocolError("<html>proxy error</html>");
  });

  it("rejects numeric reward fields", async () => {
    const doc = JSON.parse(GOOD_SCORE_BODY);
    doc.reward.composite = 1.0;
    await expectProtocolError(JSON.stringify(doc));
  });

  it("rejects non-canonical float strings", async () => {
    const doc = JSON.parse(GOOD_SCORE_BODY);
    doc.reward.composite = "0.125";
    await expectProtocolError(JSON.stringify(doc));
  });

  it("rejects a group response with mismatched lengths", async () => {
    const body = JSON.stringify({
      id: null,
      rewards: ["1.0000000000000000e0", "0.0000000000000000e0"],
      advantages: ["0.0000000000000000e0"],
      breakdowns: [],
      objective_at_unit_ratios: "0.0000000000000000e0",
    });
    const { impl } = stubFetch(() => ({ status: 200, text: body }));
    const client = new RewardClient("http://svc", impl);
    await expect(
      client.scoreGroup({
        trajectories: [{}],
        gold: { category: "Catatonia", disorder: "6A40" },
        epoch: 0,
      }),
    ).rejects.toBeInstanceOf(ProtocolError);
  });
});

describe("health and manifest", () => {
  it("accepts the healthy status", async () => {
    const { impl, calls } = stubFetch(() => ({
      status: 200,
      text: '{"status":"ok"}',
    }));
    await new RewardClient("http://svc/", impl).health();
    expect(calls[0]!.url).toBe("http://svc/healthz");
    expect(calls[0]!.body).toBeUndefined();
  });

  it("returns the manifest document", async () => {
    const { impl } = stubFetch(() => ({
      status: 200,
      text: '{"passthrough":{"kl_coeff":0.001},"reward":{}}',
    }));
    const manifest = await new RewardClient("http://svc", impl).manifest();
    expect(
      (manifest.passthrough as Record<string, unknown>).kl_coeff,
    ).toBe(0.001);
  });
});
