import { readFileSync } from "node:fs";
import process from "node:process";

import { RewardClient } from "./client.js";
import { ConnectionError, PreconditionError, ProtocolError } from "./errors.js";
import { demoGrpoStep } from "./grpoDemo.js";
import { parseJsonl } from "./jsonl.js";
import type { GroupRequest, ObjectiveRequest, ScoreRequest } from "./types.js";

const USAGE = `usage: trainer-adapter <command> [options]

commands:
  score-batch <requests.jsonl>   POST each line to the reward service and
                                 print the raw response bodies, one per line
  demo [--group-size N]          run one illustrative group-relative step
  health                         check the service is up

options:
  --endpoint URL    service base URL (default http://127.0.0.1:8765)
  --group-size N    demo group size (default 2)
`;

interface Args {
  command: string;
  positional: string[];
  endpoint: string;
  groupSize: number;
}

function parseArgs(argv: string[]): Args {
  let endpoint = "http://127.0.0.1:8765";
  let groupSize = 2;
  const positional: string[] = [];
  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i]!;
    if (arg === "--endpoint" || arg === "--group-size") {
      const value = argv[i + 1];
      if (value === undefined) {
        throw new PreconditionError(`${arg} needs a value`);
      }
      if (arg === "--endpoint") endpoint = value;
      else groupSize = Number(value);
      i += 1;
    } else if (arg.startsWith("--")) {
      throw new PreconditionError(`unknown option ${arg}`);
    } else {
      positional.push(arg);
    }
  }
  const command = positional.shift() ?? "";
  return { command, positional, endpoint, groupSize };
}

function routeLine(doc: unknown): "score" | "group" | "objective" {
  if (typeof doc === "object" && doc !== null && !Array.isArray(doc)) {
    const record = doc as Record<string, unknown>;
    if ("ratios" in record) return "objective";
    if ("trajectories" in record) return "group";
    if ("trajectory" in record) return "score";
  }
  throw new ProtocolError(
    "request line has no trajectory, trajectories, or ratios field",
  );
}

async function scoreBatchCommand(path: string, endpoint: string): Promise<void> {
  const client = new RewardClient(endpoint);
  const docs = parseJsonl(readFileSync(path, "utf-8"));
  for (const doc of docs) {
    const kind = routeLine(doc);
    const scored =
      kind === "score"
        ? await client.scoreOne(doc as ScoreRequest)
        : kind === "group"
          ? await client.scoreGroup(doc as GroupRequest)
          : await client.objective(doc as ObjectiveRequest);
    process.stdout.write(`${scored.raw}\n`);
  }
}

async function demoCommand(groupSize: number, endpoint: string): Promise<void> {
  const result = await demoGrpoStep(groupSize, endpoint);
  process.stdout.write(`rewards:    [${result.rewards.join(", ")}]\n`);
  process.stdout.write(`advantages: [${result.advantages.join(", ")}]\n`);
  process.stdout.write(`objective at unit ratios: ${result.objective}\n`);
  process.stdout.write(`response checksum: ${result.responseChecksum}\n`);
}

async function run(argv: string[]): Promise<number> {
  const args = parseArgs(argv);
  switch (args.command) {
    case "score-batch": {
      const path = args.positional[0];
      if (!path) {
        process.stderr.write(USAGE);
        return 2;
      }
      await scoreBatchCommand(path, args.endpoint);
      return 0;
    }
    case "demo":
      await demoCommand(args.groupSize, args.endpoint);
      return 0;
    case "health": {
      await new RewardClient(args.endpoint).health();
      process.stdout.write("ok\n");
      return 0;
    }
    default:
      process.stderr.write(USAGE);
      return 2;
  }
}

run(process.argv.slice(2)).then(
  (code) => process.exit(code),
  (err) => {
    if (
      err instanceof ConnectionError ||
      err instanceof ProtocolError ||
      err instanceof PreconditionError
    ) {
      process.stderr.write(`error: ${err.message}\n`);
      process.exit(1);
    }
    throw err;
  },
);
