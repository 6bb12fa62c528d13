import { createHash } from "node:crypto";

import { RewardClient, type FetchLike } from "./client.js";
import { PreconditionError, ProtocolError } from "./errors.js";
import type { GoldLabels, Trajectory } from "./types.js";

const DEMO_GOLD: GoldLabels = { category: "Mood disorders", disorder: "6A70" };

// Composite 1.0 under weights (0.5, 0.25, 0.25).
const PERFECT: Trajectory = {
  category: "Mood disorders",
  candidates: ["6A70"],
  final: "6A70",
};

// Wrong category, gold ranked third, wrong final: composite 0.125.
const POOR: Trajectory = {
  category: "Catatonia",
  candidates: ["6A60", "6A61", "6A70"],
  final: "6A60",
};

export interface DemoResult {
  rewards: string[];
  advantages: string[];
  /** Clipped objective at unit importance ratios, exactly as the service sent it. */
  objective: string;
  /** sha256 over the raw response bodies; recompute it to audit provenance. */
  responseChecksum: string;
  rawResponses: string[];
}

/**
 * One illustrative group-relative step: score a fabricated group, take the
 * service's advantages, and ask for the clipped objective at unit ratios.
 *
 * Nothing numeric happens on this side. The group response already carries
 * the unit-ratio objective; the explicit /v1/objective round trip only
 * cross-checks that the two service answers agree, string for string. The
 * advantages POSTed back are parsed from the service's own canonical
 * strings, which round-trip losslessly through a 64-bit float.
 */
export async function demoGrpoStep(
  groupSize: number,
  endpoint: string,
  options?: { uniform?: boolean; fetchImpl?: FetchLike },
): Promise<DemoResult> {
  if (!Number.isInteger(groupSize) || groupSize < 1) {
    throw new PreconditionError(
      `group size must be a positive integer, got ${groupSize}`,
    );
  }
  const client = new RewardClient(endpoint, options?.fetchImpl);
  const trajectories = Array.from({ length: groupSize }, (_, i) =>
    options?.uniform || i % 2 === 0 ? PERFECT : POOR,
  );
  const group = await client.scoreGroup({
    trajectories,
    gold: DEMO_GOLD,
    weights: [0.5, 0.25, 0.25],
  });
  const objective = await client.objective({
    ratios: Array.from({ length: groupSize }, () => 1),
    advantages: group.response.advantages.map(Number),
  });
  if (objective.response.objective !== group.response.objective_at_unit_ratios) {
    throw new ProtocolError(
      "service disagrees with itself at unit ratios: " +
        `${objective.response.objective} vs ${group.response.objective_at_unit_ratios}`,
    );
  }
  const rawResponses = [group.raw, objective.raw];
  return {
    rewards: group.response.rewards,
    advantages: group.response.advantages,
    objective: group.response.objective_at_unit_ratios,
    responseChecksum: checksumResponses(rawResponses),
    rawResponses,
  };
}

export function checksumResponses(rawResponses: string[]): string {
  const hash = createHash("sha256");
  for (const raw of rawResponses) {
    hash.update(raw);
    hash.update("\n");
  }
  return hash.digest("hex");
}
