/**
 * Wire documents for the reward-scoring service.
 *
 * Every float the service emits is a canonical decimal string with 17
 * significant digits (e.g. "1.2500000000000000e-1"). The types keep them as
 * strings on purpose: this client never turns a reported value back into a
 * number, so cross-language equality stays plain string equality.
 */

import { ProtocolError } from "./errors.js";

export interface GoldLabels {
  category: string;
  disorder: string;
}

export interface Trajectory {
  category?: string | null;
  candidates?: string[] | null;
  final?: string | null;
}

/** Exactly one of weights / epoch per request. */
export interface ScoreRequest {
  id?: string;
  trajectory: Trajectory;
  gold: GoldLabels;
  weights?: number[];
  epoch?: number;
}

export interface GroupRequest {
  id?: string;
  trajectories: Trajectory[];
  gold: GoldLabels;
  weights?: number[];
  epoch?: number;
  epsilon_norm?: number;
}

export interface ObjectiveRequest {
  id?: string;
  ratios: number[];
  advantages: number[];
  epsilon_clip?: number;
}

export interface RewardBreakdown {
  r_cat: string;
  r_hypo: string;
  r_diff: string;
  weights: string[];
  composite: string;
}

export interface ScoreResponse {
  id: string | null;
  reward: RewardBreakdown;
}

export interface GroupResponse {
  id: string | null;
  rewards: string[];
  advantages: string[];
  breakdowns: RewardBreakdown[];
  objective_at_unit_ratios: string;
}

export interface ObjectiveResponse {
  id: string | null;
  objective: string;
}

const CANONICAL_FLOAT = /^-?\d\.\d{16}e-?\d+$/;

export function isCanonicalFloat(value: unknown): value is string {
  return typeof value === "string" && CANONICAL_FLOAT.test(value);
}

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function isId(value: unknown): value is string | null {
  return value === null || typeof value === "string";
}

function isBreakdown(value: unknown): value is RewardBreakdown {
  if (!isRecord(value)) return false;
  const { r_cat, r_hypo, r_diff, weights, composite } = value;
  return (
    isCanonicalFloat(r_cat) &&
    isCanonicalFloat(r_hypo) &&
    isCanonicalFloat(r_diff) &&
    Array.isArray(weights) &&
    weights.length === 3 &&
    weights.every(isCanonicalFloat) &&
    isCanonicalFloat(composite)
  );
}

export function asScoreResponse(doc: unknown): ScoreResponse {
  if (isRecord(doc) && isId(doc.id) && isBreakdown(doc.reward)) {
    return doc as unknown as ScoreResponse;
  }
  throw schemaMismatch("score", doc);
}

export function asGroupResponse(doc: unknown): GroupResponse {
  if (
    isRecord(doc) &&
    isId(doc.id) &&
    Array.isArray(doc.rewards) &&
    doc.rewards.every(isCanonicalFloat) &&
    Array.isArray(doc.advantages) &&
    doc.advantages.every(isCanonicalFloat) &&
    doc.advantages.length === doc.rewards.length &&
    Array.isArray(doc.breakdowns) &&
    doc.breakdowns.every(isBreakdown) &&
    doc.breakdowns.length === doc.rewards.length &&
    isCanonicalFloat(doc.objective_at_unit_ratios)
  ) {
    return doc as unknown as GroupResponse;
  }
  throw schemaMismatch("group", doc);
}

export function asObjectiveResponse(doc: unknown): ObjectiveResponse {
  if (isRecord(doc) && isId(doc.id) && isCanonicalFloat(doc.objective)) {
    return doc as unknown as ObjectiveResponse;
  }
  throw schemaMismatch("objective", doc);
}

function schemaMismatch(kind: string, doc: unknown): ProtocolError {
  const shown = JSON.stringify(doc);
  const head = shown && shown.length > 200 ? `${shown.slice(0, 200)}...` : shown;
  return new ProtocolError(`schema mismatch in ${kind} response: ${head}`);
}
