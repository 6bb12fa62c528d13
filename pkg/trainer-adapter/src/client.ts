import { ConnectionError, ProtocolError } from "./errors.js";
import {
  asGroupResponse,
  asObjectiveResponse,
  asScoreResponse,
  type GroupRequest,
  type GroupResponse,
  type ObjectiveRequest,
  type ObjectiveResponse,
  type ScoreRequest,
  type ScoreResponse,
} from "./types.js";

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ status: number; text(): Promise<string> }>;

/**
 * A response together with the exact bytes the service sent. Callers that
 * need bit-exact comparison use `raw`; the parsed view is for field access.
 */
export interface Scored<T> {
  response: T;
  raw: string;
}

export class RewardClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? (globalThis.fetch as unknown as FetchLike);
  }

  /** One retry on transport failure; the scoring service is stateless. */
  private async request(path: string, body?: string): Promise<string> {
    const url = `${this.baseUrl}${path}`;
    const init =
      body === undefined
        ? undefined
        : {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body,
          };
    let lastFailure: unknown;
    for (let attempt = 0; attempt < 2; attempt += 1) {
      let status: number;
      let text: string;
      try {
        const res = await this.fetchImpl(url, init);
        status = res.status;
        text = await res.text();
      } catch (err) {
        lastFailure = err;
        continue;
      }
      if (status < 200 || status >= 300) {
        throw new ProtocolError(`service answered ${status} for ${path}: ${text}`);
      }
      return text;
    }
    throw new ConnectionError(`cannot reach reward service at ${url}`, {
      cause: lastFailure,
    });
  }

  private parse(raw: string, path: string): unknown {
    try {
      return JSON.parse(raw);
    } catch {
      throw new ProtocolError(`response from ${path} is not JSON: ${raw.slice(0, 120)}`);
    }
  }

  async health(): Promise<void> {
    const raw = await this.request("/healthz");
    const doc = this.parse(raw, "/healthz");
    if (
      typeof doc !== "object" ||
      doc === null ||
      (doc as { status?: unknown }).status !== "ok"
    ) {
      throw new ProtocolError(`unexpected health response: ${raw}`);
    }
  }

  async manifest(): Promise<Record<string, unknown>> {
    const raw = await this.request("/v1/manifest");
    const doc = this.parse(raw, "/v1/manifest");
    if (typeof doc !== "object" || doc === null || Array.isArray(doc)) {
      throw new ProtocolError(`unexpected manifest response: ${raw.slice(0, 120)}`);
    }
    return doc as Record<string, unknown>;
  }

  async scoreOne(request: ScoreRequest): Promise<Scored<ScoreResponse>> {
    const raw = await this.request("/v1/score", JSON.stringify(request));
    return { response: asScoreResponse(this.parse(raw, "/v1/score")), raw };
  }

  /** Scores sequentially; response order always matches request order. */
  async scoreBatch(requests: ScoreRequest[]): Promise<Scored<ScoreResponse>[]> {
    const scored: Scored<ScoreResponse>[] = [];
    for (const request of requests) {
      scored.push(await this.scoreOne(request));
    }
    return scored;
  }

  async scoreGroup(request: GroupRequest): Promise<Scored<GroupResponse>> {
    const raw = await this.request("/v1/group", JSON.stringify(request));
    return { response: asGroupResponse(this.parse(raw, "/v1/group")), raw };
  }

  async objective(request: ObjectiveRequest): Promise<Scored<ObjectiveResponse>> {
    const raw = await this.request("/v1/objective", JSON.stringify(request));
    return {
      response: asObjectiveResponse(this.parse(raw, "/v1/objective")),
      raw,
    };
  }
}
