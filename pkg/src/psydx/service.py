"""Reward-scoring service: the same request handlers behind an HTTP app and
a stdin/stdout JSONL loop.

Inbound floats are plain JSON numbers; every outbound real value is a
canonical 17-significant-digit decimal string, so clients on any runtime can
compare values bit-exactly.
"""

from __future__ import annotations

import json
import sys
from typing import Any, TextIO

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .config import AppConfig, trainer_manifest
from .errors import PsydxError, SchemaError
from .rewards import (
    ClipParams,
    GoldLabels,
    RewardBreakdown,
    StageWeights,
    clipped_objective,
    schedule_weights,
    score_group,
    score_trajectory,
)
from .wire import canonical17, canonical17_list, dumps_line


def _require_number(value: Any, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{what} must be a number")
    return float(value)


def _parse_gold(doc: Any) -> GoldLabels:
    if not isinstance(doc, dict):
        raise SchemaError("gold must be an object with category and disorder")
    category = doc.get("category")
    disorder = doc.get("disorder")
    if not isinstance(category, str) or not isinstance(disorder, str):
        raise SchemaError("gold.category and gold.disorder must be strings")
    return GoldLabels(category=category, disorder=disorder)


def _parse_trajectory(doc: Any) -> dict[str, Any]:
    if not isinstance(doc, dict):
        raise SchemaError("trajectory must be an object")
    category = doc.get("category")
    if category is not None and not isinstance(category, str):
        raise SchemaError("trajectory.category must be a string or null")
    candidates = doc.get("candidates")
    if candidates is not None:
        if not isinstance(candidates, list) or not all(
            isinstance(c, str) for c in candidates
        ):
            raise SchemaError("trajectory.candidates must be a list of strings")
    final = doc.get("final")
    if final is not None and not isinstance(final, str):
        raise SchemaError("trajectory.final must be a string or null")
    return {"category": category, "candidates": candidates, "final": final}


def _resolve_weights(doc: dict[str, Any], config: AppConfig) -> StageWeights:
    has_weights = "weights" in doc
    has_epoch = "epoch" in doc
    if has_weights == has_epoch:
        raise SchemaError("give exactly one of 'weights' or 'epoch'")
    if has_weights:
        raw = doc["weights"]
        if not isinstance(raw, list) or len(raw) != 3:
            raise SchemaError("weights must be a list of three numbers")
        return StageWeights.from_ratios(
            [_require_number(w, "weights entry") for w in raw]
        )
    epoch = doc["epoch"]
    if isinstance(epoch, bool) or not isinstance(epoch, int):
        raise SchemaError("epoch must be an integer")
    reward = config.reward
    return schedule_weights(reward.phase_table, epoch, reward.total_epochs)


def _breakdown_obj(breakdown: RewardBreakdown) -> dict[str, Any]:
    return {
        "r_cat": canonical17(breakdown.r_cat),
        "r_hypo": canonical17(breakdown.r_hypo),
        "r_diff": canonical17(breakdown.r_diff),
        "weights": canonical17_list(breakdown.weights.as_tuple()),
        "composite": canonical17(breakdown.composite),
    }


def handle_score(doc: dict[str, Any], config: AppConfig) -> dict[str, Any]:
    trajectory = _parse_trajectory(doc.get("trajectory"))
    gold = _parse_gold(doc.get("gold"))
    weights = _resolve_weights(doc, config)
    breakdown = score_trajectory(trajectory, gold, weights)
    return {"id": doc.get("id"), "reward": _breakdown_obj(breakdown)}


def handle_group(doc: dict[str, Any], config: AppConfig) -> dict[str, Any]:
    raw = doc.get("trajectories")
    if not isinstance(raw, list) or not raw:
        raise SchemaError("trajectories must be a non-empty list")
    trajectories = [_parse_trajectory(t) for t in raw]
    gold = _parse_gold(doc.get("gold"))
    weights = _resolve_weights(doc, config)
    epsilon_norm = config.reward.epsilon_norm
    if "epsilon_norm" in doc:
        epsilon_norm = _require_number(doc["epsilon_norm"], "epsilon_norm")
    group, breakdowns = score_group(trajectories, gold, weights, epsilon_norm)
    objective = clipped_objective(
        [1.0] * len(group.rewards),
        group.advantages,
        ClipParams(epsilon_clip=config.reward.epsilon_clip),
    )
    return {
        "id": doc.get("id"),
        "rewards": canonical17_list(group.rewards),
        "advantages": canonical17_list(group.advantages),
        "breakdowns": [_breakdown_obj(b) for b in breakdowns],
        "objective_at_unit_ratios": canonical17(objective),
    }


def handle_objective(doc: dict[str, Any], config: AppConfig) -> dict[str, Any]:
    ratios = doc.get("ratios")
    advantages = doc.get("advantages")
    if not isinstance(ratios, list) or not isinstance(advantages, list):
        raise SchemaError("ratios and advantages must be lists of numbers")
    ratios = [_require_number(r, "ratio") for r in ratios]
    advantages = [_require_number(a, "advantage") for a in advantages]
    epsilon_clip = config.reward.epsilon_clip
    if "epsilon_clip" in doc:
        epsilon_clip = _require_number(doc["epsilon_clip"], "epsilon_clip")
    value = clipped_objective(ratios, advantages, ClipParams(epsilon_clip=epsilon_clip))
    return {"id": doc.get("id"), "objective": canonical17(value)}


def handle_request(doc: Any, config: AppConfig) -> dict[str, Any]:
    """Dispatch one request document by shape."""
    if not isinstance(doc, dict):
        raise SchemaError("request must be a JSON object")
    if "ratios" in doc:
        return handle_objective(doc, config)
    if "trajectories" in doc:
        return handle_group(doc, config)
    if "trajectory" in doc:
        return handle_score(doc, config)
    raise SchemaError(
        "request shape not recognized: need 'trajectory', 'trajectories', or 'ratios'"
    )


def build_app(config: AppConfig) -> FastAPI:
    app = FastAPI(title="reward scoring service", docs_url=None, redoc_url=None)

    async def _dispatch(request: Request, handler) -> JSONResponse:
        try:
            doc = await request.json()
        except json.JSONDecodeError:
            return JSONResponse(status_code=400, content={"error": "body is not JSON"})
        try:
            if not isinstance(doc, dict):
                raise SchemaError("request must be a JSON object")
            return JSONResponse(status_code=200, content=handler(doc, config))
        except (PsydxError, ValueError) as exc:
            return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.get("/healthz")
    async def healthz() -> dict[str, str]:
        return {"status": "ok"}

    @app.get("/v1/manifest")
    async def manifest() -> dict[str, Any]:
        return trainer_manifest(config)

    @app.post("/v1/score")
    async def score(request: Request) -> JSONResponse:
        return await _dispatch(request, handle_score)

    @app.post("/v1/group")
    async def group(request: Request) -> JSONResponse:
        return await _dispatch(request, handle_group)

    @app.post("/v1/objective")
    async def objective(request: Request) -> JSONResponse:
        return await _dispatch(request, handle_objective)

    return app


def serve_stdin(config: AppConfig, stdin: TextIO | None = None,
                stdout: TextIO | None = None) -> int:
    """One JSONL request per line in, one JSONL response per line out.

    Bad lines produce an error response and the loop continues; the order of
    responses matches the order of requests."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        request_id = None
        try:
            doc = json.loads(line)
            if isinstance(doc, dict):
                request_id = doc.get("id")
            response = handle_request(doc, config)
        except json.JSONDecodeError:
            response = {"id": None, "error": "line is not JSON"}
        except (PsydxError, ValueError) as exc:
            response = {"id": request_id, "error": str(exc)}
        stdout.write(dumps_line(response) + "\n")
        stdout.flush()
    return 0


def run_http(config: AppConfig) -> int:
    import uvicorn

    uvicorn.run(
        build_app(config),
        host=config.service.host,
        port=config.service.port,
        log_level="warning",
    )
    return 0
