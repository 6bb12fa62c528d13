"""Builds three-stage reasoning trajectories and filters them into an SFT
corpus.

A trajectory narrows stepwise: name the syndrome category, shortlist ranked
candidate disorders inside it, then differentiate down to one final code.
The SFT filter keeps only trajectories that are internally coherent and
agree with the record's gold labels; everything else lands in a rejection
report keyed by the first failing cause.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import prompts, wire
from .corpus import CaseRecord, Corpus
from .errors import (
    BackendRefusalError,
    MockScriptMissingError,
    StageParseError,
    TransportError,
)
from .gateway import CompletionRequest, Gateway
from .kb import KnowledgeBase

# First-failing-wins order for SFT rejection causes.
REJECTION_CAUSES = (
    "stage_unparseable",
    "duplicate_candidate",
    "undersized_hypothesis",
    "oversized_hypothesis",
    "out_of_category_candidate",
    "final_not_in_candidates",
    "gold_mismatch",
)

MIN_CANDIDATES = 2
MAX_CANDIDATES = 3

STAGE_MARKERS = (
    "[CATEGORY REASONING]",
    "[DISORDER REASONING]",
    "[DIFFERENTIAL REASONING]",
    "[FINAL ANSWER]",
)


@dataclass(frozen=True)
class CategoryStage:
    reasoning_text: str
    category: str


@dataclass(frozen=True)
class HypothesisStage:
    reasoning_text: str
    candidates: tuple[str, ...]


@dataclass(frozen=True)
class DifferentialStage:
    reasoning_text: str
    final_disorder: str


@dataclass(frozen=True)
class Trajectory:
    case_id: str
    stage1: CategoryStage
    stage2: HypothesisStage
    stage3: DifferentialStage
    complete: bool


@dataclass(frozen=True)
class SftExample:
    case_id: str
    input: str
    target: str


def _stage_doc(gateway: Gateway, template_id: str, bindings: dict[str, str],
               case_id: str, stage: int) -> dict[str, Any]:
    request = CompletionRequest(
        template_id=template_id, bindings=bindings, case_id=case_id
    )
    response = gateway.complete(request)
    doc = response.parsed_json
    if not isinstance(doc, dict):
        raise StageParseError(
            f"case {case_id!r}: stage {stage} response is not a JSON object",
            stage=stage, raw_text=response.raw_text,
        )
    return doc


def _require_text(doc: dict[str, Any], field: str, case_id: str, stage: int) -> str:
    value = doc.get(field)
    if not isinstance(value, str) or not value.strip():
        raise StageParseError(
            f"case {case_id!r}: stage {stage} missing field {field!r}",
            stage=stage, raw_text=json.dumps(doc, ensure_ascii=False),
        )
    return value


def _is_complete(traj_category: str, candidates: Sequence[str], final: str,
                 kb: KnowledgeBase) -> bool:
    if not kb.has_category(traj_category):
        return False
    members = {e.code.code for e in kb.disorders_of(traj_category)}
    if not candidates or any(c not in members for c in candidates):
        return False
    return final in candidates


def build_trajectory(record: CaseRecord, kb: KnowledgeBase,
                     gateway: Gateway) -> Trajectory:
    """Run the three stage prompts for one record, strictly in order.

    Stage prompts condition on the record's gold labels; stage 3 additionally
    sees stage 2's candidate list. Raises StageParseError when a stage lacks
    its required fields; incoherent but parseable stages only clear the
    complete flag.
    """
    doc1 = _stage_doc(
        gateway, "traj_category_reason",
        prompts.traj_category_bindings(record, kb), record.id, stage=1,
    )
    stage1 = CategoryStage(
        reasoning_text=_require_text(doc1, "category_reasoning", record.id, 1),
        category=_require_text(doc1, "diagnostic_category", record.id, 1),
    )

    doc2 = _stage_doc(
        gateway, "traj_disorder_reason",
        prompts.traj_disorder_bindings(record, kb), record.id, stage=2,
    )
    raw_candidates = doc2.get("candidate_disorders")
    if (
        not isinstance(raw_candidates, list)
        or not all(isinstance(c, str) and c.strip() for c in raw_candidates)
    ):
        raise StageParseError(
            f"case {record.id!r}: stage 2 missing field 'candidate_disorders'",
            stage=2, raw_text=json.dumps(doc2, ensure_ascii=False),
        )
    candidates = tuple(c.strip().upper() for c in raw_candidates)
    stage2 = HypothesisStage(
        reasoning_text=_require_text(doc2, "disorder_reasoning", record.id, 2),
        candidates=candidates,
    )

    known = [c for c in candidates if kb.has_code(c)]
    doc3 = _stage_doc(
        gateway, "traj_differential_reason",
        prompts.traj_differential_bindings(record, kb, known), record.id, stage=3,
    )
    stage3 = DifferentialStage(
        reasoning_text=_require_text(doc3, "differential_reasoning", record.id, 3),
        final_disorder=_require_text(doc3, "confirmed_disorder", record.id, 3)
        .strip()
        .upper(),
    )

    return Trajectory(
        case_id=record.id,
        stage1=stage1,
        stage2=stage2,
        stage3=stage3,
        complete=_is_complete(
            stage1.category, stage2.candidates, stage3.final_disorder, kb
        ),
    )


def rejection_cause(traj: Trajectory, record: CaseRecord,
                    kb: KnowledgeBase) -> str | None:
    """First failing retention cause, or None when the trajectory is kept."""
    candidates = traj.stage2.candidates
    if len(set(candidates)) != len(candidates):
        return "duplicate_candidate"
    if len(candidates) < MIN_CANDIDATES:
        return "undersized_hypothesis"
    if len(candidates) > MAX_CANDIDATES:
        return "oversized_hypothesis"
    if kb.has_category(traj.stage1.category):
        members = {e.code.code for e in kb.disorders_of(traj.stage1.category)}
    else:
        members = set()
    if any(c not in members for c in candidates):
        return "out_of_category_candidate"
    if traj.stage3.final_disorder not in candidates:
        return "final_not_in_candidates"
    if (
        traj.stage1.category != record.gold_category
        or traj.stage3.final_disorder != record.gold_disorder.code
        or record.gold_disorder.code not in candidates
    ):
        return "gold_mismatch"
    return None


def sft_target(traj: Trajectory) -> str:
    final_answer = wire.dumps_line(
        {
            "diagnostic_category": traj.stage1.category,
            "candidate_disorders": list(traj.stage2.candidates),
            "confirmed_disorder": traj.stage3.final_disorder,
        }
    )
    return "\n".join(
        [
            STAGE_MARKERS[0],
            traj.stage1.reasoning_text,
            STAGE_MARKERS[1],
            traj.stage2.reasoning_text,
            STAGE_MARKERS[2],
            traj.stage3.reasoning_text,
            STAGE_MARKERS[3],
            final_answer,
        ]
    )


_BACKEND_FAILURES = (
    StageParseError,
    BackendRefusalError,
    TransportError,
    MockScriptMissingError,
)


def build_sft_corpus(corpus: Corpus, kb: KnowledgeBase, gateway: Gateway,
                     max_workers: int = 4,
                     ) -> tuple[list[SftExample], dict[str, Any]]:
    """Build trajectories for a corpus and keep the coherent, gold-consistent
    ones as SFT examples. Output order matches input order."""
    records = list(corpus.records)
    examples: list[SftExample] = []
    rejections: list[dict[str, str]] = []

    def one(record: CaseRecord) -> tuple[SftExample | None, dict[str, str] | None]:
        try:
            traj = build_trajectory(record, kb, gateway)
        except _BACKEND_FAILURES as exc:
            return None, {
                "case_id": record.id,
                "cause": "stage_unparseable",
                "detail": str(exc),
            }
        cause = rejection_cause(traj, record, kb)
        if cause is not None:
            return None, {"case_id": record.id, "cause": cause, "detail": ""}
        return (
            SftExample(
                case_id=record.id,
                input=record.narrative(),
                target=sft_target(traj),
            ),
            None,
        )

    if records:
        workers = max(1, min(max_workers, len(records)))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(one, record) for record in records]
            for future in futures:
                example, rejection = future.result()
                if example is not None:
                    examples.append(example)
                else:
                    rejections.append(rejection)

    causes: dict[str, int] = {}
    for rejection in rejections:
        causes[rejection["cause"]] = causes.get(rejection["cause"], 0) + 1
    report = {
        "total": len(records),
        "kept": len(examples),
        "rejected": len(rejections),
        "causes": dict(sorted(causes.items())),
        "rejections": rejections,
    }
    return examples, report


def save_sft(path: str | Path, examples: Sequence[SftExample]) -> int:
    return wire.write_jsonl(
        path, ({"input": e.input, "target": e.target} for e in examples)
    )


def save_rejection_report(path: str | Path, report: dict[str, Any]) -> None:
    Path(path).write_text(
        json.dumps(report, ensure_ascii=False, indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )


def outcome(traj: Trajectory) -> dict[str, Any]:
    """Wire shape the reward engine scores: {category, candidates, final}."""
    return {
        "category": traj.stage1.category,
        "candidates": list(traj.stage2.candidates),
        "final": traj.stage3.final_disorder,
    }
