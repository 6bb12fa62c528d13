"""Three-step case refinement: pick a category, pick a disorder under it,
rewrite the record to fit that disorder's criteria.

Step outputs chain strictly: step 2 sees step 1's category, step 3 sees
both. Each step gets one retry with a format reminder when the response is
unusable, after which the record fails with UnparseableError.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Sequence

from . import prompts, wire
from .corpus import CaseRecord, Corpus
from .errors import (
    BackendRefusalError,
    EmptyRewriteError,
    InvalidCategoryError,
    InvalidDisorderError,
    MockScriptMissingError,
    ParseError,
    RefinementError,
    TransportError,
    UnparseableError,
    UsageError,
)
from .gateway import CompletionRequest, CompletionResponse, Gateway
from .icd import IcdCode, is_code, normalize_code
from .kb import KnowledgeBase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RefinedRecord:
    source_id: str
    category: str
    disorder: IcdCode
    rewritten_text: str
    # Raw backend responses for steps 1-3, kept for audit.
    step_outputs: tuple[str, str, str]


def _run_step(gateway: Gateway, template_id: str, bindings: dict[str, str],
              case_id: str,
              extract: Callable[[CompletionResponse], Any]) -> tuple[Any, str]:
    for attempt in (0, 1):
        request = CompletionRequest(
            template_id=template_id,
            bindings=bindings,
            case_id=case_id,
            attempt=attempt,
        )
        response = gateway.complete(request)
        value = extract(response)
        if value is not None:
            return value, response.raw_text
    raise UnparseableError(
        f"case {case_id!r}: no usable {template_id} output after retry"
    )


def _extract_categories(response: CompletionResponse) -> list[str] | None:
    doc = response.parsed_json
    if not isinstance(doc, dict):
        return None
    value = doc.get("diagnostic_category")
    if isinstance(value, str) and value.strip():
        return [value]
    if (
        isinstance(value, list)
        and value
        and all(isinstance(item, str) and item.strip() for item in value)
    ):
        return list(value)
    return None


def _extract_disorder_text(response: CompletionResponse) -> str | None:
    doc = response.parsed_json
    if isinstance(doc, dict):
        value = doc.get("diagnostic_disorder")
        if isinstance(value, str) and value.strip():
            return value.strip()
        return None
    if isinstance(doc, str) and doc.strip():
        return doc.strip()
    # Bare-token replies like "6A40" are not JSON but are unambiguous.
    raw = response.raw_text.strip()
    if is_code(raw):
        return raw
    return None


def _extract_rewrite(response: CompletionResponse) -> str | None:
    doc = response.parsed_json
    if isinstance(doc, dict) and isinstance(doc.get("revised_record"), str):
        return doc["revised_record"]
    return None


def refine_step1_category(record: CaseRecord, kb: KnowledgeBase,
                          gateway: Gateway,
                          raw_sink: list[str] | None = None) -> str:
    names, raw = _run_step(
        gateway,
        "category_classify",
        prompts.category_classify_bindings(record, kb),
        record.id,
        _extract_categories,
    )
    if len(names) > 1:
        logger.warning(
            "case %s: %d categories returned, taking the first of %r",
            record.id, len(names), names,
        )
    name = names[0]
    if not kb.has_category(name):
        raise InvalidCategoryError(
            f"case {record.id!r}: category not in taxonomy: {name!r}"
        )
    if raw_sink is not None:
        raw_sink.append(raw)
    return name


def refine_step2_disorder(record: CaseRecord, category: str, kb: KnowledgeBase,
                          gateway: Gateway,
                          raw_sink: list[str] | None = None) -> IcdCode:
    cat = kb.category(category)
    text, raw = _run_step(
        gateway,
        "disorder_check",
        prompts.disorder_select_bindings(record, cat),
        record.id,
        _extract_disorder_text,
    )
    try:
        code = normalize_code(text)
    except ValueError as exc:
        raise InvalidDisorderError(
            f"case {record.id!r}: not a chapter-6 code: {text!r}"
        ) from exc
    members = {entry.code.code for entry in cat.disorders}
    if code not in members:
        raise InvalidDisorderError(
            f"case {record.id!r}: {code} is not a disorder under {category!r}"
        )
    if raw_sink is not None:
        raw_sink.append(raw)
    return kb.lookup(code).code


def refine_step3_rewrite(record: CaseRecord, category: str,
                         disorder: IcdCode | str, kb: KnowledgeBase,
                         gateway: Gateway,
                         raw_sink: list[str] | None = None) -> str:
    code = disorder.code if isinstance(disorder, IcdCode) else normalize_code(disorder)
    entry = kb.lookup(code)
    if entry.category != category:
        raise InvalidDisorderError(
            f"case {record.id!r}: {code} is filed under {entry.category!r}, "
            f"not {category!r}"
        )
    text, raw = _run_step(
        gateway,
        "rewrite",
        prompts.rewrite_bindings(record.narrative(), entry),
        record.id,
        _extract_rewrite,
    )
    if not text.strip():
        raise EmptyRewriteError(f"case {record.id!r}: revised_record is empty")
    if raw_sink is not None:
        raw_sink.append(raw)
    return text


_STEP_FAILURES = (
    UnparseableError,
    InvalidCategoryError,
    InvalidDisorderError,
    EmptyRewriteError,
    BackendRefusalError,
    TransportError,
    MockScriptMissingError,
)


def _refine_one(record: CaseRecord, kb: KnowledgeBase, gateway: Gateway,
                check_gold: bool) -> RefinedRecord:
    raws: list[str] = []
    step = "category"
    try:
        category = refine_step1_category(record, kb, gateway, raw_sink=raws)
        if check_gold and category != record.gold_category:
            raise RefinementError(
                f"case {record.id!r}: step-1 category {category!r} disagrees "
                f"with gold {record.gold_category!r}",
                case_id=record.id, step="gold-check",
            )
        step = "disorder"
        disorder = refine_step2_disorder(record, category, kb, gateway, raw_sink=raws)
        if check_gold and disorder.code != record.gold_disorder.code:
            raise RefinementError(
                f"case {record.id!r}: step-2 disorder {disorder.code} disagrees "
                f"with gold {record.gold_disorder.code}",
                case_id=record.id, step="gold-check",
            )
        step = "rewrite"
        text = refine_step3_rewrite(record, category, disorder, kb, gateway,
                                    raw_sink=raws)
    except _STEP_FAILURES as exc:
        raise RefinementError(str(exc), case_id=record.id, step=step) from exc
    return RefinedRecord(
        source_id=record.id,
        category=category,
        disorder=disorder,
        rewritten_text=text,
        step_outputs=(raws[0], raws[1], raws[2]),
    )


def _skip_reason(error: RefinementError) -> str:
    if error.step == "gold-check":
        return "GoldInconsistent"
    cause = error.__cause__
    if cause is None:
        return "Refinement"
    name = type(cause).__name__
    return name[:-5] if name.endswith("Error") else name


def refine_corpus(corpus: Corpus, kb: KnowledgeBase, gateway: Gateway,
                  policy: str = "skip", max_workers: int = 4,
                  check_gold: bool = False,
                  ) -> tuple[list[RefinedRecord], dict[str, Any]]:
    """Refine every record; output order always matches input order.

    policy="skip" drops failing records into the report; policy="fail"
    raises on the first failing record in input order.
    """
    if policy not in ("skip", "fail"):
        raise UsageError(f"policy must be 'skip' or 'fail', got {policy!r}")
    records = list(corpus.records)
    refined: list[RefinedRecord] = []
    skips: list[dict[str, str]] = []
    if records:
        workers = max(1, min(max_workers, len(records)))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_refine_one, record, kb, gateway, check_gold)
                for record in records
            ]
            for record, future in zip(records, futures):
                try:
                    refined.append(future.result())
                except RefinementError as exc:
                    if policy == "fail":
                        raise
                    skips.append(
                        {
                            "source_id": record.id,
                            "step": exc.step or "",
                            "reason": _skip_reason(exc),
                            "detail": str(exc),
                        }
                    )
    reasons: dict[str, int] = {}
    for skip in skips:
        reasons[skip["reason"]] = reasons.get(skip["reason"], 0) + 1
    report = {
        "total": len(records),
        "refined": len(refined),
        "skipped": len(skips),
        "reasons": dict(sorted(reasons.items())),
        "skips": skips,
    }
    return refined, report


def refined_to_obj(record: RefinedRecord) -> dict[str, Any]:
    return {
        "source_id": record.source_id,
        "category": record.category,
        "disorder": {
            "code": record.disorder.code,
            "display_name": record.disorder.display_name,
        },
        "rewritten_text": record.rewritten_text,
        "step_outputs": list(record.step_outputs),
    }


def save_refined(path: str | Path, records: Sequence[RefinedRecord]) -> int:
    return wire.write_jsonl(path, (refined_to_obj(r) for r in records))


def load_refined(path: str | Path) -> list[RefinedRecord]:
    out = []
    for lineno, obj in wire.iter_jsonl(path):
        try:
            out.append(
                RefinedRecord(
                    source_id=obj["source_id"],
                    category=obj["category"],
                    disorder=IcdCode(
                        code=obj["disorder"]["code"],
                        display_name=obj["disorder"].get("display_name", ""),
                    ),
                    rewritten_text=obj["rewritten_text"],
                    step_outputs=tuple(obj["step_outputs"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad refined record: {exc}", lineno) from exc
    return out


def save_skip_report(path: str | Path, report: dict[str, Any]) -> None:
    Path(path).write_text(
        json.dumps(report, ensure_ascii=False, indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
