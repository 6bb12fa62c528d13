"""Candidate-constrained diagnosis runs, prediction extraction, CA/DA/JA
metrics, and error-annotation aggregation.

Extraction is exact-match only: code tokens or official display names, with
the last occurrence in a response treated as the model's conclusion.
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from . import prompts, wire
from .corpus import CaseRecord, Corpus
from .errors import (
    BackendRefusalError,
    DuplicateIdError,
    EmptyEvaluationError,
    MockScriptMissingError,
    ParseError,
    SchemaError,
    TransportError,
    UnknownCaseIdError,
    UsageError,
)
from .gateway import CompletionRequest, Gateway, _first_balanced_object
from .icd import CODE_SCAN_RE
from .kb import KnowledgeBase

EXTRACTION_STATUSES = ("ok", "unmatched", "refusal", "unparseable")

ERROR_TYPES = ("NR", "WI", "IE", "OP", "RA", "Typo", "Other")

_REFUSAL_MARKERS = (
    "i cannot",
    "i can't",
    "i won't",
    "unable to provide",
    "unable to help",
    "cannot provide",
    "can't provide",
    "cannot assist",
    "refuse to",
)


@dataclass(frozen=True)
class Prediction:
    case_id: str
    pred_category: str | None = None
    pred_disorder: str | None = None
    extraction_status: str = "unmatched"
    multiplicity: bool = False

    def __post_init__(self) -> None:
        if self.extraction_status not in EXTRACTION_STATUSES:
            raise ValueError(f"bad extraction_status {self.extraction_status!r}")
        if self.extraction_status == "ok" and (
            self.pred_category is None or self.pred_disorder is None
        ):
            raise ValueError("status 'ok' requires both predicted labels")


@dataclass(frozen=True)
class EvalReport:
    ca: float
    da: float
    ja: float
    per_category: dict[str, float]
    per_category_n: dict[str, int]
    n: int
    extraction_failures: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {
            "ca": self.ca,
            "da": self.da,
            "ja": self.ja,
            "per_category": dict(self.per_category),
            "per_category_n": dict(self.per_category_n),
            "n": self.n,
            "extraction_failures": dict(self.extraction_failures),
        }

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> "EvalReport":
        return cls(
            ca=doc["ca"],
            da=doc["da"],
            ja=doc["ja"],
            per_category=dict(doc["per_category"]),
            per_category_n={k: int(v) for k, v in doc["per_category_n"].items()},
            n=int(doc["n"]),
            extraction_failures={
                k: int(v) for k, v in doc.get("extraction_failures", {}).items()
            },
        )


@dataclass(frozen=True)
class ErrorAnnotation:
    case_id: str
    model_id: str
    error_type: str
    annotator_id: str

    def __post_init__(self) -> None:
        if self.error_type not in ERROR_TYPES:
            raise SchemaError(f"error_type {self.error_type!r} not in {ERROR_TYPES}")


def _looks_like_refusal(text: str) -> bool:
    lowered = text.lower()
    return any(marker in lowered for marker in _REFUSAL_MARKERS)


def _json_objects(text: str) -> list[dict[str, Any]]:
    """All balanced top-level JSON objects in the text, left to right."""
    found = []
    rest = text
    offset = 0
    while True:
        block = _first_balanced_object(rest)
        if block is None:
            return found
        start = rest.find(block)
        try:
            doc = json.loads(block)
            if isinstance(doc, dict):
                found.append(doc)
        except json.JSONDecodeError:
            pass
        offset += start + len(block)
        rest = text[offset:]


def _labels_from_doc(doc: dict[str, Any], kb: KnowledgeBase
                     ) -> tuple[str, str] | None:
    code = None
    for key in ("confirmed_disorder", "diagnostic_disorder"):
        value = doc.get(key)
        if isinstance(value, str) and kb.has_code(value):
            code = value.strip().upper()
            break
    category = None
    value = doc.get("diagnostic_category")
    if isinstance(value, list) and value and isinstance(value[0], str):
        value = value[0]
    if isinstance(value, str) and kb.has_category(value):
        category = value
    if code is not None:
        entry = kb.lookup(code)
        # A category naming a different branch than the code loses to the
        # code; the KB parent is authoritative.
        if category is None or category != entry.category:
            category = entry.category
        return category, code
    return None


def extract_prediction(case_id: str, raw_text: str, kb: KnowledgeBase,
                       first_occurrence: bool = False) -> Prediction:
    """Pull (category, disorder) out of free-form model output.

    Precedence: structured JSON fields, then bare code tokens, then exact
    display names. Within each path the last occurrence wins unless
    first_occurrence is set.
    """
    docs = _json_objects(raw_text)
    ordered_docs = docs if first_occurrence else list(reversed(docs))
    for doc in ordered_docs:
        labels = _labels_from_doc(doc, kb)
        if labels is not None:
            return Prediction(
                case_id=case_id,
                pred_category=labels[0],
                pred_disorder=labels[1],
                extraction_status="ok",
            )

    hits = [m.group(0) for m in CODE_SCAN_RE.finditer(raw_text) if kb.has_code(m.group(0))]
    if hits:
        code = hits[0] if first_occurrence else hits[-1]
        entry = kb.lookup(code)
        return Prediction(
            case_id=case_id,
            pred_category=entry.category,
            pred_disorder=entry.code.code,
            extraction_status="ok",
        )

    name_hits: list[tuple[int, int, str]] = []
    for entry in kb.iter_disorders():
        name = entry.code.display_name
        start = raw_text.find(name)
        while start != -1:
            name_hits.append((start, len(name), entry.code.code))
            start = raw_text.find(name, start + 1)
    if name_hits:
        # Longest name wins at the same position.
        if first_occurrence:
            start, _, code = min(name_hits, key=lambda h: (h[0], -h[1]))
        else:
            start, _, code = max(name_hits, key=lambda h: (h[0], h[1]))
        entry = kb.lookup(code)
        return Prediction(
            case_id=case_id,
            pred_category=entry.category,
            pred_disorder=entry.code.code,
            extraction_status="ok",
        )

    status = "refusal" if _looks_like_refusal(raw_text) else "unmatched"
    return Prediction(case_id=case_id, extraction_status=status)


def parse_disorder_check(doc: Any, code: str) -> bool | None:
    """Read a {"has_disorder_<code>": "yes"|"no"} verdict; None if absent."""
    if not isinstance(doc, dict):
        return None
    value = doc.get(f"has_disorder_{code}")
    if isinstance(value, str):
        verdict = value.strip().lower()
        if verdict == "yes":
            return True
        if verdict == "no":
            return False
    return None


def _diagnose_one(record: CaseRecord, kb: KnowledgeBase,
                  gateway: Gateway) -> Prediction:
    response = gateway.complete(
        CompletionRequest(
            template_id="category_classify",
            bindings=prompts.category_classify_bindings(record, kb),
            case_id=record.id,
        )
    )
    doc = response.parsed_json
    category = None
    if isinstance(doc, dict):
        value = doc.get("diagnostic_category")
        if isinstance(value, list) and value and isinstance(value[0], str):
            category = value[0]
        elif isinstance(value, str) and value.strip():
            category = value
    if category is None:
        status = "refusal" if _looks_like_refusal(response.raw_text) else "unparseable"
        return Prediction(case_id=record.id, extraction_status=status)
    if not kb.has_category(category):
        return Prediction(
            case_id=record.id, pred_category=None, extraction_status="unmatched"
        )

    yes_codes = []
    for entry in kb.disorders_of(category):
        code = entry.code.code
        check = gateway.complete(
            CompletionRequest(
                template_id="disorder_check",
                bindings=prompts.disorder_check_bindings(record, entry),
                case_id=record.id,
                code=code,
            )
        )
        if parse_disorder_check(check.parsed_json, code) is True:
            yes_codes.append(code)

    if not yes_codes:
        return Prediction(
            case_id=record.id,
            pred_category=category,
            extraction_status="unmatched",
        )
    yes_codes.sort(key=kb.taxonomy_position)
    return Prediction(
        case_id=record.id,
        pred_category=category,
        pred_disorder=yes_codes[0],
        extraction_status="ok",
        multiplicity=len(yes_codes) > 1,
    )


def run_constrained_diagnosis(corpus: Corpus, kb: KnowledgeBase,
                              gateway: Gateway,
                              max_workers: int = 4) -> list[Prediction]:
    """Two-step protocol per case: pick a category, then ask a yes/no
    criteria check for every disorder under it. One yes wins outright;
    several fall back to the earliest taxonomy position with a multiplicity
    flag; none leaves the case unmatched."""

    def one(record: CaseRecord) -> Prediction:
        try:
            return _diagnose_one(record, kb, gateway)
        except BackendRefusalError:
            return Prediction(case_id=record.id, extraction_status="refusal")
        except (TransportError, MockScriptMissingError):
            return Prediction(case_id=record.id, extraction_status="unparseable")

    records = list(corpus.records)
    if not records:
        return []
    workers = max(1, min(max_workers, len(records)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(one, record) for record in records]
        return [future.result() for future in futures]


def compute_metrics(predictions: Sequence[Prediction], corpus: Corpus) -> EvalReport:
    if len(corpus) == 0:
        raise EmptyEvaluationError("corpus has no records")
    by_case: dict[str, Prediction] = {}
    known_ids = {record.id for record in corpus.records}
    for pred in predictions:
        if pred.case_id not in known_ids:
            raise UnknownCaseIdError(f"prediction for unknown case {pred.case_id!r}")
        if pred.case_id in by_case:
            raise DuplicateIdError(f"two predictions for case {pred.case_id!r}")
        by_case[pred.case_id] = pred

    n = len(corpus)
    ca_hits = da_hits = ja_hits = 0
    cat_n: dict[str, int] = {}
    cat_hits: dict[str, int] = {}
    failures: dict[str, int] = {}
    for record in corpus.records:
        gold_cat = record.gold_category
        cat_n[gold_cat] = cat_n.get(gold_cat, 0) + 1
        pred = by_case.get(record.id)
        if pred is None:
            failures["missing"] = failures.get("missing", 0) + 1
            continue
        if pred.extraction_status != "ok":
            failures[pred.extraction_status] = (
                failures.get(pred.extraction_status, 0) + 1
            )
            continue
        cat_ok = pred.pred_category == gold_cat
        dis_ok = pred.pred_disorder == record.gold_disorder.code
        ca_hits += int(cat_ok)
        da_hits += int(dis_ok)
        ja_hits += int(cat_ok and dis_ok)
        if dis_ok:
            cat_hits[gold_cat] = cat_hits.get(gold_cat, 0) + 1

    per_category = {
        name: cat_hits.get(name, 0) / count for name, count in sorted(cat_n.items())
    }
    return EvalReport(
        ca=ca_hits / n,
        da=da_hits / n,
        ja=ja_hits / n,
        per_category=per_category,
        per_category_n=dict(sorted(cat_n.items())),
        n=n,
        extraction_failures=dict(sorted(failures.items())),
    )


def aggregate_error_annotations(annotations: Iterable[ErrorAnnotation]
                                ) -> dict[str, Any]:
    counts = {name: 0 for name in ERROR_TYPES}
    total = 0
    for ann in annotations:
        counts[ann.error_type] += 1
        total += 1
    shares = {
        name: (counts[name] / total if total else 0.0) for name in ERROR_TYPES
    }
    return {"total": total, "counts": counts, "shares": shares}


def load_annotations(path: str | Path) -> list[ErrorAnnotation]:
    required = {"case_id", "model_id", "error_type", "annotator_id"}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = set(reader.fieldnames or ())
        if not required <= header:
            raise SchemaError(
                f"annotation CSV must have columns {sorted(required)}, "
                f"got {sorted(header)}"
            )
        return [
            ErrorAnnotation(
                case_id=row["case_id"],
                model_id=row["model_id"],
                error_type=row["error_type"],
                annotator_id=row["annotator_id"],
            )
            for row in reader
        ]


def cohen_kappa(annotations: Sequence[ErrorAnnotation],
                annotator_a: str | None = None,
                annotator_b: str | None = None) -> float:
    """Two-rater Cohen's kappa over items both raters annotated.

    Items are (case_id, model_id) pairs; labels are error types.
    """
    if annotator_a is None or annotator_b is None:
        raters = sorted({ann.annotator_id for ann in annotations})
        if len(raters) != 2:
            raise UsageError(
                f"need exactly two annotators or explicit ids, found {raters}"
            )
        annotator_a, annotator_b = raters
    by_rater: dict[str, dict[tuple[str, str], str]] = {annotator_a: {}, annotator_b: {}}
    for ann in annotations:
        if ann.annotator_id in by_rater:
            by_rater[ann.annotator_id][(ann.case_id, ann.model_id)] = ann.error_type
    shared = sorted(set(by_rater[annotator_a]) & set(by_rater[annotator_b]))
    if not shared:
        raise EmptyEvaluationError("annotators share no items")
    pairs = [(by_rater[annotator_a][item], by_rater[annotator_b][item]) for item in shared]
    n = len(pairs)
    po = sum(1 for a, b in pairs if a == b) / n
    pe = 0.0
    for label in ERROR_TYPES:
        pa = sum(1 for a, _ in pairs if a == label) / n
        pb = sum(1 for _, b in pairs if b == label) / n
        pe += pa * pb
    if math.isclose(pe, 1.0):
        return 1.0 if math.isclose(po, 1.0) else 0.0
    return (po - pe) / (1.0 - pe)


def _percent(value: float) -> str:
    return f"{100.0 * value:.2f}"


def emit_report(report: EvalReport, fmt: str, kb: KnowledgeBase | None = None,
                label: str = "model") -> str:
    """Render an EvalReport as canonical JSON or a one-row markdown table
    whose columns are the 16 category abbreviations plus CA/DA/JA."""
    if fmt == "json":
        return json.dumps(report.as_dict(), ensure_ascii=False, indent=2,
                          sort_keys=True) + "\n"
    if fmt != "markdown":
        raise UsageError(f"unknown report format {fmt!r}")
    if kb is None:
        raise UsageError("markdown reports need the knowledge base for column order")
    abbrev_to_name = {cat.abbreviation: cat.name for cat in kb.categories}
    headers = ["Model", *kb.abbreviations(), "CA", "DA", "JA"]
    cells = [label]
    for abbrev in kb.abbreviations():
        name = abbrev_to_name[abbrev]
        if name in report.per_category:
            cells.append(_percent(report.per_category[name]))
        else:
            cells.append("-")
    cells.extend([_percent(report.ca), _percent(report.da), _percent(report.ja)])
    lines = [
        "| " + " | ".join(headers) + " |",
        "| " + " | ".join("---" for _ in headers) + " |",
        "| " + " | ".join(cells) + " |",
    ]
    return "\n".join(lines) + "\n"


def prediction_to_obj(pred: Prediction) -> dict[str, Any]:
    return {
        "case_id": pred.case_id,
        "pred_category": pred.pred_category,
        "pred_disorder": pred.pred_disorder,
        "extraction_status": pred.extraction_status,
        "multiplicity": pred.multiplicity,
    }


def save_predictions(path: str | Path, predictions: Sequence[Prediction]) -> int:
    return wire.write_jsonl(path, (prediction_to_obj(p) for p in predictions))


def load_predictions(path: str | Path) -> list[Prediction]:
    out = []
    for lineno, obj in wire.iter_jsonl(path):
        try:
            out.append(
                Prediction(
                    case_id=obj["case_id"],
                    pred_category=obj.get("pred_category"),
                    pred_disorder=obj.get("pred_disorder"),
                    extraction_status=obj.get("extraction_status", "unmatched"),
                    multiplicity=bool(obj.get("multiplicity", False)),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad prediction: {exc}", lineno) from exc
    return out
