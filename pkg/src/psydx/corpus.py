"""Case records, corpus JSONL serialization, and the synthetic fixture generator.

Corpus line schema:
    {"id": "...", "sections": {...}, "gold_category": "...",
     "gold_disorder": {"code": "...", "display_name": "..."}}

Records carry exactly one gold category and one gold disorder; a list in
either gold field is rejected at load as a comorbid case. Unknown extra
sections are preserved in order but never interpreted.
"""

from __future__ import annotations

import random
from pathlib import Path
from typing import Iterable, Literal

from pydantic import BaseModel, ConfigDict

from .errors import DuplicateIdError, LabelError, ParseError
from .icd import IcdCode
from .kb import KnowledgeBase
from .wire import iter_jsonl, write_jsonl

REQUIRED_SECTIONS = (
    "chief_complaint",
    "present_illness_history",
    "personal_family_history",
    "physical_examination",
    "mental_status_examination",
    "auxiliary_tests",
)

# Sections that may legitimately be blank.
OPTIONAL_CONTENT = {"auxiliary_tests"}

Provenance = Literal["fixture", "refined", "external"]


class CaseRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    sections: dict[str, str]
    gold_category: str
    gold_disorder: IcdCode

    def narrative(self) -> str:
        """All sections joined into the prompt-facing record text."""
        parts = []
        for name, text in self.sections.items():
            title = name.replace("_", " ").title()
            parts.append(f"[{title}]\n{text}")
        return "\n\n".join(parts)


class Corpus(BaseModel):
    model_config = ConfigDict(frozen=True)

    records: tuple[CaseRecord, ...]
    provenance: Provenance

    def __len__(self) -> int:
        return len(self.records)

    def by_id(self) -> dict[str, CaseRecord]:
        return {r.id: r for r in self.records}


def validate_record(record: CaseRecord, kb: KnowledgeBase) -> None:
    """Check section completeness and gold-label consistency against kb."""
    if not record.id:
        raise LabelError(f"record with empty id")
    for name in REQUIRED_SECTIONS:
        if name not in record.sections:
            raise LabelError(
                f"record {record.id}: missing required section {name!r}"
            )
        if name not in OPTIONAL_CONTENT and not record.sections[name].strip():
            raise LabelError(
                f"record {record.id}: required section {name!r} is empty"
            )
    if not kb.has_category(record.gold_category):
        raise LabelError(
            f"record {record.id}: unknown gold_category {record.gold_category!r}"
        )
    if not kb.has_code(record.gold_disorder.code):
        raise LabelError(
            f"record {record.id}: unknown gold_disorder code "
            f"{record.gold_disorder.code!r}"
        )
    entry = kb.lookup(record.gold_disorder.code)
    if entry.category != record.gold_category:
        raise LabelError(
            f"record {record.id}: disorder {record.gold_disorder.code} is filed "
            f"under {entry.category!r}, not {record.gold_category!r}"
        )
    if (record.gold_disorder.display_name
            and record.gold_disorder.display_name != entry.code.display_name):
        raise LabelError(
            f"record {record.id}: display_name "
            f"{record.gold_disorder.display_name!r} does not match the official "
            f"name {entry.code.display_name!r} for {record.gold_disorder.code}"
        )


def _record_from_obj(obj: object, lineno: int, kb: KnowledgeBase) -> CaseRecord:
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", lineno)
    for key in ("id", "sections", "gold_category", "gold_disorder"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}", lineno)
    if not isinstance(obj["sections"], dict):
        raise ParseError("'sections' must be an object", lineno)

    gold_category = obj["gold_category"]
    gold_disorder = obj["gold_disorder"]
    if isinstance(gold_category, list) or isinstance(gold_disorder, list):
        raise LabelError(
            f"record {obj['id']}: comorbid gold labels are not supported "
            "(single category and disorder required)"
        )
    if isinstance(gold_disorder, str):
        gold_disorder = {"code": gold_disorder}
    if not isinstance(gold_disorder, dict) or "code" not in gold_disorder:
        raise ParseError("'gold_disorder' must carry a 'code'", lineno)

    sections = {
        str(k): v if isinstance(v, str) else str(v)
        for k, v in obj["sections"].items()
    }
    try:
        record = CaseRecord(
            id=str(obj["id"]),
            sections=sections,
            gold_category=str(gold_category),
            gold_disorder=IcdCode(
                code=gold_disorder["code"],
                display_name=str(gold_disorder.get("display_name", "")),
            ),
        )
    except ValueError as exc:
        raise LabelError(f"record {obj.get('id')}: {exc}") from exc
    validate_record(record, kb)
    return record


def load_corpus(path: str | Path, kb: KnowledgeBase,
                provenance: Provenance = "external") -> Corpus:
    """Load and validate a corpus JSONL file against the knowledge base."""
    records: list[CaseRecord] = []
    seen: set[str] = set()
    for lineno, obj in iter_jsonl(path):
        record = _record_from_obj(obj, lineno, kb)
        if record.id in seen:
            raise DuplicateIdError(f"duplicate record id {record.id!r}")
        seen.add(record.id)
        records.append(record)
    return Corpus(records=tuple(records), provenance=provenance)


def record_to_obj(record: CaseRecord) -> dict:
    return {
        "id": record.id,
        "sections": dict(record.sections),
        "gold_category": record.gold_category,
        "gold_disorder": {
            "code": record.gold_disorder.code,
            "display_name": record.gold_disorder.display_name,
        },
    }


def save_corpus(corpus: Corpus, path: str | Path) -> int:
    return write_jsonl(path, (record_to_obj(r) for r in corpus.records))


_COMPLAINT_OPENERS = (
    "Patient reports {m} for the past {dur}.",
    "Presents with {m}, ongoing for {dur}.",
    "Seen for {m} persisting over the last {dur}.",
)
_DURATIONS = ("six weeks", "three months", "eight months", "two years",
              "five weeks", "four months")
_FAMILY = (
    "No significant family psychiatric history. Lives with family, employed.",
    "One first-degree relative with a mood disorder. Otherwise unremarkable.",
    "Family history noncontributory. Completed secondary education.",
)
_PHYSICAL = (
    "Vital signs within normal limits. General physical examination unremarkable.",
    "Afebrile, normotensive. No focal neurological deficits.",
    "Physical examination without abnormal findings.",
)
_AUX = (
    "",
    "Routine blood panel and thyroid function within reference ranges.",
    "Cranial imaging without acute findings.",
)


def generate_fixture_corpus(seed: int, n_per_category: int,
                            kb: KnowledgeBase) -> Corpus:
    """Deterministic synthetic corpus: n_per_category records per category.

    Each record's narrative embeds manifestation phrases of its gold disorder
    so scripted mock pipelines have matching surface text to key on.
    """
    if n_per_category < 1:
        raise ValueError("n_per_category must be >= 1")
    rng = random.Random(seed)
    records: list[CaseRecord] = []
    for cat in kb.categories:
        for i in range(n_per_category):
            entry = cat.disorders[rng.randrange(len(cat.disorders))]
            phrases = [m.symptom for m in entry.manifestations]
            lead = rng.choice(phrases)
            k = min(len(phrases), 3)
            history = rng.sample(phrases, k)
            age = rng.randrange(18, 72)
            sex = rng.choice(("male", "female"))
            sections = {
                "chief_complaint": rng.choice(_COMPLAINT_OPENERS).format(
                    m=lead.lower(), dur=rng.choice(_DURATIONS)),
                "present_illness_history": (
                    f"A {age}-year-old {sex} patient. "
                    + " ".join(f"{p}." for p in history)
                ),
                "personal_family_history": rng.choice(_FAMILY),
                "physical_examination": rng.choice(_PHYSICAL),
                "mental_status_examination": (
                    "On examination: "
                    + "; ".join(p.lower() for p in history[:2]) + "."
                ),
                "auxiliary_tests": rng.choice(_AUX),
            }
            records.append(CaseRecord(
                id=f"fx-{cat.abbreviation.lower()}-{i + 1:03d}",
                sections=sections,
                gold_category=cat.name,
                gold_disorder=IcdCode(
                    code=entry.code.code,
                    display_name=entry.code.display_name,
                ),
            ))
    return Corpus(records=tuple(records), provenance="fixture")
