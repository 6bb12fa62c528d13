"""Two-level psychiatric knowledge base: diagnostic categories and disorders.

The shipped default covers 16 categories containing 76 disorders. Each
category file carries a prose definition plus nested disorder entries with
manifestations (prevalence-banded symptoms) and diagnostic criteria. All
lookup structures are built once at load time and the loaded objects are
immutable, so a KnowledgeBase can be shared freely across threads.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Literal

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from .errors import IntegrityError, NotFoundError, SchemaError, UnknownCategoryError
from .icd import IcdCode, normalize_code

# Allowed percentage envelope per prevalence band.
BAND_ENVELOPES: dict[str, tuple[int, int]] = {
    "high": (70, 90),
    "moderate": (30, 70),
    "low": (10, 30),
}


class Manifestation(BaseModel):
    """One symptom with its prevalence band and percentage range."""

    model_config = ConfigDict(frozen=True)

    symptom: str
    prevalence_band: Literal["high", "moderate", "low"]
    band_range: tuple[int, int]

    @model_validator(mode="after")
    def _range_within_band(self) -> "Manifestation":
        lo, hi = self.band_range
        env_lo, env_hi = BAND_ENVELOPES[self.prevalence_band]
        if not (env_lo <= lo <= hi <= env_hi):
            raise ValueError(
                f"band_range {lo}-{hi} outside {self.prevalence_band} "
                f"envelope {env_lo}-{env_hi}"
            )
        return self

    def label(self) -> str:
        lo, hi = self.band_range
        return f"{self.symptom} ({self.prevalence_band}: {lo}%-{hi}%)"


class DiagnosticCriteria(BaseModel):
    model_config = ConfigDict(frozen=True)

    mandatory: tuple[str, ...]
    supportive: tuple[str, ...] = ()
    threshold: str = ""

    @model_validator(mode="after")
    def _mandatory_non_empty(self) -> "DiagnosticCriteria":
        if not self.mandatory:
            raise ValueError("mandatory criteria list must be non-empty")
        return self


class DisorderEntry(BaseModel):
    """A single disorder with its criteria, keyed by ICD-11 code."""

    model_config = ConfigDict(frozen=True)

    code: IcdCode
    category: str
    definition: str
    manifestations: tuple[Manifestation, ...]
    criteria: DiagnosticCriteria
    content_quality: str = "fixture"

    def display(self) -> str:
        """Code plus official name, e.g. '6A20 Schizophrenia'."""
        return f"{self.code.code} {self.code.display_name}"


class CategoryEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    abbreviation: str
    order: int
    definition: str
    code_list: tuple[str, ...]
    disorders: tuple[DisorderEntry, ...]
    content_quality: str = "fixture"

    @model_validator(mode="after")
    def _codes_match_disorders(self) -> "CategoryEntry":
        if not self.code_list:
            raise ValueError(f"category {self.name!r} has an empty code_list")
        listed = list(self.code_list)
        nested = [d.code.code for d in self.disorders]
        if listed != nested:
            raise ValueError(
                f"category {self.name!r}: code_list {listed} does not match "
                f"nested disorder codes {nested}"
            )
        return self


class KnowledgeBase:
    """Immutable category/disorder hierarchy with code and name indices."""

    def __init__(self, categories: Iterable[CategoryEntry]):
        cats = sorted(categories, key=lambda c: c.order)
        if not cats:
            raise IntegrityError("knowledge base has no categories")
        if [c.order for c in cats] != list(range(1, len(cats) + 1)):
            raise IntegrityError(
                "category order fields must be exactly 1..n without gaps, got "
                f"{[c.order for c in cats]}"
            )
        names = [c.name for c in cats]
        if len(set(names)) != len(names):
            raise IntegrityError("duplicate category names")
        abbrevs = [c.abbreviation for c in cats]
        if len(set(abbrevs)) != len(abbrevs):
            raise IntegrityError("duplicate category abbreviations")

        by_code: dict[str, DisorderEntry] = {}
        by_display: dict[str, DisorderEntry] = {}
        for cat in cats:
            for entry in cat.disorders:
                if entry.category != cat.name:
                    raise IntegrityError(
                        f"disorder {entry.code.code} carries category "
                        f"{entry.category!r} but is filed under {cat.name!r}"
                    )
                if entry.code.code in by_code:
                    raise IntegrityError(
                        f"disorder code {entry.code.code} appears in more "
                        "than one category"
                    )
                by_code[entry.code.code] = entry
                by_display[entry.display().lower()] = entry

        self._categories: tuple[CategoryEntry, ...] = tuple(cats)
        self._by_category_name = {c.name: c for c in cats}
        self._by_code = by_code
        self._by_display = by_display
        # Global position of each code in taxonomy order, for tie-breaking.
        self._taxonomy_pos = {
            entry.code.code: pos
            for pos, entry in enumerate(self.iter_disorders())
        }

    @property
    def categories(self) -> tuple[CategoryEntry, ...]:
        return self._categories

    @property
    def n_categories(self) -> int:
        return len(self._categories)

    @property
    def n_disorders(self) -> int:
        return len(self._by_code)

    def iter_disorders(self) -> Iterable[DisorderEntry]:
        for cat in self._categories:
            yield from cat.disorders

    def category_names(self) -> list[str]:
        return [c.name for c in self._categories]

    def abbreviations(self) -> list[str]:
        return [c.abbreviation for c in self._categories]

    def category_definitions(self) -> list[tuple[str, str]]:
        """(name, definition) pairs in taxonomy order."""
        return [(c.name, c.definition) for c in self._categories]

    def category(self, name: str) -> CategoryEntry:
        try:
            return self._by_category_name[name]
        except KeyError:
            raise UnknownCategoryError(f"unknown category: {name!r}") from None

    def has_category(self, name: str) -> bool:
        return name in self._by_category_name

    def disorders_of(self, category: str) -> tuple[DisorderEntry, ...]:
        return self.category(category).disorders

    def lookup(self, code: str) -> DisorderEntry:
        try:
            normalized = normalize_code(code)
        except ValueError as exc:
            raise NotFoundError(str(exc)) from None
        try:
            return self._by_code[normalized]
        except KeyError:
            raise NotFoundError(f"no disorder with code {normalized}") from None

    def has_code(self, code: str) -> bool:
        try:
            return normalize_code(code) in self._by_code
        except ValueError:
            return False

    def lookup_display(self, text: str) -> DisorderEntry | None:
        """Match '6A20 Schizophrenia' style display names, case-insensitive."""
        return self._by_display.get(text.strip().lower())

    def taxonomy_position(self, code: str) -> int:
        """Global 0-based position of a code in taxonomy order."""
        try:
            return self._taxonomy_pos[normalize_code(code)]
        except (KeyError, ValueError):
            raise NotFoundError(f"no disorder with code {code!r}") from None

    def validate(self) -> tuple[int, int]:
        """Re-run cross checks; returns (n_categories, n_disorders)."""
        seen: set[str] = set()
        for cat in self._categories:
            for entry in cat.disorders:
                if entry.code.code in seen:
                    raise IntegrityError(f"duplicate code {entry.code.code}")
                seen.add(entry.code.code)
                if entry.category not in self._by_category_name:
                    raise IntegrityError(
                        f"disorder {entry.code.code} references unknown "
                        f"category {entry.category!r}"
                    )
        return self.n_categories, self.n_disorders


def default_kb_path() -> Path:
    return Path(__file__).resolve().parent / "data" / "kb"


def _parse_category_doc(doc: object, source: str) -> CategoryEntry:
    if not isinstance(doc, dict):
        raise SchemaError(f"{source}: expected a JSON object at top level")
    try:
        disorders = []
        for rec in doc.get("disorders", []):
            disorders.append(
                DisorderEntry(
                    code=IcdCode(
                        code=rec.get("code", ""),
                        display_name=rec.get("name", ""),
                    ),
                    category=doc.get("name", ""),
                    definition=rec.get("definition", ""),
                    manifestations=tuple(
                        Manifestation(**m) for m in rec.get("manifestations", [])
                    ),
                    criteria=DiagnosticCriteria(**rec.get("criteria", {})),
                    content_quality=rec.get("content_quality", "fixture"),
                )
            )
        return CategoryEntry(
            name=doc.get("name", ""),
            abbreviation=doc.get("abbreviation", ""),
            order=doc.get("order", 0),
            definition=doc.get("definition", ""),
            code_list=tuple(doc.get("code_list", [])),
            disorders=tuple(disorders),
            content_quality=doc.get("content_quality", "fixture"),
        )
    except (ValidationError, ValueError, TypeError) as exc:
        raise SchemaError(f"{source}: {exc}") from exc


def load_kb(path: str | Path | None = None) -> KnowledgeBase:
    """Load a knowledge base from a directory of category files or one file.

    A directory is read as one JSON document per category (every ``*.json``
    inside it); a single file may hold either one category object or a JSON
    array of category objects.
    """
    root = Path(path) if path is not None else default_kb_path()
    if not root.exists():
        raise SchemaError(f"knowledge base path does not exist: {root}")

    docs: list[tuple[object, str]] = []
    if root.is_dir():
        files = sorted(root.glob("*.json"))
        if not files:
            raise SchemaError(f"no .json category files under {root}")
        for f in files:
            docs.append((_read_json(f), str(f)))
    else:
        loaded = _read_json(root)
        if isinstance(loaded, list):
            docs = [(item, f"{root}[{i}]") for i, item in enumerate(loaded)]
        else:
            docs = [(loaded, str(root))]

    categories = [_parse_category_doc(doc, source) for doc, source in docs]
    return KnowledgeBase(categories)


def _read_json(path: Path) -> object:
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        raise SchemaError(f"{path}: empty file")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc


def format_category_menu(kb: KnowledgeBase) -> str:
    """Render all category definitions as the JSON-style reference block
    injected into category-selection prompts. Definitions are passed through
    verbatim."""
    lines = ["{"]
    for i, (name, definition) in enumerate(kb.category_definitions()):
        comma = "," if i < kb.n_categories - 1 else ""
        lines.append(f"{json.dumps(name)}: {json.dumps(definition)}{comma}")
    lines.append("}")
    return "\n".join(lines)


def format_criteria(entry: DisorderEntry) -> str:
    """Render one disorder's criteria block for prompt injection."""
    lines = [
        f"Disorder: \"{entry.code.code}\" ({entry.code.display_name})",
        "Diagnostic Criteria:",
        "- Mandatory Criteria (for Diagnosis):",
    ]
    lines.extend(f"  - {c}" for c in entry.criteria.mandatory)
    if entry.criteria.supportive:
        lines.append("- Supporting Criteria (Clinical and Epidemiological Evidence):")
        lines.extend(f"  - {c}" for c in entry.criteria.supportive)
    if entry.criteria.threshold:
        lines.append("- Threshold Criteria:")
        lines.append(f"  - {entry.criteria.threshold}")
    return "\n".join(lines)


def format_manifestations(entry: DisorderEntry) -> str:
    lines = [f"Clinical Manifestations of {entry.display()}:"]
    lines.extend(f"- {m.label()}" for m in entry.manifestations)
    return "\n".join(lines)


def format_disorder_menu(entries: Iterable[DisorderEntry],
                         with_manifestations: bool = True) -> str:
    """Render a candidate-disorder list (codes, names, manifestations)."""
    blocks = []
    for entry in entries:
        lines = [f"- {entry.display()}: {entry.definition}"]
        if with_manifestations:
            lines.extend(f"  - {m.label()}" for m in entry.manifestations)
        blocks.append("\n".join(lines))
    return "\n".join(blocks)


def format_criteria_menu(entries: Iterable[DisorderEntry]) -> str:
    return "\n\n".join(format_criteria(e) for e in entries)
