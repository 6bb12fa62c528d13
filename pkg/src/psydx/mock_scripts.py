"""Builders for scripted mock-backend response tables.

The happy-path tables answer every request the pipeline makes for a given
corpus with the gold labels, so offline runs exercise the full machinery
deterministically. Tests overlay targeted failures on top of these tables.
"""

from __future__ import annotations

import json
from typing import Any

from .corpus import Corpus
from .gateway import script_key
from .kb import KnowledgeBase

CATEGORY_OPENER = (
    "Alright, let me go through the medical reasoning step by step. First, I "
    "need to combine the symptom combinations and the course of the illness "
    "to frame the broad syndrome category this patient belongs to..."
)
DISORDER_OPENER = (
    "Next, I need to work within the syndrome range and, combining clinical "
    "symptoms, deduce the possible disorders..."
)
DIFFERENTIAL_OPENER = (
    "Finally, I need to combine the diagnostic criteria and key differential "
    "points to complete the differentiation and confirm the final diagnosis..."
)


def _dump(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False)


def gold_candidates(kb: KnowledgeBase, category: str, gold_code: str) -> list[str]:
    """Gold first, then its category siblings in code order, capped at 3."""
    codes = [entry.code.code for entry in kb.disorders_of(category)]
    ordered = [gold_code] + [c for c in codes if c != gold_code]
    return ordered[:3]


def build_refine_scripts(corpus: Corpus, kb: KnowledgeBase) -> dict[str, str]:
    scripts: dict[str, str] = {}
    for record in corpus.records:
        entry = kb.lookup(record.gold_disorder.code)
        scripts[script_key("category_classify", record.id)] = _dump(
            {"id": record.id, "diagnostic_category": [record.gold_category]}
        )
        scripts[script_key("disorder_check", record.id)] = _dump(
            {"id": record.id, "diagnostic_disorder": entry.code.code}
        )
        revised = (
            f"{record.narrative()}\n[Revision] The presentation now aligns "
            f"strictly with the criteria for {entry.display()}."
        )
        scripts[script_key("rewrite", record.id)] = _dump({"revised_record": revised})
    return scripts


def build_trajectory_scripts(corpus: Corpus, kb: KnowledgeBase) -> dict[str, str]:
    scripts: dict[str, str] = {}
    for record in corpus.records:
        gold_code = record.gold_disorder.code
        candidates = gold_candidates(kb, record.gold_category, gold_code)
        scripts[script_key("traj_category_reason", record.id)] = _dump(
            {
                "category_reasoning": (
                    f"{CATEGORY_OPENER} The presentation is most consistent "
                    f"with {record.gold_category}."
                ),
                "diagnostic_category": record.gold_category,
            }
        )
        scripts[script_key("traj_disorder_reason", record.id)] = _dump(
            {
                "disorder_reasoning": (
                    f"{DISORDER_OPENER} The leading suspicion is {gold_code}."
                ),
                "candidate_disorders": candidates,
            }
        )
        scripts[script_key("traj_differential_reason", record.id)] = _dump(
            {
                "differential_reasoning": (
                    f"{DIFFERENTIAL_OPENER} The criteria confirm {gold_code}."
                ),
                "confirmed_disorder": gold_code,
            }
        )
    return scripts


def build_eval_scripts(corpus: Corpus, kb: KnowledgeBase) -> dict[str, str]:
    scripts: dict[str, str] = {}
    for record in corpus.records:
        gold_code = record.gold_disorder.code
        scripts[script_key("category_classify", record.id)] = _dump(
            {"id": record.id, "diagnostic_category": [record.gold_category]}
        )
        for entry in kb.disorders_of(record.gold_category):
            code = entry.code.code
            verdict = "yes" if code == gold_code else "no"
            scripts[script_key("disorder_check", record.id, code)] = _dump(
                {"id": record.id, f"has_disorder_{code}": verdict}
            )
    return scripts


def build_all_scripts(corpus: Corpus, kb: KnowledgeBase) -> dict[str, str]:
    """One table answering refinement, trajectory, and evaluation requests.

    Eval scripts are merged last on purpose: the unkeyed disorder_check entry
    (step-2 selection) and the code-keyed entries (eval checks) coexist.
    """
    scripts = build_refine_scripts(corpus, kb)
    scripts.update(build_trajectory_scripts(corpus, kb))
    scripts.update(build_eval_scripts(corpus, kb))
    return scripts
