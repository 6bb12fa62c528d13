"""Prompt templates for the six pipeline tasks, plus binding builders.

Bodies are plain text with ``$placeholder`` slots (``string.Template``), so
JSON braces in output samples need no escaping. Knowledge-base content is
injected verbatim through the binding builders, never paraphrased.

Template ids and their JSON output contracts:

- ``category_classify``        -> {"id", "diagnostic_category": [names]}
- ``disorder_check``           -> shape given per call by $output_sample:
                                  {"id", "has_disorder_<code>": "yes"|"no"}
                                  for one-disorder checks, or
                                  {"id", "diagnostic_disorder": "<code>"}
                                  for pick-one-of-the-candidates calls
- ``rewrite``                  -> {"revised_record": "..."}
- ``traj_category_reason``     -> {"category_reasoning", "diagnostic_category"}
- ``traj_disorder_reason``     -> {"disorder_reasoning", "candidate_disorders"}
- ``traj_differential_reason`` -> {"differential_reasoning", "confirmed_disorder"}
"""

from __future__ import annotations

import re
from string import Template

from .errors import MissingBindingError
from .corpus import CaseRecord
from .kb import (
    CategoryEntry,
    DisorderEntry,
    KnowledgeBase,
    format_category_menu,
    format_criteria,
    format_criteria_menu,
    format_disorder_menu,
    format_manifestations,
)

TEMPLATE_IDS = (
    "category_classify",
    "disorder_check",
    "rewrite",
    "traj_category_reason",
    "traj_disorder_reason",
    "traj_differential_reason",
)

_BODIES: dict[str, str] = {
    "category_classify": """\
Task
You are a psychiatric diagnostic expert. I will now provide the patient's \
medical history. Please analyze the provided medical information and give the \
corresponding diagnosis, i.e., the relevant category. I will also give you a \
list of all categories and their corresponding brief explanations.

Reference for Diagnostic Categories and Explanations
$categories

Output Format:
The diagnostic results should be output in JSON format, including:
- "diagnostic_category": Choose the most likely category or categories from \
the above list of disorders.

Note
- Do not output '''json or similar content, strictly follow the output \
example format.

Output Example:
-------------
{
"id":"$case_id",
"diagnostic_category":["Disorders specifically associated with stress"]
}

Input:
- Test medical record: $record
""",
    "disorder_check": """\
Task
You are a psychiatric diagnostic expert. I will provide the patient's medical \
record, along with the disorder(s) under consideration and the corresponding \
diagnostic criteria. Your task is to judge the patient strictly against the \
criteria given and report the diagnosis exactly in the requested output shape.

Disorder and Diagnostic Criteria
$criteria

The diagnosis process should also take into account the patient's detailed \
medical history, family history, and clinical presentation to ensure the \
exclusion of other potential causes.

Output Format:
- Provide the diagnosis result in JSON format.
- Do not include any extra formatting like '''json or similar. Strictly \
follow the output sample format.

Output Sample:
$output_sample

Input:
- Patient's medical record: $record
""",
    "rewrite": """\
Task Definition
You are a professional psychiatrist. You are given an anonymized clinical \
case that needs to be revised and completed to strictly align with the \
diagnostic criteria of $disorder. Any irrelevant or non-conforming symptoms \
should be removed.

Input
You will receive the following information for ICD-11 code $code:
Diagnostic Criteria
$criteria

Clinical Manifestations
$manifestations

Record to Revise
$record

Core Requirements
- The revised case must fully meet the diagnostic criteria of the target \
disorder. If any core criteria are missing, you must complete them through \
generation.
- Remove unrelated symptoms or information to avoid introducing comorbid or \
confounding conditions.

Output Format
Output in JSON format only, without any explanations or ```json tags, as \
follows:

{
"revised_record": "..."
}
""",
    "traj_category_reason": """\
You are an experienced psychiatric expert with extensive clinical diagnostic \
experience. You will first be provided with: the patient's medical record, \
diagnostic category, and clinical definition, and need to supplement the \
reasoning process between the two.

Requirements:
- Act as a professional doctor, presenting your internal diagnostic monologue.
- Start with the patient's medical record, gradually combining the clinical \
definition standards to pinpoint the category.
- Evidence-based reasoning should naturally link the reasoning process with \
the definition.
- Begin with: "Alright, let me go through the medical reasoning step by step. \
First, I need to combine the symptom combinations and the course of the \
illness to frame the broad syndrome category this patient belongs to..."

Input Information
- Patient Medical Record: $record
- Diagnostic Category: $category
- Clinical Definition: $definition

Output Example
{
    "category_reasoning": "Alright, let me go through the medical reasoning \
step by step. First, I need to combine the symptom combinations and the \
course of the illness to frame the broad syndrome category this patient \
belongs to...",
    "diagnostic_category": "$category"
}
""",
    "traj_disorder_reason": """\
You are an experienced psychiatric expert with extensive clinical diagnostic \
experience. You will first be provided with: the patient's medical record, \
the corresponding list of disorders, and clinical manifestations. Your task \
is to list the possible corresponding disorders the patient may have based \
on the provided information.

Requirements:
- Act as a professional doctor, presenting your internal diagnostic monologue.
- Start with the patient's medical record, gradually combining the clinical \
manifestations to pinpoint 2-3 suspected disorders.
- Use evidence-based reasoning to naturally and closely connect the reasoning \
process with the clinical manifestations.
- Begin with: "Next, I need to work within the syndrome range and, combining \
clinical symptoms, deduce the possible disorders..."

Input Information:
- Patient's Medical Record: $record
- Candidate Disorder List: $disorders

Output Example:
{
    "disorder_reasoning": "Next, I need to work within the syndrome range \
and, combining clinical symptoms, deduce the possible disorders...",
    "candidate_disorders": ["<CODE>", "<CODE>"]
}
""",
    "traj_differential_reason": """\
You are an experienced psychiatric expert with extensive clinical diagnostic \
experience. You will first be provided with: the patient's medical record, a \
list of suspected disorders, the corresponding diagnostic criteria, and the \
final confirmed diagnosis. Your task is to supplement the differential \
diagnostic reasoning process.

Requirements:
- Act as a professional doctor, presenting your internal diagnostic monologue.
- Strictly follow the diagnostic criteria for differential diagnosis, and \
conclude the diagnosis as $final_code.
- Use evidence-based reasoning to naturally and closely link the differential \
reasoning process with the diagnostic criteria.
- Begin with: "Finally, I need to combine the diagnostic criteria and key \
differential points to complete the differentiation and confirm the final \
diagnosis..."

Input Information:
- Patient's Medical Record: $record
- Candidate Disorder List and Diagnostic Criteria: $criteria
- Final Confirmed Diagnosis: $final_code

Output Example:
{
    "differential_reasoning": "Finally, I need to combine the diagnostic \
criteria and key differential points to complete the differentiation and \
confirm the final diagnosis...",
    "confirmed_disorder": "$final_code"
}
""",
}

TEMPLATES: dict[str, Template] = {tid: Template(body) for tid, body in _BODIES.items()}

# A format reminder appended on the single unparseable-output retry.
FORMAT_REMINDER = (
    "\n\nReminder: your previous answer could not be parsed. Respond with the "
    "JSON object only, exactly in the sample format, with no surrounding text "
    "or code fences."
)

_IDENT_RE = re.compile(r"\$(?:\{([_a-z][_a-z0-9]*)\}|([_a-z][_a-z0-9]*))", re.I)


def placeholders(template_id: str) -> set[str]:
    body = _BODIES.get(template_id)
    if body is None:
        raise ValueError(f"unknown template id {template_id!r}")
    return {a or b for a, b in _IDENT_RE.findall(body)}


def render(template_id: str, bindings: dict[str, str]) -> str:
    """Substitute bindings into a template body.

    Every placeholder must be bound; unused extra bindings are ignored so
    callers can pass audit fields alongside.
    """
    needed = placeholders(template_id)
    missing = sorted(needed - set(bindings))
    if missing:
        raise MissingBindingError(
            f"template {template_id!r} missing bindings: {', '.join(missing)}"
        )
    return TEMPLATES[template_id].substitute(
        {k: str(v) for k, v in bindings.items() if k in needed}
    )


def category_classify_bindings(record: CaseRecord, kb: KnowledgeBase) -> dict[str, str]:
    return {
        "case_id": record.id,
        "categories": format_category_menu(kb),
        "record": record.narrative(),
    }


def disorder_check_bindings(record: CaseRecord, entry: DisorderEntry) -> dict[str, str]:
    """One-disorder yes/no criteria check."""
    sample = (
        "{\n"
        f'    "id": "{record.id}",\n'
        f'    "has_disorder_{entry.code.code}": "no"\n'
        "}"
    )
    return {
        "criteria": format_criteria(entry),
        "output_sample": sample,
        "record": record.narrative(),
    }


def disorder_select_bindings(record: CaseRecord, category: CategoryEntry) -> dict[str, str]:
    """Pick the single most plausible disorder among a category's candidates."""
    sample = (
        "{\n"
        f'    "id": "{record.id}",\n'
        '    "diagnostic_disorder": "<CODE from the candidate list>"\n'
        "}"
    )
    return {
        "criteria": format_criteria_menu(category.disorders),
        "output_sample": sample,
        "record": record.narrative(),
    }


def rewrite_bindings(record_text: str, entry: DisorderEntry) -> dict[str, str]:
    return {
        "disorder": entry.display(),
        "code": entry.code.code,
        "criteria": format_criteria(entry),
        "manifestations": format_manifestations(entry),
        "record": record_text,
    }


def traj_category_bindings(record: CaseRecord, kb: KnowledgeBase) -> dict[str, str]:
    cat = kb.category(record.gold_category)
    return {
        "record": record.narrative(),
        "category": cat.name,
        "definition": cat.definition,
    }


def traj_disorder_bindings(record: CaseRecord, kb: KnowledgeBase) -> dict[str, str]:
    entries = kb.disorders_of(record.gold_category)
    return {
        "record": record.narrative(),
        "disorders": format_disorder_menu(entries),
    }


def traj_differential_bindings(record: CaseRecord, kb: KnowledgeBase,
                               candidates: list[str]) -> dict[str, str]:
    entries = [kb.lookup(c) for c in candidates]
    return {
        "record": record.narrative(),
        "criteria": format_criteria_menu(entries),
        "final_code": record.gold_disorder.code,
    }
