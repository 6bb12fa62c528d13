"""ICD-11 chapter-6 code handling.

Codes in this chapter start with "6" followed by alphanumerics (e.g. 6A20,
6C4D). Matching is case-insensitive on input; the canonical form is upper
case and that is what every comparison in the package uses.
"""

from __future__ import annotations

import re

from pydantic import BaseModel, ConfigDict, field_validator

CODE_RE = re.compile(r"^6[A-Z0-9]+$")

# Codes embedded in free text, e.g. "... the diagnosis is 6A71." Word
# boundaries keep fragments like has_disorder_6A20 from matching.
CODE_SCAN_RE = re.compile(r"\b6[A-Z][0-9][0-9A-Z]\b")


def normalize_code(code: str) -> str:
    """Upper-case a chapter-6 code, validating its shape."""
    canon = code.strip().upper()
    if not CODE_RE.match(canon):
        raise ValueError(f"not an ICD-11 chapter-6 code: {code!r}")
    return canon


def is_code(text: str) -> bool:
    try:
        normalize_code(text)
    except ValueError:
        return False
    return True


class IcdCode(BaseModel):
    """A chapter-6 code plus its official display name."""

    model_config = ConfigDict(frozen=True)

    code: str
    display_name: str = ""

    @field_validator("code")
    @classmethod
    def _canonical(cls, value: str) -> str:
        return normalize_code(value)
