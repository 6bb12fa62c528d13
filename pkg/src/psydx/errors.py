"""Exception family for the psydx pipeline.

Every domain failure raises a subclass of PsydxError so the CLI can map
domain errors to exit code 1 and usage errors to exit code 2.
"""

from __future__ import annotations


class PsydxError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(PsydxError):
    """A corpus line is not valid JSON or violates the record schema."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class LabelError(PsydxError):
    """A gold label is missing, comorbid, or inconsistent with the knowledge base."""


class DuplicateIdError(PsydxError):
    """Two records in one corpus share a case id."""


class SchemaError(PsydxError):
    """A knowledge-base document does not match the expected shape."""


class IntegrityError(PsydxError):
    """Knowledge-base cross-references are dangling or duplicated."""


class UnknownCategoryError(PsydxError):
    """A category name is not part of the loaded taxonomy."""


class NotFoundError(PsydxError):
    """A disorder code has no knowledge-base entry."""


class MissingBindingError(PsydxError):
    """A prompt template placeholder has no binding."""


class TransportError(PsydxError):
    """The completion backend failed after exhausting retries."""

    def __init__(self, message: str, retries: int = 0):
        self.retries = retries
        super().__init__(message)


class BackendRefusalError(PsydxError):
    """The completion backend returned an explicit refusal."""


class MockScriptMissingError(PsydxError):
    """The scripted mock backend has no entry for a request. Not retried."""


class UnparseableError(PsydxError):
    """A response is not strict JSON even after the recovery passes."""


class InvalidCategoryError(PsydxError):
    """A backend response named a category outside the taxonomy."""


class InvalidDisorderError(PsydxError):
    """A backend response named a disorder code outside the allowed set."""


class EmptyRewriteError(PsydxError):
    """A rewrite response carried an empty revised record."""


class RefinementError(PsydxError):
    """A record failed refinement under the fail policy."""

    def __init__(self, message: str, case_id: str | None = None, step: str | None = None):
        self.case_id = case_id
        self.step = step
        super().__init__(message)


class StageParseError(PsydxError):
    """A trajectory stage response lacked the required JSON fields."""

    def __init__(self, message: str, stage: int | None = None, raw_text: str = ""):
        self.stage = stage
        self.raw_text = raw_text
        super().__init__(message)


class DuplicateCandidateError(PsydxError):
    """A hypothesis list contains the same disorder code twice."""


class EmptyGroupError(PsydxError):
    """A reward group has no members."""


class LengthMismatchError(PsydxError):
    """Ratio and advantage vectors differ in length."""


class NonPositiveRatioError(PsydxError):
    """An importance ratio is zero or negative."""


class EmptyScheduleError(PsydxError):
    """A curriculum phase table has no phases."""


class InvalidWeightsError(PsydxError):
    """Stage weights are negative or do not sum to one."""


class EmptyEvaluationError(PsydxError):
    """Metrics were requested over an empty corpus."""


class UnknownCaseIdError(PsydxError):
    """A prediction references a case id absent from the corpus."""


class ProtocolError(PsydxError):
    """A reward-service request or response violates the wire schema."""


class UsageError(PsydxError):
    """Bad CLI invocation; maps to exit code 2."""
