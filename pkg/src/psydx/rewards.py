"""Process-level rewards, curriculum weight schedules, and GRPO math.

Everything here is a pure function over its arguments. Scoring never does
I/O and never mutates shared state, so callers may fan out freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable, NamedTuple, Sequence

from .errors import (
    DuplicateCandidateError,
    EmptyGroupError,
    EmptyScheduleError,
    InvalidWeightsError,
    LengthMismatchError,
    NonPositiveRatioError,
    UnknownCategoryError,
)

DEFAULT_EPSILON_NORM = 1e-4
DEFAULT_EPSILON_CLIP = 0.2
DEFAULT_GROUP_SIZE = 8
# Curriculum ratio table; one row per contiguous phase of training epochs.
DEFAULT_PHASE_TABLE: tuple[tuple[float, float, float], ...] = (
    (2, 1, 1),
    (1, 2, 1),
    (1, 1, 2),
)
DEFAULT_TOTAL_EPOCHS = 5

_WEIGHT_TOL = 1e-12
_HYPO_WINDOW = 4


@dataclass(frozen=True)
class StageWeights:
    """Normalized mixing weights for the three reward components."""

    alpha_cat: float
    alpha_hypo: float
    alpha_diff: float

    def __post_init__(self) -> None:
        values = (self.alpha_cat, self.alpha_hypo, self.alpha_diff)
        if any(v < 0 for v in values):
            raise InvalidWeightsError(f"weights must be >= 0, got {values}")
        total = math.fsum(values)
        if abs(total - 1.0) > _WEIGHT_TOL:
            raise InvalidWeightsError(f"weights must sum to 1, got sum {total!r}")

    @classmethod
    def from_ratios(cls, ratios: Sequence[float]) -> "StageWeights":
        if len(ratios) != 3:
            raise InvalidWeightsError(f"expected 3 ratios, got {len(ratios)}")
        if any(r < 0 for r in ratios):
            raise InvalidWeightsError(f"ratios must be >= 0, got {tuple(ratios)}")
        total = math.fsum(ratios)
        if total <= 0:
            raise InvalidWeightsError("ratios must have a positive sum")
        return cls(*(r / total for r in ratios))

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha_cat, self.alpha_hypo, self.alpha_diff)


@dataclass(frozen=True)
class RewardBreakdown:
    r_cat: int
    r_hypo: float
    r_diff: int
    weights: StageWeights
    composite: float

    @classmethod
    def compute(cls, r_cat: int, r_hypo: float, r_diff: int,
                weights: StageWeights) -> "RewardBreakdown":
        composite = (
            weights.alpha_cat * r_cat
            + weights.alpha_hypo * r_hypo
            + weights.alpha_diff * r_diff
        )
        return cls(r_cat=r_cat, r_hypo=r_hypo, r_diff=r_diff,
                   weights=weights, composite=composite)

    def as_dict(self) -> dict[str, Any]:
        return {
            "r_cat": self.r_cat,
            "r_hypo": self.r_hypo,
            "r_diff": self.r_diff,
            "weights": {
                "alpha_cat": self.weights.alpha_cat,
                "alpha_hypo": self.weights.alpha_hypo,
                "alpha_diff": self.weights.alpha_diff,
            },
            "composite": self.composite,
        }


@dataclass(frozen=True)
class GrpoGroup:
    rewards: tuple[float, ...]
    advantages: tuple[float, ...]
    epsilon_norm: float


@dataclass(frozen=True)
class ClipParams:
    epsilon_clip: float = DEFAULT_EPSILON_CLIP

    def __post_init__(self) -> None:
        if not 0 < self.epsilon_clip < 1:
            raise ValueError(f"epsilon_clip must be in (0,1), got {self.epsilon_clip}")


class GoldLabels(NamedTuple):
    category: str
    disorder: str


def reward_category(pred_category: str | None, gold_category: str,
                    categories: Iterable[str] | None = None) -> int:
    """Exact-match category indicator; comparison is case-sensitive.

    When a taxonomy listing is supplied, the gold label is validated against
    it. Predictions are model output and may be anything; a name outside the
    taxonomy is simply wrong.
    """
    if categories is not None and gold_category not in set(categories):
        raise UnknownCategoryError(f"gold category not in taxonomy: {gold_category!r}")
    return 1 if pred_category == gold_category else 0


def _norm_code(code: Any) -> str:
    return str(code).strip().upper()


def reward_hypothesis(candidates: Sequence[Any], gold: Any) -> float:
    """Rank-discounted hit reward over the top 4 candidates.

    Gold at 1-based rank i gives 1 - (i-1)/4 for i <= 4, else 0.
    """
    normed = [_norm_code(c) for c in candidates]
    seen = set()
    for code in normed:
        if code in seen:
            raise DuplicateCandidateError(f"duplicate candidate code {code!r}")
        seen.add(code)
    gold_code = _norm_code(gold)
    for i, code in enumerate(normed, start=1):
        if code == gold_code:
            return 1.0 - (i - 1) / _HYPO_WINDOW if i <= _HYPO_WINDOW else 0.0
    return 0.0


def reward_differential(pred: Any, gold: Any) -> int:
    if pred is None:
        return 0
    return 1 if _norm_code(pred) == _norm_code(gold) else 0


def _traj_outcome(traj: Any) -> tuple[Any, Any, Any]:
    """Accepts a built Trajectory or the plain wire mapping."""
    if isinstance(traj, dict):
        return traj.get("category"), traj.get("candidates"), traj.get("final")
    stage1 = getattr(traj, "stage1", None)
    stage2 = getattr(traj, "stage2", None)
    stage3 = getattr(traj, "stage3", None)
    return (
        stage1.category if stage1 is not None else None,
        list(stage2.candidates) if stage2 is not None else None,
        stage3.confirmed if stage3 is not None else None,
    )


def score_trajectory(traj: Any, gold: GoldLabels,
                     weights: StageWeights) -> RewardBreakdown:
    """Composite reward for one trajectory. Never raises on malformed
    stages; each broken component scores 0 so every group member stays
    scoreable."""
    category, candidates, final = _traj_outcome(traj)
    r_cat = 1 if category == gold.category else 0
    if candidates is None:
        r_hypo = 0.0
    else:
        try:
            r_hypo = reward_hypothesis(candidates, gold.disorder)
        except DuplicateCandidateError:
            r_hypo = 0.0
    r_diff = reward_differential(final, gold.disorder)
    return RewardBreakdown.compute(r_cat, r_hypo, r_diff, weights)


def phase_lengths(n_phases: int, total_epochs: int) -> list[int]:
    """Split total_epochs into n_phases contiguous runs, as evenly as
    possible, earlier phases taking the remainder."""
    if n_phases < 1:
        raise EmptyScheduleError("phase table is empty")
    if total_epochs < 1:
        raise ValueError(f"total_epochs must be >= 1, got {total_epochs}")
    base, rem = divmod(total_epochs, n_phases)
    return [base + (1 if p < rem else 0) for p in range(n_phases)]


def phase_of(epoch: int, n_phases: int, total_epochs: int) -> int:
    if not 0 <= epoch < total_epochs:
        raise ValueError(f"epoch {epoch} outside [0, {total_epochs})")
    upper = 0
    for p, length in enumerate(phase_lengths(n_phases, total_epochs)):
        upper += length
        if epoch < upper:
            return p
    raise AssertionError("unreachable: phases cover all epochs")


def schedule_weights(phase_table: Sequence[Sequence[float]], epoch: int,
                     total_epochs: int) -> StageWeights:
    if len(phase_table) == 0:
        raise EmptyScheduleError("phase table is empty")
    p = phase_of(epoch, len(phase_table), total_epochs)
    return StageWeights.from_ratios(phase_table[p])


def group_advantages(rewards: Sequence[float],
                     epsilon_norm: float = DEFAULT_EPSILON_NORM) -> list[float]:
    """Group-normalized advantages: (R_i - mean) / (population sigma + eps)."""
    if len(rewards) == 0:
        raise EmptyGroupError("reward group is empty")
    if epsilon_norm <= 0:
        raise ValueError(f"epsilon_norm must be > 0, got {epsilon_norm}")
    n = len(rewards)
    mu = math.fsum(rewards) / n
    sigma = math.sqrt(math.fsum((r - mu) ** 2 for r in rewards) / n)
    denom = sigma + epsilon_norm
    return [(r - mu) / denom for r in rewards]


def clipped_objective(ratios: Sequence[float], advantages: Sequence[float],
                      clip: ClipParams = ClipParams()) -> float:
    """Mean over i of min(r_i * A_i, clamp(r_i, 1-eps, 1+eps) * A_i)."""
    if len(ratios) != len(advantages):
        raise LengthMismatchError(
            f"{len(ratios)} ratios vs {len(advantages)} advantages"
        )
    if len(ratios) == 0:
        raise EmptyGroupError("objective over an empty group is undefined")
    lo, hi = 1.0 - clip.epsilon_clip, 1.0 + clip.epsilon_clip
    terms = []
    for r, a in zip(ratios, advantages):
        if r <= 0:
            raise NonPositiveRatioError(f"importance ratio must be > 0, got {r}")
        clamped = min(max(r, lo), hi)
        terms.append(min(r * a, clamped * a))
    return math.fsum(terms) / len(terms)


def score_group(trajectories: Sequence[Any], gold: GoldLabels,
                weights: StageWeights,
                epsilon_norm: float = DEFAULT_EPSILON_NORM,
                ) -> tuple[GrpoGroup, list[RewardBreakdown]]:
    if len(trajectories) == 0:
        raise EmptyGroupError("trajectory group is empty")
    breakdowns = [score_trajectory(t, gold, weights) for t in trajectories]
    rewards = [b.composite for b in breakdowns]
    advantages = group_advantages(rewards, epsilon_norm)
    group = GrpoGroup(
        rewards=tuple(rewards),
        advantages=tuple(advantages),
        epsilon_norm=epsilon_norm,
    )
    return group, breakdowns
