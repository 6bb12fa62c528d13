"""Layered run configuration: one JSON file, flag overrides on top,
environment variables for secrets only.

The passthrough block is copied verbatim into trainer manifests; nothing in
this package reads those values.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .errors import SchemaError


class BackendSettings(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    base_url: str = "http://127.0.0.1:8080/v1"
    auth_env_var: str = "PSYDX_API_KEY"
    max_retries: int = Field(default=3, ge=0)
    max_in_flight: int = Field(default=4, ge=1)


class DecodeSettings(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    temperature: float = Field(default=0.0, ge=0.0)
    max_tokens: int = Field(default=2048, ge=1)
    seed: int | None = None
    sampling_temperature: float = Field(default=1.0, gt=0.0)


class RewardSettings(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    epsilon_norm: float = Field(default=1e-4, gt=0.0)
    epsilon_clip: float = Field(default=0.2, gt=0.0, lt=1.0)
    group_size: int = Field(default=8, ge=1)
    phase_table: tuple[tuple[float, float, float], ...] = ((2, 1, 1), (1, 2, 1), (1, 1, 2))
    total_epochs: int = Field(default=5, ge=1)


class PassthroughSettings(BaseModel):
    """Trainer hyperparameters carried through to manifests untouched."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    sft_lr: float = 5e-5
    sft_batch: int = 128
    sft_epochs: int = 3
    actor_lr: float = 3e-6
    critic_lr: float = 1e-5
    rl_batch: int = 64
    rl_epochs: int = 3
    discount: float = 1.0
    kl_coeff: float = 0.001


class PathsSettings(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kb_path: str | None = None
    out_dir: str = "out"


class ServiceSettings(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    host: str = "127.0.0.1"
    port: int = Field(default=8765, ge=1, le=65535)


class AppConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    backend: BackendSettings = BackendSettings()
    decode: DecodeSettings = DecodeSettings()
    reward: RewardSettings = RewardSettings()
    passthrough: PassthroughSettings = PassthroughSettings()
    paths: PathsSettings = PathsSettings()
    service: ServiceSettings = ServiceSettings()


def load_config(path: str | Path | None = None) -> AppConfig:
    """Defaults when no file is given; otherwise parse and validate JSON."""
    if path is None:
        return AppConfig()
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError(f"config {path} must hold a JSON object")
    try:
        return AppConfig.model_validate(doc)
    except ValidationError as exc:
        raise SchemaError(f"bad config {path}: {exc}") from exc


def override_section(config: AppConfig, section: str, **fields: Any) -> AppConfig:
    """New AppConfig with some fields of one section replaced.

    None values are treated as "flag not given" and skipped.
    """
    updates = {k: v for k, v in fields.items() if v is not None}
    if not updates:
        return config
    current = getattr(config, section)
    try:
        replaced = current.model_copy(update=updates)
        replaced = type(current).model_validate(replaced.model_dump())
        return AppConfig.model_validate(
            {**config.model_dump(), section: replaced.model_dump()}
        )
    except ValidationError as exc:
        raise SchemaError(f"bad override for {section}: {exc}") from exc


def trainer_manifest(config: AppConfig) -> dict[str, Any]:
    """The block external trainers read; passthrough values verbatim."""
    return {
        "passthrough": config.passthrough.model_dump(),
        "reward": {
            "epsilon_norm": config.reward.epsilon_norm,
            "epsilon_clip": config.reward.epsilon_clip,
            "group_size": config.reward.group_size,
            "phase_table": [list(row) for row in config.reward.phase_table],
            "total_epochs": config.reward.total_epochs,
        },
    }
