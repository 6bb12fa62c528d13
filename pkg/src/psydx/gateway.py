"""Completion gateway: one entry point in front of two model backends.

The scripted mock backend answers from a key->response table so pipeline runs
are reproducible offline; the HTTP backend speaks the common chat-completions
wire shape. Retry, concurrency limiting, strict-JSON recovery, and the audit
log live here so backends stay dumb.
"""

from __future__ import annotations

import json
import os
import re
import threading
import time
from pathlib import Path
from typing import Any, Callable, Literal, Protocol

import httpx
from pydantic import BaseModel, ConfigDict, Field

from . import prompts
from .errors import (
    BackendRefusalError,
    MockScriptMissingError,
    TransportError,
    UnparseableError,
)


class DecodeParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    temperature: float = Field(default=0.0, ge=0.0)
    max_tokens: int = Field(default=2048, ge=1)
    seed: int | None = None


class CompletionRequest(BaseModel):
    model_config = ConfigDict(frozen=True)

    template_id: Literal[
        "category_classify",
        "disorder_check",
        "rewrite",
        "traj_category_reason",
        "traj_disorder_reason",
        "traj_differential_reason",
    ]
    bindings: dict[str, str]
    # None means "use the gateway's configured decode defaults".
    decode_params: DecodeParams | None = None
    case_id: str | None = None
    code: str | None = None
    # 0 on the first try; 1 on the single parse-failure retry, which also
    # appends the format reminder and selects a script's retry_text.
    attempt: int = Field(default=0, ge=0)


class BackendMeta(BaseModel):
    model_config = ConfigDict(frozen=True)

    backend_id: str
    latency: float
    retries: int


class CompletionResponse(BaseModel):
    model_config = ConfigDict(frozen=True)

    raw_text: str
    # Set iff strict-JSON parsing (with recovery) succeeded on raw_text.
    parsed_json: Any | None = None
    backend_meta: BackendMeta


_FENCE_RE = re.compile(r"\A```[a-zA-Z0-9_-]*[ \t]*\r?\n(.*)\r?\n?```\s*\Z", re.S)


def _first_balanced_object(text: str) -> str | None:
    start = text.find("{")
    if start < 0:
        return None
    depth = 0
    in_string = False
    escaped = False
    for i in range(start, len(text)):
        ch = text[i]
        if in_string:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_string = False
            continue
        if ch == '"':
            in_string = True
        elif ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth == 0:
                return text[start : i + 1]
    return None


def parse_strict_json(raw_text: str, recovery: bool = True) -> Any:
    """Parse model output as JSON, with up to three passes.

    Pass 1 parses as-is. With recovery enabled, pass 2 strips one enclosing
    code fence, and pass 3 extracts the first balanced {...} block (string
    aware, so braces inside JSON strings don't confuse it).
    """
    try:
        return json.loads(raw_text)
    except (json.JSONDecodeError, TypeError):
        pass
    if recovery:
        fenced = _FENCE_RE.match(raw_text.strip())
        if fenced:
            try:
                return json.loads(fenced.group(1))
            except json.JSONDecodeError:
                pass
        block = _first_balanced_object(raw_text)
        if block is not None:
            try:
                return json.loads(block)
            except json.JSONDecodeError:
                pass
    snippet = raw_text[:120].replace("\n", "\\n")
    raise UnparseableError(f"not valid JSON after recovery passes: {snippet!r}")


class _TransientFailure(Exception):
    """Internal signal that one backend attempt failed retryably."""


class Backend(Protocol):
    backend_id: str

    def attempt_once(self, request: CompletionRequest, prompt: str) -> tuple[str, float]:
        """Return (raw_text, latency_seconds) or raise.

        Raises _TransientFailure for retryable faults, BackendRefusalError or
        MockScriptMissingError for terminal ones.
        """
        ...


def script_key(template_id: str, case_id: str | None, code: str | None = None) -> str:
    parts = [template_id, case_id or ""]
    if code:
        parts.append(code)
    return "|".join(parts)


class MockBackend:
    """Deterministic scripted backend.

    Scripts map ``template_id|case_id`` (plus ``|code`` for per-disorder
    checks) to either a response string or an object with optional knobs:
    ``text``, ``retry_text`` (served when request.attempt >= 1),
    ``fail_times`` (raise that many transient failures first), and
    ``refuse`` (always raise BackendRefusalError).
    """

    backend_id = "mock"

    def __init__(self, scripts: dict[str, Any]):
        self._scripts = dict(scripts)
        self._failures_left: dict[str, int] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_file(cls, path: str | Path) -> "MockBackend":
        with open(path, encoding="utf-8") as fh:
            scripts = json.load(fh)
        if not isinstance(scripts, dict):
            raise ValueError(f"mock script file {path} must hold a JSON object")
        return cls(scripts)

    def _entry_for(self, request: CompletionRequest) -> tuple[str, Any]:
        key = script_key(request.template_id, request.case_id, request.code)
        if key in self._scripts:
            return key, self._scripts[key]
        raise MockScriptMissingError(f"no scripted response for key {key!r}")

    def attempt_once(self, request: CompletionRequest, prompt: str) -> tuple[str, float]:
        key, entry = self._entry_for(request)
        if isinstance(entry, str):
            return entry, 0.0
        if not isinstance(entry, dict):
            raise ValueError(f"script entry for {key!r} must be a string or object")
        if entry.get("refuse"):
            raise BackendRefusalError(f"scripted refusal for key {key!r}")
        with self._lock:
            left = self._failures_left.get(key)
            if left is None:
                left = int(entry.get("fail_times", 0))
            if left > 0:
                self._failures_left[key] = left - 1
                raise _TransientFailure(f"scripted transient failure for key {key!r}")
            self._failures_left[key] = 0
        if request.attempt >= 1 and "retry_text" in entry:
            return str(entry["retry_text"]), 0.0
        return str(entry["text"]), 0.0


class HttpBackend:
    """OpenAI-style chat-completions client over httpx."""

    backend_id = "http"

    def __init__(self, base_url: str, auth_env_var: str = "", model: str = "default",
                 timeout: float = 60.0, transport: httpx.BaseTransport | None = None):
        self._base_url = base_url.rstrip("/")
        self._model = model
        headers = {}
        token = os.environ.get(auth_env_var, "") if auth_env_var else ""
        if token:
            headers["Authorization"] = f"Bearer {token}"
        self._client = httpx.Client(timeout=timeout, headers=headers, transport=transport)

    def attempt_once(self, request: CompletionRequest, prompt: str) -> tuple[str, float]:
        payload: dict[str, Any] = {
            "model": self._model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": request.decode_params.temperature,
            "max_tokens": request.decode_params.max_tokens,
        }
        if request.decode_params.seed is not None:
            payload["seed"] = request.decode_params.seed
        started = time.monotonic()
        try:
            resp = self._client.post(f"{self._base_url}/chat/completions", json=payload)
        except httpx.HTTPError as exc:
            raise _TransientFailure(str(exc)) from exc
        latency = time.monotonic() - started
        if resp.status_code == 429 or resp.status_code >= 500:
            raise _TransientFailure(f"status {resp.status_code}")
        if resp.status_code != 200:
            raise BackendRefusalError(f"status {resp.status_code}: {resp.text[:200]}")
        try:
            body = resp.json()
            text = body["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise BackendRefusalError(f"malformed completion body: {exc}") from exc
        if text is None:
            raise BackendRefusalError("completion had no message content")
        return str(text), latency

    def close(self) -> None:
        self._client.close()


class Gateway:
    """Renders prompts, calls the backend with retry, and audits every call.

    The audit log gets exactly one line per complete() call, successes and
    failures alike. Entries carry a process-local sequence number instead of
    timestamps so scripted runs produce identical bytes.
    """

    def __init__(self, backend: Backend, max_retries: int = 3, max_in_flight: int = 4,
                 audit_path: str | Path | None = None, backoff_base: float = 0.05,
                 recovery: bool = True,
                 sleeper: Callable[[float], None] = time.sleep,
                 default_decode: DecodeParams | None = None):
        if max_retries < 0:
            raise ValueError("max_retries must be >= 0")
        if max_in_flight < 1:
            raise ValueError("max_in_flight must be >= 1")
        self._backend = backend
        self._default_decode = default_decode or DecodeParams()
        self._max_retries = max_retries
        self._backoff_base = backoff_base
        self._recovery = recovery
        self._sleeper = sleeper
        self._sem = threading.BoundedSemaphore(max_in_flight)
        self._audit_path = Path(audit_path) if audit_path is not None else None
        self._audit_lock = threading.Lock()
        self._seq = 0
        if self._audit_path is not None:
            self._audit_path.parent.mkdir(parents=True, exist_ok=True)
            self._audit_path.write_text("", encoding="utf-8")

    def render(self, request: CompletionRequest) -> str:
        prompt = prompts.render(request.template_id, request.bindings)
        if request.attempt >= 1:
            prompt += prompts.FORMAT_REMINDER
        return prompt

    def _audit(self, request: CompletionRequest, status: str, retries: int,
               latency: float, raw_text: str | None, error: str | None) -> None:
        if self._audit_path is None:
            return
        entry = {
            "template_id": request.template_id,
            "case_id": request.case_id,
            "code": request.code,
            "attempt": request.attempt,
            "backend": self._backend.backend_id,
            "status": status,
            "retries": retries,
            "latency": latency,
        }
        if raw_text is not None:
            entry["raw_text"] = raw_text
        if error is not None:
            entry["error"] = error
        with self._audit_lock:
            entry = {"seq": self._seq, **entry}
            self._seq += 1
            with open(self._audit_path, "a", encoding="utf-8", newline="\n") as fh:
                fh.write(json.dumps(entry, ensure_ascii=False, separators=(",", ":")))
                fh.write("\n")

    def complete(self, request: CompletionRequest) -> CompletionResponse:
        if request.decode_params is None:
            request = request.model_copy(update={"decode_params": self._default_decode})
        try:
            prompt = self.render(request)
        except Exception as exc:
            self._audit(request, "render_error", 0, 0.0, None, str(exc))
            raise
        retries = 0
        with self._sem:
            while True:
                try:
                    raw_text, latency = self._backend.attempt_once(request, prompt)
                    break
                except _TransientFailure as exc:
                    if retries >= self._max_retries:
                        self._audit(request, "transport_error", retries, 0.0, None, str(exc))
                        raise TransportError(
                            f"backend failed after {retries} retries: {exc}",
                            retries=retries,
                        ) from exc
                    self._sleeper(self._backoff_base * (2**retries))
                    retries += 1
                except BackendRefusalError as exc:
                    self._audit(request, "refused", retries, 0.0, None, str(exc))
                    raise
                except MockScriptMissingError as exc:
                    self._audit(request, "missing_script", retries, 0.0, None, str(exc))
                    raise
        try:
            parsed = parse_strict_json(raw_text, recovery=self._recovery)
        except UnparseableError:
            parsed = None
        self._audit(request, "ok", retries, latency, raw_text, None)
        return CompletionResponse(
            raw_text=raw_text,
            parsed_json=parsed,
            backend_meta=BackendMeta(
                backend_id=self._backend.backend_id, latency=latency, retries=retries
            ),
        )
