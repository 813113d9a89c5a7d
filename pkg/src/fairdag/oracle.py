"""Causal oracles: answer "does X cause Y?" with a confidence in [0, 1].

Two implementations share one protocol.  ``SimulatedOracle`` is keyed to
a ground-truth graph and flips each answer independently with a
configurable probability, so discovery runs are fully reproducible.
``LiveOracle`` talks JSON-over-HTTP to a chat-completion endpoint inside
one multi-turn session, parses ``<Answer>Yes</Answer>`` replies, and
derives its confidence from returned token log-probabilities (mean token
probability of the answer span; 0.5 when log-probs are absent).

Every oracle call appends exactly one QueryRecord, which is how the
discovery loop accounts for its query budget.
"""
from __future__ import annotations

import json
import logging
import math
import os
import re
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Sequence

import numpy as np

from .errors import (
    ArgumentError,
    ConfigurationError,
    MalformedAnswerError,
    OracleUnavailableError,
)
from .graph import CausalGraph

log = logging.getLogger(__name__)

ENV_BASE_URL = "CD_LLM_BASE_URL"
ENV_MODEL = "CD_LLM_MODEL"
ENV_API_KEY = "CD_LLM_API_KEY"

ROOTS_PAIR = ("*", "*")

_ANSWER_RE = re.compile(r"<answer>(.*?)</answer>", re.IGNORECASE | re.DOTALL)


def load_prompt(name: str) -> str:
    return resources.files("fairdag.prompts").joinpath(name).read_text("utf-8").rstrip("\n")


def format_pair_prompt(template: str, x: str, y: str) -> str:
    """Substitute the standalone X and Y placeholders of the template."""
    out = re.sub(r"\bX\b", x, template)
    return re.sub(r"\bY\b", y, out)


def format_roots_prompt(template: str, variables: Sequence[str]) -> str:
    return template.replace("VARIABLES", ", ".join(variables))


def parse_answer(text: str) -> bool:
    """Extract the Yes/No verdict from an <Answer>...</Answer> span."""
    m = _ANSWER_RE.search(text or "")
    if not m:
        raise MalformedAnswerError("no <Answer> tag in reply", raw_text=text or "")
    verdict = m.group(1).strip().lower()
    if verdict == "yes":
        return True
    if verdict == "no":
        return False
    raise MalformedAnswerError(f"unrecognized verdict {verdict!r}", raw_text=text or "")


def parse_name_list(text: str) -> list[str]:
    m = _ANSWER_RE.search(text or "")
    if not m:
        raise MalformedAnswerError("no <Answer> tag in reply", raw_text=text or "")
    return [p.strip() for p in m.group(1).split(",") if p.strip()]


@dataclass(frozen=True)
class OracleAnswer:
    causal: bool
    confidence: float
    raw_text: str
    degraded: bool = False

    def __post_init__(self):
        if not 0.0 <= self.confidence <= 1.0:
            raise ArgumentError("confidence must lie in [0, 1]")


@dataclass(frozen=True)
class QueryRecord:
    pair: tuple[str, str]
    answer: OracleAnswer
    timestamp: float
    turn: int

    def to_dict(self) -> dict:
        return {
            "x": self.pair[0],
            "y": self.pair[1],
            "causal": self.answer.causal,
            "confidence": self.answer.confidence,
            "raw_text": self.answer.raw_text,
            "degraded": self.answer.degraded,
            "turn": self.turn,
            "timestamp": self.timestamp,
        }


@dataclass(frozen=True)
class OracleConfig:
    kind: str = "simulated"
    temperature: float = 0.0
    flip_probability: float = 0.0
    seed: int = 0
    base_url: str = ""
    model: str = ""
    api_key: str = ""
    max_session_chars: int = 60_000
    retries: int = 3
    strict_parsing: bool = False

    def __post_init__(self):
        if self.kind not in ("simulated", "live"):
            raise ArgumentError(f"unknown oracle kind {self.kind!r}")
        if self.temperature < 0.0:
            raise ArgumentError("temperature must be >= 0")
        if not 0.0 <= self.flip_probability <= 1.0:
            raise ArgumentError("flip_probability must lie in [0, 1]")


def write_query_log(records: Sequence[QueryRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_dict(), sort_keys=True))
            fh.write("\n")


class SimulatedOracle:
    """Deterministic oracle keyed to a truth graph.

    Each pair answer equals the truth adjacency XOR a Bernoulli(epsilon)
    flip; the roots query perturbs membership of each variable in the
    in-degree-zero set the same way.  Confidence is fixed at 1 - epsilon.
    """

    def __init__(self, truth: CausalGraph, flip_probability: float = 0.0, seed: int = 0):
        if not 0.0 <= flip_probability <= 1.0:
            raise ArgumentError("flip_probability must lie in [0, 1]")
        self.truth = truth
        self.epsilon = flip_probability
        self._rng = np.random.default_rng(seed)
        self.records: list[QueryRecord] = []
        self._turn = 0

    def _record(self, pair: tuple[str, str], answer: OracleAnswer) -> OracleAnswer:
        self._turn += 1
        self.records.append(QueryRecord(pair, answer, time.time(), self._turn))
        return answer

    def query_edge(self, x: str, y: str) -> OracleAnswer:
        if x == y:
            raise ArgumentError("x and y must differ")
        i = self.truth.index_of(x)
        j = self.truth.index_of(y)
        true_edge = self.truth.has_edge(i, j)
        flipped = bool(self._rng.random() < self.epsilon)
        causal = true_edge ^ flipped
        answer = OracleAnswer(
            causal=causal,
            confidence=1.0 - self.epsilon,
            raw_text=f"sim:{'yes' if causal else 'no'}",
        )
        return self._record((x, y), answer)

    def query_independent_roots(self, variables: Sequence[str]) -> set[str]:
        if not variables:
            raise ArgumentError("need at least one variable")
        true_roots = {self.truth.nodes[i] for i in self.truth.roots()}
        roots: set[str] = set()
        for name in variables:
            self.truth.index_of(name)
            member = name in true_roots
            if self._rng.random() < self.epsilon:
                member = not member
            if member:
                roots.add(name)
        answer = OracleAnswer(
            causal=bool(roots),
            confidence=1.0 - self.epsilon,
            raw_text="sim:roots:" + ",".join(sorted(roots)),
        )
        self._record(ROOTS_PAIR, answer)
        return roots


def _default_transport(url: str, payload: dict, api_key: str, timeout: float) -> dict:
    import requests

    headers = {"Content-Type": "application/json"}
    if api_key:
        headers["Authorization"] = f"Bearer {api_key}"
    resp = requests.post(url, json=payload, headers=headers, timeout=timeout)
    resp.raise_for_status()
    return resp.json()


class LiveOracle:
    """Chat-completion client maintaining one multi-turn session.

    The transport is injectable for testing: any callable taking
    (url, payload, api_key, timeout) and returning the decoded JSON body.
    """

    def __init__(
        self,
        config: OracleConfig,
        descriptions: dict[str, str] | None = None,
        transport: Callable[[str, dict, str, float], dict] | None = None,
        sleep: Callable[[float], None] = time.sleep,
        timeout: float = 60.0,
    ):
        base_url = config.base_url or os.environ.get(ENV_BASE_URL, "")
        model = config.model or os.environ.get(ENV_MODEL, "")
        api_key = config.api_key or os.environ.get(ENV_API_KEY, "")
        if not base_url:
            raise ConfigurationError(f"live oracle needs {ENV_BASE_URL} or base_url")
        if not model:
            raise ConfigurationError(f"live oracle needs {ENV_MODEL} or model")
        if not api_key:
            raise ConfigurationError(f"live oracle needs {ENV_API_KEY} or api_key")
        self.config = config
        self.url = base_url.rstrip("/") + "/chat/completions"
        self.model = model
        self.api_key = api_key
        self.descriptions = descriptions or {}
        self.transport = transport or _default_transport
        self.sleep = sleep
        self.timeout = timeout
        self.records: list[QueryRecord] = []
        self._turn = 0
        self._messages: list[dict] = [{"role": "system", "content": load_prompt("system.txt")}]
        self._pair_template = load_prompt("pair_query.txt")
        self._roots_template = load_prompt("roots_query.txt")

    # ---- session plumbing --------------------------------------------------

    def _describe(self, name: str) -> str:
        desc = self.descriptions.get(name, "")
        return f"{name} ({desc})" if desc else name

    def _truncate_session(self) -> None:
        size = sum(len(m["content"]) for m in self._messages)
        dropped = 0
        while size > self.config.max_session_chars and len(self._messages) > 3:
            removed = self._messages.pop(1)  # oldest non-system turn
            size -= len(removed["content"])
            dropped += 1
        if dropped:
            log.warning("session truncated: dropped %d oldest turns", dropped)

    def _exchange(self, prompt: str) -> tuple[str, float | None]:
        """One request/response turn; returns (text, mean answer-token prob)."""
        self._messages.append({"role": "user", "content": prompt})
        self._truncate_session()
        payload = {
            "model": self.model,
            "temperature": self.config.temperature,
            "messages": list(self._messages),
            "logprobs": True,
        }
        last_exc: Exception | None = None
        for attempt in range(self.config.retries):
            try:
                body = self.transport(self.url, payload, self.api_key, self.timeout)
                break
            except Exception as exc:  # transport-level failure
                last_exc = exc
                if attempt + 1 < self.config.retries:
                    self.sleep(2.0 ** attempt)
        else:
            self._messages.pop()
            raise OracleUnavailableError(f"transport failed after {self.config.retries} attempts: {last_exc}")

        choice = body["choices"][0]
        text = choice.get("message", {}).get("content") or ""
        self._messages.append({"role": "assistant", "content": text})
        return text, _answer_token_probability(choice, text)

    def _record(self, pair: tuple[str, str], answer: OracleAnswer) -> OracleAnswer:
        self._turn += 1
        self.records.append(QueryRecord(pair, answer, time.time(), self._turn))
        return answer

    # ---- queries -------------------------------------------------------------

    def query_edge(self, x: str, y: str) -> OracleAnswer:
        if x == y:
            raise ArgumentError("x and y must differ")
        prompt = format_pair_prompt(self._pair_template, self._describe(x), self._describe(y))
        text, confidence = "", None
        for _ in range(self.config.retries):
            text, confidence = self._exchange(prompt)
            try:
                causal = parse_answer(text)
            except MalformedAnswerError:
                continue
            answer = OracleAnswer(
                causal=causal,
                confidence=confidence if confidence is not None else 0.5,
                raw_text=text,
            )
            return self._record((x, y), answer)
        if self.config.strict_parsing:
            raise MalformedAnswerError("unparseable reply after retries", raw_text=text)
        log.warning("malformed oracle reply for (%s, %s); recording degraded answer", x, y)
        answer = OracleAnswer(causal=False, confidence=0.5, raw_text=text, degraded=True)
        return self._record((x, y), answer)

    def query_independent_roots(self, variables: Sequence[str]) -> set[str]:
        if not variables:
            raise ArgumentError("need at least one variable")
        prompt = format_roots_prompt(
            self._roots_template, [self._describe(v) for v in variables]
        )
        text = ""
        for _ in range(self.config.retries):
            text, confidence = self._exchange(prompt)
            try:
                names = parse_name_list(text)
            except MalformedAnswerError:
                continue
            known = {v for v in variables}
            roots = {n for n in names if n in known}
            answer = OracleAnswer(
                causal=bool(roots),
                confidence=confidence if confidence is not None else 0.5,
                raw_text=text,
            )
            self._record(ROOTS_PAIR, answer)
            return roots
        if self.config.strict_parsing:
            raise MalformedAnswerError("unparseable roots reply after retries", raw_text=text)
        log.warning("malformed roots reply; recording degraded empty set")
        self._record(ROOTS_PAIR, OracleAnswer(False, 0.5, text, degraded=True))
        return set()


def _answer_token_probability(choice: dict, text: str) -> float | None:
    """Mean probability of the tokens spanning the <Answer> block, if logprobs
    came back; otherwise None (caller substitutes the 0.5 default)."""
    content = (choice.get("logprobs") or {}).get("content")
    if not content:
        return None
    m = _ANSWER_RE.search(text)
    probs: list[float] = []
    if m:
        lo, hi = m.span()
        pos = 0
        for tok in content:
            tok_text = tok.get("token", "")
            start, end = pos, pos + len(tok_text)
            pos = end
            if end <= lo or start >= hi:
                continue
            if "logprob" in tok:
                probs.append(math.exp(tok["logprob"]))
    if not probs:
        probs = [math.exp(t["logprob"]) for t in content if "logprob" in t]
    if not probs:
        return None
    return float(min(max(sum(probs) / len(probs), 0.0), 1.0))


def build_oracle(
    config: OracleConfig,
    truth: CausalGraph | None = None,
    descriptions: dict[str, str] | None = None,
):
    """Construct the oracle an OracleConfig describes."""
    if config.kind == "simulated":
        if truth is None:
            raise ConfigurationError("simulated oracle requires a truth graph")
        return SimulatedOracle(truth, config.flip_probability, config.seed)
    return LiveOracle(config, descriptions=descriptions)
