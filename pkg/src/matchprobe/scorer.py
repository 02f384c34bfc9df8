"""Clients for order-sensitive text-matching scorers.

A scorer maps an ordered sentence pair to a similarity in [0, 1]; higher
means more similar. Servers that produce distance-like values must adapt
them before this boundary: the gateway enforces the range and never clamps
silently. The HTTP contract is ``{"s1", "s2"}`` -> ``{"score"}``; recorded
cassettes are line-delimited ``{"s1_hash", "s2_hash", "score"}``.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Protocol

from .corpus import text_hash
from .errors import RangeViolation, ScorerError
from .tagging.tokens import tokenize


class ScorerSemantics(Enum):
    SIMILARITY = "Similarity"
    ENTAILMENT_PROBABILITY = "EntailmentProbability"


@dataclass(frozen=True)
class ScorerSpec:
    name: str
    endpoint: str = ""
    semantics: ScorerSemantics = ScorerSemantics.SIMILARITY
    order_sensitive: bool = False
    timeout: float = 30.0
    max_retries: int = 3
    api_key_env: str = ""


class Scorer(Protocol):
    spec: ScorerSpec

    def score(self, s1: str, s2: str) -> float: ...


def check_range(value: float, origin: str) -> float:
    if not (0.0 <= value <= 1.0):
        raise RangeViolation(f"{origin} returned {value} outside [0, 1]")
    return float(value)


class HttpScorer:
    """POSTs ordered pairs to a scorer endpoint; bearer token from env."""

    def __init__(self, spec: ScorerSpec, post: Callable[..., object] | None = None):
        self.spec = spec
        if post is None:
            import requests

            session = requests.Session()

            def post(url, **kwargs):
                return session.post(url, **kwargs)

        self._post = post

    def score(self, s1: str, s2: str) -> float:
        headers = {"Content-Type": "application/json"}
        if self.spec.api_key_env:
            token = os.environ.get(self.spec.api_key_env, "")
            if token:
                headers["Authorization"] = f"Bearer {token}"
        last_error: Exception | None = None
        for attempt in range(self.spec.max_retries):
            try:
                response = self._post(
                    self.spec.endpoint,
                    json={"s1": s1, "s2": s2},
                    headers=headers,
                    timeout=self.spec.timeout,
                )
                status = getattr(response, "status_code", 200)
                if status >= 400:
                    raise ScorerError(f"HTTP {status} from {self.spec.endpoint}")
                value = float(response.json()["score"])
                return check_range(value, self.spec.name)
            except RangeViolation:
                raise
            except ScorerError as exc:
                last_error = exc
            except Exception as exc:
                last_error = ScorerError(str(exc))
            if attempt + 1 < self.spec.max_retries:
                time.sleep(min(0.1 * 2**attempt, 2.0))
        raise last_error  # type: ignore[misc]


class CassetteRecorder:
    """Wraps a scorer and appends every (ordered) query to a cassette file."""

    def __init__(self, inner: Scorer, path: str | Path):
        self.inner = inner
        self.spec = inner.spec
        self.path = Path(path)
        self._seen: set[tuple[str, str]] = set()

    def score(self, s1: str, s2: str) -> float:
        value = self.inner.score(s1, s2)
        key = (text_hash(s1), text_hash(s2))
        if key not in self._seen:
            self._seen.add(key)
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(
                    json.dumps({"s1_hash": key[0], "s2_hash": key[1], "score": value})
                    + "\n"
                )
        return value


class CassetteScorer:
    """Replays a recorded cassette; unknown pairs are an error, not a guess."""

    def __init__(self, path: str | Path, name: str = "cassette", order_sensitive: bool = True):
        self.spec = ScorerSpec(name=name, order_sensitive=order_sensitive)
        self._scores: dict[tuple[str, str], float] = {}
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    key = (record["s1_hash"], record["s2_hash"])
                    self._scores[key] = float(record["score"])
                except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                    raise ScorerError(f"{path}:{line_no}: bad cassette record ({exc})") from None

    def score(self, s1: str, s2: str) -> float:
        key = (text_hash(s1), text_hash(s2))
        try:
            return check_range(self._scores[key], self.spec.name)
        except KeyError:
            raise ScorerError(f"cassette has no score for this ordered pair") from None


def _normalize_text(text: str) -> str:
    return " ".join(tokenize(text))


class ConstantScorer:
    """Returns one fixed score for every pair."""

    def __init__(self, value: float = 0.5):
        self.spec = ScorerSpec(name=f"const-{value}", order_sensitive=False)
        self.value = check_range(value, "constant scorer")

    def score(self, s1: str, s2: str) -> float:
        return self.value


class TokenOverlapScorer:
    """Order-insensitive Jaccard overlap of token sets; score(x, x) == 1."""

    def __init__(self):
        self.spec = ScorerSpec(name="token-overlap", order_sensitive=False)

    def score(self, s1: str, s2: str) -> float:
        a, b = set(tokenize(s1)), set(tokenize(s2))
        union = a | b
        if not union:
            return 1.0
        return len(a & b) / len(union)


class ContainmentScorer:
    """Order-sensitive exact-substring rule: 1.0 when the second sentence
    appears verbatim inside the first (the first then carries all of the
    second's content), else 0.0. Comparison runs on joined word tokens, so
    case and edge punctuation do not matter."""

    def __init__(self):
        self.spec = ScorerSpec(
            name="substring-containment",
            semantics=ScorerSemantics.ENTAILMENT_PROBABILITY,
            order_sensitive=True,
        )

    def score(self, s1: str, s2: str) -> float:
        hay, needle = _normalize_text(s1), _normalize_text(s2)
        return 1.0 if needle and needle in hay else 0.0
