"""Generation clients behind one interface.

The HTTP client speaks ``{"template_id", "variables", "seed"}`` ->
``{"text"}``; prompt templates live as versioned files next to this module
and are referenced by id on the wire. The stub client produces rule-based
rewrites offline and is fully determined by the request seed, which is what
CI and the bundled fixtures run against.
"""

from __future__ import annotations

import os
import random
import re
import time
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Callable, Protocol

from ..errors import ClientError, GenerationFailed
from ..tagging.tokens import tokenize

POSITIVE_REWRITE_TEMPLATE = "positive-rewrite-v1"
EVIDENCE_REMOVAL_TEMPLATE = "evidence-removal-v1"

_TEMPLATE_FILES = {
    POSITIVE_REWRITE_TEMPLATE: "positive_rewrite_v1.txt",
    EVIDENCE_REMOVAL_TEMPLATE: "evidence_removal_v1.txt",
}


class GenerationKind(Enum):
    POSITIVE_REWRITE = "PositiveRewrite"
    NEGATIVE_EVIDENCE_REMOVAL = "NegativeEvidenceRemoval"


_REQUIRED_VARIABLES = {
    GenerationKind.POSITIVE_REWRITE: ("base",),
    GenerationKind.NEGATIVE_EVIDENCE_REMOVAL: ("claim", "context"),
}

_KIND_TEMPLATES = {
    GenerationKind.POSITIVE_REWRITE: POSITIVE_REWRITE_TEMPLATE,
    GenerationKind.NEGATIVE_EVIDENCE_REMOVAL: EVIDENCE_REMOVAL_TEMPLATE,
}


@dataclass(frozen=True)
class GenerationRequest:
    kind: GenerationKind
    variables: dict[str, str]
    seed: int
    template_id: str = ""

    def __post_init__(self):
        missing = [v for v in _REQUIRED_VARIABLES[self.kind] if not self.variables.get(v)]
        if missing:
            raise ValueError(f"{self.kind.value} request missing variables: {missing}")
        if not self.template_id:
            object.__setattr__(self, "template_id", _KIND_TEMPLATES[self.kind])


def render_template(template_id: str, variables: dict[str, str]) -> str:
    """Fill a bundled prompt template (useful for logging and audits)."""
    filename = _TEMPLATE_FILES.get(template_id)
    if filename is None:
        raise KeyError(f"unknown template id {template_id!r}")
    text = resources.files("matchprobe.generation").joinpath("templates", filename).read_text("utf-8")
    return text.format(**variables)


class GenerationClient(Protocol):
    def generate(self, request: GenerationRequest) -> str: ...


class HttpGenerationClient:
    """POSTs generation requests to an endpoint; bearer token from env."""

    def __init__(
        self,
        endpoint: str,
        api_key_env: str = "",
        timeout: float = 60.0,
        max_retries: int = 3,
        post: Callable[..., object] | None = None,
    ):
        self.endpoint = endpoint
        self.api_key_env = api_key_env
        self.timeout = timeout
        self.max_retries = max_retries
        if post is None:
            import requests

            session = requests.Session()

            def post(url, **kwargs):
                return session.post(url, **kwargs)

        self._post = post

    def generate(self, request: GenerationRequest) -> str:
        headers = {"Content-Type": "application/json"}
        if self.api_key_env:
            token = os.environ.get(self.api_key_env, "")
            if token:
                headers["Authorization"] = f"Bearer {token}"
        body = {
            "template_id": request.template_id,
            "variables": dict(request.variables),
            "seed": request.seed,
        }
        last_error: Exception | None = None
        for attempt in range(self.max_retries):
            try:
                response = self._post(
                    self.endpoint, json=body, headers=headers, timeout=self.timeout
                )
                status = getattr(response, "status_code", 200)
                if status >= 400:
                    raise ClientError(f"HTTP {status} from {self.endpoint}")
                return str(response.json()["text"])
            except ClientError as exc:
                last_error = exc
            except Exception as exc:
                last_error = ClientError(str(exc))
            if attempt + 1 < self.max_retries:
                time.sleep(min(0.1 * 2**attempt, 2.0))
        raise last_error  # type: ignore[misc]


# Synonym table for the stub rewriter; intentionally small and boring.
_SYNONYMS = {
    "think": "believe",
    "know": "are aware of",
    "speak": "talk",
    "big": "large",
    "small": "little",
    "quick": "fast",
    "begin": "start",
    "end": "finish",
    "buy": "purchase",
    "build": "construct",
    "built": "constructed",
    "said": "stated",
    "show": "demonstrate",
    "help": "assist",
    "good": "fine",
    "city": "town",
    "house": "home",
    "replaced": "superseded",
    "received": "welcomed",
}

_HEDGES = (
    ("It is recorded that ", ""),
    ("According to the account, ", ""),
    ("The record states that ", ""),
    ("", ", as the account puts it"),
)

_PLACEHOLDERS = ("invention", "device", "object", "item", "event", "material")

_LEADIN_RE = re.compile(r"^(In|On|At|By|During|After|Before|Since)\s+([^,]+),\s+(.*)$")


def _rotate_leadin(text: str) -> str | None:
    """Move a leading prepositional phrase to the end of the sentence."""
    m = _LEADIN_RE.match(text.strip())
    if not m:
        return None
    prep, phrase, rest = m.groups()
    rest = rest.rstrip()
    terminal = "."
    if rest and rest[-1] in ".!?":
        terminal, rest = rest[-1], rest[:-1].rstrip()
    if not rest:
        return None
    body = rest[0].upper() + rest[1:]
    return f"{body} {prep.lower()} {phrase}{terminal}"


def _stopword_set() -> frozenset[str]:
    from ..tagging.postag import load_stopwords

    return load_stopwords()


class StubGenerationClient:
    """Deterministic offline generator.

    Positive rewrites rotate a leading phrase, substitute from a fixed
    synonym table, and wrap the sentence in a seed-chosen hedge so the
    output shares meaning but not structure with the input. Evidence
    removal replaces content words shared between claim and context with
    generic placeholders. ``canned`` overrides the rules for specific
    inputs, keyed by (template_id, primary input text).
    """

    def __init__(self, canned: dict[tuple[str, str], str] | None = None):
        self.canned = dict(canned or {})
        self._stopwords = _stopword_set()

    def generate(self, request: GenerationRequest) -> str:
        if request.kind is GenerationKind.POSITIVE_REWRITE:
            key = (request.template_id, request.variables["base"])
            if key in self.canned:
                return self.canned[key]
            return self._rewrite_positive(request.variables["base"], request.seed)
        key = (request.template_id, request.variables["context"])
        if key in self.canned:
            return self.canned[key]
        return self._remove_evidence(
            request.variables["claim"], request.variables["context"], request.seed
        )

    def _rewrite_positive(self, base: str, seed: int) -> str:
        rng = random.Random(seed)
        text = _rotate_leadin(base) or base
        words = text.split()
        replaced = [
            _SYNONYMS.get(w.lower(), w) if w.lower() in _SYNONYMS else w for w in words
        ]
        text = " ".join(replaced)
        prefix, suffix = _HEDGES[rng.randrange(len(_HEDGES))]
        if prefix:
            text = prefix + text[0].lower() + text[1:]
        if suffix:
            terminal = ""
            if text and text[-1] in ".!?":
                terminal, text = text[-1], text[:-1]
            text = text + suffix + terminal
        return text

    def _remove_evidence(self, claim: str, context: str, seed: int) -> str:
        rng = random.Random(seed)
        claim_words = {t for t in tokenize(claim) if t not in self._stopwords}
        context_words = [t for t in tokenize(context) if t not in self._stopwords]
        shared = [w for w in dict.fromkeys(context_words) if w in claim_words]
        # Prefer wording changes over number changes.
        shared.sort(key=lambda w: w[0].isdigit())
        if not shared:
            return context
        text = context
        offset = rng.randrange(len(_PLACEHOLDERS))
        for i, word in enumerate(shared[:3]):
            placeholder = _PLACEHOLDERS[(offset + i) % len(_PLACEHOLDERS)]
            pattern = re.compile(rf"\b{re.escape(word)}\b", re.IGNORECASE)
            text = pattern.sub(placeholder, text)
        return text


class ScriptedGenerationClient:
    """Returns a fixed sequence of outputs, one per call (for retry tests)."""

    def __init__(self, outputs: list[str]):
        self.outputs = list(outputs)
        self.calls: list[GenerationRequest] = []

    def generate(self, request: GenerationRequest) -> str:
        self.calls.append(request)
        if not self.outputs:
            raise GenerationFailed("scripted client ran out of outputs")
        return self.outputs.pop(0)
