"""Whitespace tokenization and numeric-quantifier extraction.

The same tokenizer feeds relation tagging, quantifier substitution, and the
bag-of-words embedder, so that "same word multiset" means the same thing
everywhere in the pipeline.
"""

from __future__ import annotations

import re
import string
from typing import NamedTuple

#: Signed integer with optional decimal part; maximal matches, left to right.
QUANTIFIER_RE = re.compile(r"-?\d+(?:\.\d+)?")

_PUNCT = string.punctuation


def _clean_token(raw: str) -> str:
    # Trailing punctuation goes first so "8.0," loses the comma but keeps the
    # interior decimal point; a leading minus sign survives only on numbers.
    t = raw.rstrip(_PUNCT)
    if QUANTIFIER_RE.fullmatch(t):
        return t
    return t.lstrip(_PUNCT)


def split_tokens(text: str) -> list[str]:
    """Split on whitespace and strip edge punctuation, keeping original case."""
    out = []
    for raw in text.split():
        t = _clean_token(raw)
        if t:
            out.append(t)
    return out


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens; numbers like ``8.0`` survive intact."""
    return [t.lower() for t in split_tokens(text)]


class Quantifier(NamedTuple):
    text: str
    start: int
    end: int


def extract_quantifiers(text: str) -> list[Quantifier]:
    """Every maximal numeric match with its character span, in order."""
    return [Quantifier(m.group(), m.start(), m.end()) for m in QUANTIFIER_RE.finditer(text)]


def quantifier_strings(text: str) -> list[str]:
    return [q.text for q in extract_quantifiers(text)]
