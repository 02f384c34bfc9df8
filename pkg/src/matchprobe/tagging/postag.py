"""Coarse part-of-speech tagging behind a small interface.

The bundled default is a lexicon lookup (word -> most frequent coarse tag)
with suffix fallbacks, which keeps the core free of model dependencies. An
external tagger can be swapped in by implementing :class:`Tagger`.
"""

from __future__ import annotations

from enum import Enum
from importlib import resources
from typing import Protocol, Sequence

from .tokens import split_tokens, tokenize


class PosTag(Enum):
    NN = "NN"
    PRP = "PRP"
    JJ = "JJ"
    RB = "RB"
    VB = "VB"
    OTHER = "OtherTag"


#: The coarse classes the relation rules care about.
CONTENT_TAGS = frozenset({PosTag.NN, PosTag.PRP, PosTag.JJ, PosTag.RB, PosTag.VB})


class Tagger(Protocol):
    def tag_tokens(
        self, tokens: Sequence[str], original: Sequence[str] | None = None
    ) -> list[PosTag]:
        """One tag per token; ``original`` carries the unlowered forms."""
        ...


def _data_text(name: str) -> str:
    return resources.files("matchprobe.tagging").joinpath("data", name).read_text("utf-8")


def load_stopwords() -> frozenset[str]:
    """The bundled function-word list used by the sentence-level heuristics."""
    words = {line.strip() for line in _data_text("stopwords.txt").splitlines()}
    return frozenset(w for w in words if w and not w.startswith("#"))


class LexiconTagger:
    """Word-list tagger: lexicon lookup, then suffix rules, then defaults.

    Fallback order for unknown words: -ly -> RB; -ing/-ed -> VB;
    -ous/-ful/-ive -> JJ; capitalized in the original text -> NN; else NN.
    """

    def __init__(self, lexicon: dict[str, PosTag] | None = None):
        self.lexicon = lexicon if lexicon is not None else load_lexicon()

    def tag_word(self, word: str, original: str | None = None) -> PosTag:
        tag = self.lexicon.get(word)
        if tag is not None:
            return tag
        if word.endswith("ly"):
            return PosTag.RB
        if word.endswith(("ing", "ed")):
            return PosTag.VB
        if word.endswith(("ous", "ful", "ive")):
            return PosTag.JJ
        if original is not None and original[:1].isupper():
            return PosTag.NN
        return PosTag.NN

    def tag_tokens(
        self, tokens: Sequence[str], original: Sequence[str] | None = None
    ) -> list[PosTag]:
        if original is not None and len(original) != len(tokens):
            original = None
        return [
            self.tag_word(tok, original[i] if original is not None else None)
            for i, tok in enumerate(tokens)
        ]

    def tag_text(self, text: str) -> list[tuple[str, PosTag]]:
        """Tokenize a sentence and tag it, using original casing for fallbacks."""
        original = split_tokens(text)
        tokens = tokenize(text)
        return list(zip(tokens, self.tag_tokens(tokens, original)))

    def words_with_tag(self, tag: PosTag) -> list[str]:
        return sorted(w for w, t in self.lexicon.items() if t is tag)


def load_lexicon() -> dict[str, PosTag]:
    """Parse the bundled ``word<TAB>TAG`` lexicon file."""
    lexicon: dict[str, PosTag] = {}
    for line_no, line in enumerate(_data_text("lexicon.tsv").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word, tag = line.split("\t")
            lexicon[word] = PosTag(tag)
        except ValueError:
            raise ValueError(f"lexicon.tsv line {line_no}: bad entry {line!r}") from None
    return lexicon


_default: LexiconTagger | None = None


def default_tagger() -> LexiconTagger:
    """Process-wide tagger with the bundled lexicon, loaded once."""
    global _default
    if _default is None:
        _default = LexiconTagger()
    return _default
