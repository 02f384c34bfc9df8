"""Rules that map a labeled sentence pair to its metamorphic relation.

Word-level categories come from a deterministic decision procedure over the
two token sequences (multiset comparison, single-substitution analysis with
quantifier and part-of-speech checks, sub-multiset analysis for insertions
and deletions). Sentence-level categories use length-ratio and content-word
overlap heuristics on pairs the word-level rules leave untagged.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from ..corpus import MRCategory, RelationLabel, SentencePair
from ..errors import NoDifference
from .postag import CONTENT_TAGS, PosTag, Tagger, default_tagger, load_stopwords
from .tokens import quantifier_strings, split_tokens, tokenize

#: Length-ratio window for "close in length" (restructured-translation check).
LENGTH_RATIO_WINDOW = (0.75, 1.33)
#: Minimum Jaccard overlap of content words for the restructuring check.
CONTENT_OVERLAP_MIN = 0.6
#: Minimum coverage of the shorter sentence's content words for the
#: claim-in-context check.
CLAIM_COVERAGE_MIN = 0.8
#: Maximum token-count gap for an insertion of a negation to count as one.
NEGATION_GAP_MAX = 2


@dataclass(frozen=True)
class DiffPair:
    """The first differing tokens of two equal-length sequences."""

    w1: str
    w2: str
    position: int


def find_diff(w1: Sequence[str], w2: Sequence[str]) -> DiffPair:
    """First position where the equal-length sequences disagree."""
    if len(w1) != len(w2):
        raise ValueError(f"sequences differ in length: {len(w1)} vs {len(w2)}")
    for i, (a, b) in enumerate(zip(w1, w2)):
        if a != b:
            return DiffPair(w1=a, w2=b, position=i)
    raise NoDifference("token sequences are identical")


def gold_tag(pair: SentencePair, tagger: Tagger | None = None) -> MRCategory:
    """Classify a pair into a word-level category (or Other).

    Entailment-labeled pairs are never word-level perturbations and return
    Other immediately. Identical token sequences also return Other: with no
    change there is no relation to name.
    """
    if pair.label is RelationLabel.ENTAILMENT:
        return MRCategory.OTHER
    if tagger is None:
        tagger = default_tagger()

    s1, s2 = pair.s1.text, pair.s2.text
    w1, w2 = tokenize(s1), tokenize(s2)

    if sorted(w1) == sorted(w2):
        return MRCategory.WORD_SWAP if w1 != w2 else MRCategory.OTHER

    union = set(w1) | set(w2)
    if len(w1) == len(w2) and (
        len(union) - len(w1) <= 1 or len(union) - len(w2) <= 1
    ):
        diff = find_diff(w1, w2)
        if diff.w1 in quantifier_strings(s1) and diff.w2 in quantifier_strings(s2):
            return MRCategory.QUANT_SUB
        tag1 = tagger.tag_tokens(w1, split_tokens(s1))[diff.position]
        tag2 = tagger.tag_tokens(w2, split_tokens(s2))[diff.position]
        if tag1 in CONTENT_TAGS and tag2 in CONTENT_TAGS:
            noun_like = {PosTag.NN, PosTag.PRP}
            modifier_like = {PosTag.JJ, PosTag.RB}
            if tag1 in noun_like and tag2 in noun_like:
                return MRCategory.OBJ_SUB
            if tag1 in modifier_like and tag2 in modifier_like:
                return MRCategory.NEGA_EXP
            if tag1 is PosTag.VB and tag2 is PosTag.VB:
                return MRCategory.ACT_SUB
        return MRCategory.OTHER

    c1, c2 = Counter(w1), Counter(w2)
    if c1 <= c2:
        removed, gap = c2 - c1, len(w2) - len(w1)
    elif c2 <= c1:
        removed, gap = c1 - c2, len(w1) - len(w2)
    else:
        return MRCategory.OTHER
    if gap <= NEGATION_GAP_MAX and removed["not"] > 0:
        return MRCategory.NEGA_EXP
    return MRCategory.WORD_DEL


def _content_words(tokens: Sequence[str], stopwords: frozenset[str]) -> set[str]:
    return {t for t in tokens if t not in stopwords}


def tag_sentence_level(
    pair: SentencePair, stopwords: frozenset[str] | None = None
) -> MRCategory:
    """Heuristics for whole-sentence restructurings.

    Contradictions that keep roughly the same length and share most content
    words look like restructured (mis)translations; entailments where the
    shorter sentence's content words are nearly all contained in the longer
    one look like a claim embedded in its context.
    """
    if stopwords is None:
        stopwords = _stopwords()
    w1, w2 = tokenize(pair.s1.text), tokenize(pair.s2.text)
    if not w1 or not w2:
        return MRCategory.OTHER
    content1 = _content_words(w1, stopwords)
    content2 = _content_words(w2, stopwords)

    if pair.label is RelationLabel.CONTRADICTION:
        ratio = len(w1) / len(w2)
        if LENGTH_RATIO_WINDOW[0] <= ratio <= LENGTH_RATIO_WINDOW[1]:
            union = content1 | content2
            if union and len(content1 & content2) / len(union) >= CONTENT_OVERLAP_MIN:
                return MRCategory.ERR_TRANS
        return MRCategory.OTHER

    if pair.label is RelationLabel.ENTAILMENT:
        shorter, longer = (content1, content2) if len(w1) <= len(w2) else (content2, content1)
        if shorter and len(shorter & longer) / len(shorter) >= CLAIM_COVERAGE_MIN:
            return MRCategory.ERR_NLI
        return MRCategory.OTHER

    return MRCategory.OTHER


def tag_pair(pair: SentencePair, tagger: Tagger | None = None) -> MRCategory:
    """Full classification: word-level rules first, sentence-level fallback."""
    category = gold_tag(pair, tagger)
    if category is not MRCategory.OTHER:
        return category
    return tag_sentence_level(pair)


_cached_stopwords: frozenset[str] | None = None


def _stopwords() -> frozenset[str]:
    global _cached_stopwords
    if _cached_stopwords is None:
        _cached_stopwords = load_stopwords()
    return _cached_stopwords
