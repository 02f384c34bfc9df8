"""Relation tagging: tokenization, part-of-speech lookup, and the rules that
classify a labeled sentence pair into a metamorphic relation category."""

from .tokens import Quantifier, extract_quantifiers, quantifier_strings, tokenize
from .postag import LexiconTagger, PosTag, default_tagger, load_stopwords
from .tagger import DiffPair, find_diff, gold_tag, tag_pair, tag_sentence_level

__all__ = [
    "DiffPair",
    "LexiconTagger",
    "PosTag",
    "Quantifier",
    "default_tagger",
    "extract_quantifiers",
    "find_diff",
    "gold_tag",
    "load_stopwords",
    "quantifier_strings",
    "tag_pair",
    "tag_sentence_level",
    "tokenize",
]
