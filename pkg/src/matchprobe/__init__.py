"""matchprobe: a metamorphic triplet harness for embedding-based retrieval.

Builds {base, positive, negative} sentence triplets from labeled pairs,
runs them through embedding providers and distance metrics the way a
vector store would, and reports where matching picks the structurally
similar candidate over the semantically equivalent one.
"""

from .corpus import (
    Corpus,
    CorpusMetadata,
    MRCategory,
    PairRecord,
    RelationLabel,
    Sentence,
    SentencePair,
    Source,
    Triplet,
    Violation,
    corpus_hash,
    parse_corpus,
    parse_pairs,
    serialize_corpus,
    serialize_pairs,
    validate_triplet,
)

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "CorpusMetadata",
    "MRCategory",
    "PairRecord",
    "RelationLabel",
    "Sentence",
    "SentencePair",
    "Source",
    "Triplet",
    "Violation",
    "corpus_hash",
    "parse_corpus",
    "parse_pairs",
    "serialize_corpus",
    "serialize_pairs",
    "validate_triplet",
    "__version__",
]
