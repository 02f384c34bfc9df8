"""Core data model: sentences, labeled pairs, triplets, corpora, and their
line-delimited JSON serialization.

A corpus file holds one triplet record per line:

    {"id": ..., "category": ..., "base": {"text": ..., "source": ...},
     "positive": {...}, "negative": {...}}

An optional first line ``{"meta": {...}}`` carries corpus metadata (name,
creation seed, free-form extras); it is emitted only when the metadata is
non-default so that a plain list of records is also a valid corpus file.
Pair records (the tagger input) are ``{"id", "s1", "s2", "label"}`` with an
optional ``"category"`` added by tagging.

All text is NFC-normalized and trimmed on ingest so downstream tokenization
is stable regardless of the source encoding.
"""

from __future__ import annotations

import hashlib
import io
import json
import unicodedata
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Iterator

from .errors import (
    DuplicateId,
    EmptyText,
    InvariantViolation,
    MalformedRecord,
)


class Source(Enum):
    """Where a sentence came from: pulled from a dataset or generated."""

    COLLECTED = "Collected"
    GENERATED = "Generated"


class RelationLabel(Enum):
    ENTAILMENT = "Entailment"
    CONTRADICTION = "Contradiction"
    NEUTRAL = "Neutral"
    OTHER = "Other"


class MRCategory(Enum):
    WORD_SWAP = "WordSwap"
    OBJ_SUB = "ObjSub"
    ACT_SUB = "ActSub"
    NEGA_EXP = "NegaExp"
    WORD_DEL = "WordDel"
    QUANT_SUB = "QuantSub"
    ERR_TRANS = "ErrTrans"
    ERR_NLI = "ErrNli"
    OTHER = "Other"


#: Categories whose perturbation touches individual words only.
WORD_LEVEL_CATEGORIES = frozenset(
    {
        MRCategory.WORD_SWAP,
        MRCategory.OBJ_SUB,
        MRCategory.ACT_SUB,
        MRCategory.NEGA_EXP,
        MRCategory.WORD_DEL,
        MRCategory.QUANT_SUB,
    }
)

SENTENCE_LEVEL_CATEGORIES = frozenset({MRCategory.ERR_TRANS, MRCategory.ERR_NLI})


def clean_text(text: str) -> str:
    """NFC-normalize and trim; raise :class:`EmptyText` if nothing remains."""
    cleaned = unicodedata.normalize("NFC", text).strip()
    if not cleaned:
        raise EmptyText(f"empty sentence text: {text!r}")
    return cleaned


@dataclass(frozen=True)
class Sentence:
    id: str
    text: str
    source: Source = Source.COLLECTED

    @classmethod
    def make(cls, id: str, text: str, source: Source = Source.COLLECTED) -> "Sentence":
        """Construct with ingest normalization applied to the text."""
        return cls(id=id, text=clean_text(text), source=source)


@dataclass(frozen=True)
class SentencePair:
    """A labeled pair as found in the source datasets (tagger input)."""

    s1: Sentence
    s2: Sentence
    label: RelationLabel

    def __post_init__(self) -> None:
        if self.s1.id == self.s2.id:
            raise InvariantViolation(0, [f"pair sentences share id {self.s1.id!r}"])


class Violation(Enum):
    """Structural defects of a triplet; data for the caller, not exceptions."""

    PAIRWISE_DISTINCT = "PairwiseDistinct"
    CATEGORY_OTHER = "CategoryOther"
    EMPTY_TEXT = "EmptyText"


@dataclass(frozen=True)
class Triplet:
    """One test case: a base query plus a positive and a negative candidate."""

    id: str
    base: Sentence
    positive: Sentence
    negative: Sentence
    category: MRCategory

    def sentences(self) -> tuple[Sentence, Sentence, Sentence]:
        return (self.base, self.positive, self.negative)


def validate_triplet(t: Triplet) -> list[Violation]:
    """Return every violated triplet invariant (empty list when valid)."""
    violations: list[Violation] = []
    texts = [t.base.text, t.positive.text, t.negative.text]
    if any(not text.strip() for text in texts):
        violations.append(Violation.EMPTY_TEXT)
    if len(set(texts)) != 3:
        violations.append(Violation.PAIRWISE_DISTINCT)
    if t.category is MRCategory.OTHER:
        violations.append(Violation.CATEGORY_OTHER)
    return violations


@dataclass
class CorpusMetadata:
    name: str = ""
    seed: int | None = None
    extras: dict[str, str] = field(default_factory=dict)

    def is_default(self) -> bool:
        return not self.name and self.seed is None and not self.extras


@dataclass(frozen=True)
class Corpus:
    """An ordered, immutable collection of triplets plus run metadata."""

    triplets: tuple[Triplet, ...]
    metadata: CorpusMetadata = field(default_factory=CorpusMetadata)

    def __len__(self) -> int:
        return len(self.triplets)

    def __iter__(self) -> Iterator[Triplet]:
        return iter(self.triplets)

    def composition(self) -> dict[MRCategory, int]:
        """Triplet count per category, in category declaration order."""
        counts: dict[MRCategory, int] = {}
        for t in self.triplets:
            counts[t.category] = counts.get(t.category, 0) + 1
        return {c: counts[c] for c in MRCategory if c in counts}

    def unique_texts(self) -> list[str]:
        """Every distinct sentence text across all slots, in first-seen order."""
        seen: dict[str, None] = {}
        for t in self.triplets:
            for s in t.sentences():
                seen.setdefault(s.text, None)
        return list(seen)


def _sentence_to_obj(s: Sentence) -> dict:
    return {"text": s.text, "source": s.source.value}


def _sentence_from_obj(obj, sid: str, line_no: int) -> Sentence:
    if not isinstance(obj, dict) or "text" not in obj:
        raise MalformedRecord(line_no, "sentence slot must be an object with 'text'")
    try:
        source = Source(obj.get("source", "Collected"))
    except ValueError:
        raise MalformedRecord(line_no, f"unknown source {obj.get('source')!r}") from None
    try:
        return Sentence.make(sid, str(obj["text"]), source)
    except EmptyText:
        raise EmptyText(f"line {line_no}: empty text in sentence {sid!r}") from None


def triplet_to_record(t: Triplet) -> dict:
    return {
        "id": t.id,
        "category": t.category.value,
        "base": _sentence_to_obj(t.base),
        "positive": _sentence_to_obj(t.positive),
        "negative": _sentence_to_obj(t.negative),
    }


def triplet_from_record(obj: dict, line_no: int = 0) -> Triplet:
    for key in ("id", "category", "base", "positive", "negative"):
        if key not in obj:
            raise MalformedRecord(line_no, f"missing field {key!r}")
    tid = str(obj["id"])
    try:
        category = MRCategory(obj["category"])
    except ValueError:
        raise MalformedRecord(line_no, f"unknown category {obj['category']!r}") from None
    triplet = Triplet(
        id=tid,
        base=_sentence_from_obj(obj["base"], f"{tid}.base", line_no),
        positive=_sentence_from_obj(obj["positive"], f"{tid}.positive", line_no),
        negative=_sentence_from_obj(obj["negative"], f"{tid}.negative", line_no),
        category=category,
    )
    violations = validate_triplet(triplet)
    if violations:
        raise InvariantViolation(line_no, [v.value for v in violations])
    return triplet


def parse_corpus(stream: Iterable[str] | str) -> Corpus:
    """Parse line-delimited triplet records, preserving input order.

    Accepts a string or any iterable of lines. Raises on the first malformed
    line or invariant violation; duplicate ids are collected across the whole
    file and reported together.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    triplets: list[Triplet] = []
    metadata = CorpusMetadata()
    seen_ids: set[str] = set()
    duplicates: list[str] = []
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(line_no, f"invalid JSON ({exc.msg})") from None
        if not isinstance(obj, dict):
            raise MalformedRecord(line_no, "record must be a JSON object")
        if "meta" in obj and line_no == 1 and "id" not in obj:
            meta = obj["meta"]
            metadata = CorpusMetadata(
                name=str(meta.get("name", "")),
                seed=meta.get("seed"),
                extras={str(k): str(v) for k, v in meta.get("extras", {}).items()},
            )
            continue
        triplet = triplet_from_record(obj, line_no)
        if triplet.id in seen_ids:
            duplicates.append(triplet.id)
        seen_ids.add(triplet.id)
        triplets.append(triplet)
    if duplicates:
        raise DuplicateId(duplicates)
    return Corpus(triplets=tuple(triplets), metadata=metadata)


def serialize_corpus(c: Corpus) -> str:
    """Render a corpus back to line-delimited records.

    ``parse_corpus(serialize_corpus(c))`` reproduces every field, and
    re-serializing the parsed corpus is byte-identical.
    """
    lines: list[str] = []
    if not c.metadata.is_default():
        meta = {
            "meta": {
                "name": c.metadata.name,
                "seed": c.metadata.seed,
                "extras": dict(sorted(c.metadata.extras.items())),
            }
        }
        lines.append(json.dumps(meta, ensure_ascii=False))
    for t in c.triplets:
        lines.append(json.dumps(triplet_to_record(t), ensure_ascii=False))
    return "\n".join(lines) + ("\n" if lines else "")


def corpus_hash(c: Corpus) -> str:
    """Content hash over the triplet records only (metadata excluded).

    Outcome dumps embed this so reports cannot merge results computed on
    different corpora.
    """
    h = hashlib.sha256()
    for t in c.triplets:
        h.update(json.dumps(triplet_to_record(t), ensure_ascii=False).encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()


def text_hash(text: str) -> str:
    """Stable content key for one sentence text (used by vector caches)."""
    return hashlib.sha256(unicodedata.normalize("NFC", text).encode("utf-8")).hexdigest()


# --- pair records (tagger input/output) ---


@dataclass(frozen=True)
class PairRecord:
    """One line of a pair file: an id, the pair, and an optional tag."""

    id: str
    pair: SentencePair
    category: MRCategory | None = None


def pair_to_record(record: PairRecord) -> dict:
    obj: dict = {
        "id": record.id,
        "s1": record.pair.s1.text,
        "s2": record.pair.s2.text,
        "label": record.pair.label.value,
    }
    if record.category is not None:
        obj["category"] = record.category.value
    return obj


def pair_from_record(obj: dict, line_no: int = 0) -> PairRecord:
    for key in ("id", "s1", "s2", "label"):
        if key not in obj:
            raise MalformedRecord(line_no, f"missing field {key!r}")
    try:
        label = RelationLabel(obj["label"])
    except ValueError:
        raise MalformedRecord(line_no, f"unknown label {obj['label']!r}") from None
    pid = str(obj["id"])
    try:
        pair = SentencePair(
            s1=Sentence.make(f"{pid}.s1", str(obj["s1"])),
            s2=Sentence.make(f"{pid}.s2", str(obj["s2"])),
            label=label,
        )
    except EmptyText:
        raise EmptyText(f"line {line_no}: empty pair text") from None
    category: MRCategory | None = None
    if "category" in obj:
        try:
            category = MRCategory(obj["category"])
        except ValueError:
            raise MalformedRecord(line_no, f"unknown category {obj['category']!r}") from None
    return PairRecord(id=pid, pair=pair, category=category)


def parse_pairs(stream: Iterable[str] | str) -> list[PairRecord]:
    """Parse line-delimited pair records; duplicate pair ids are rejected."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    records: list[PairRecord] = []
    seen: set[str] = set()
    duplicates: list[str] = []
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(line_no, f"invalid JSON ({exc.msg})") from None
        record = pair_from_record(obj, line_no)
        if record.id in seen:
            duplicates.append(record.id)
        seen.add(record.id)
        records.append(record)
    if duplicates:
        raise DuplicateId(duplicates)
    return records


def serialize_pairs(records: Iterable[PairRecord]) -> str:
    lines = [json.dumps(pair_to_record(r), ensure_ascii=False) for r in records]
    return "\n".join(lines) + ("\n" if lines else "")


def with_metadata(c: Corpus, **changes) -> Corpus:
    """Copy of the corpus with metadata fields replaced."""
    return Corpus(triplets=c.triplets, metadata=replace(c.metadata, **changes))
