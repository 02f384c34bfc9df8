"""Corpus model: parsing, serialization round-trips, invariant validation."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchprobe.corpus import (
    Corpus,
    CorpusMetadata,
    MRCategory,
    PairRecord,
    Sentence,
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
from matchprobe.errors import (
    DuplicateId,
    EmptyText,
    InvariantViolation,
    MalformedRecord,
)

from conftest import make_random_corpus

WS_RECORD = json.dumps(
    {
        "id": "t1",
        "category": "WordSwap",
        "base": {"text": "the only light farming", "source": "Collected"},
        "positive": {"text": "farming that is light and unique", "source": "Generated"},
        "negative": {"text": "the light only farming", "source": "Collected"},
    }
)


def test_single_record_parses():
    corpus = parse_corpus(WS_RECORD + "\n")
    assert len(corpus) == 1
    t = corpus.triplets[0]
    assert t.category is MRCategory.WORD_SWAP
    assert t.base.source is Source.COLLECTED
    assert t.positive.source is Source.GENERATED


def test_negative_equal_to_base_rejected():
    record = json.loads(WS_RECORD)
    record["negative"]["text"] = record["base"]["text"]
    with pytest.raises(InvariantViolation) as exc_info:
        parse_corpus(json.dumps(record))
    assert "PairwiseDistinct" in str(exc_info.value)


def test_one_record_per_category_composition():
    lines = []
    for i, category in enumerate(c for c in MRCategory if c is not MRCategory.OTHER):
        record = json.loads(WS_RECORD)
        record["id"] = f"t{i}"
        record["category"] = category.value
        record["base"]["text"] = f"base sentence number {i}"
        record["positive"]["text"] = f"positive sentence number {i}"
        record["negative"]["text"] = f"negative sentence number {i}"
        lines.append(json.dumps(record))
    corpus = parse_corpus("\n".join(lines))
    assert len(corpus) == 8
    assert all(n == 1 for n in corpus.composition().values())
    assert len(corpus.composition()) == 8


def test_empty_corpus_serializes_to_nothing():
    assert serialize_corpus(Corpus(triplets=())) == ""


def test_single_triplet_round_trip():
    corpus = parse_corpus(WS_RECORD)
    text = serialize_corpus(corpus)
    assert text.count("\n") == 1
    again = parse_corpus(text)
    assert again == corpus


def test_forty_triplet_round_trip_byte_identical():
    corpus = make_random_corpus(40, seed=7)
    once = serialize_corpus(corpus)
    twice = serialize_corpus(parse_corpus(once))
    assert once == twice


@settings(max_examples=25, deadline=None)
@given(n=st.integers(min_value=0, max_value=12), seed=st.integers(0, 2**32 - 1))
def test_round_trip_identity_property(n, seed):
    corpus = make_random_corpus(n, seed=seed)
    again = parse_corpus(serialize_corpus(corpus))
    assert again.triplets == corpus.triplets
    assert again.metadata == corpus.metadata


def test_duplicate_ids_all_reported():
    record = json.loads(WS_RECORD)
    lines = [WS_RECORD, WS_RECORD]
    record["id"] = "t2"
    lines += [json.dumps(record), json.dumps(record), json.dumps(record)]
    with pytest.raises(DuplicateId) as exc_info:
        parse_corpus("\n".join(lines))
    assert exc_info.value.ids == ["t1", "t2", "t2"]


def test_malformed_json_points_at_line():
    with pytest.raises(MalformedRecord) as exc_info:
        parse_corpus(WS_RECORD + "\nnot json\n")
    assert exc_info.value.line_no == 2


def test_missing_field_is_malformed():
    record = json.loads(WS_RECORD)
    del record["category"]
    with pytest.raises(MalformedRecord):
        parse_corpus(json.dumps(record))


def test_empty_text_rejected():
    record = json.loads(WS_RECORD)
    record["base"]["text"] = "   "
    with pytest.raises(EmptyText):
        parse_corpus(json.dumps(record))


def test_unicode_nfc_normalization_on_ingest():
    decomposed = "café one"  # e + combining accent
    composed = "café one"
    s = Sentence.make("x", decomposed)
    assert s.text == composed


def test_validate_triplet_word_swap_example():
    t = Triplet(
        id="t",
        base=Sentence.make("t.b", "The only industry in the town is light farming on the small rice paddies."),
        positive=Sentence.make("t.p", "Light farming on the small rice paddies is the only industry in the town."),
        negative=Sentence.make("t.n", "The light industry in the town is only farming on the small rice paddies."),
        category=MRCategory.WORD_SWAP,
    )
    assert validate_triplet(t) == []


def test_validate_triplet_positive_equals_base():
    base = Sentence.make("t.b", "same text here")
    t = Triplet(
        id="t",
        base=base,
        positive=Sentence.make("t.p", "same text here"),
        negative=Sentence.make("t.n", "different text here"),
        category=MRCategory.OBJ_SUB,
    )
    assert validate_triplet(t) == [Violation.PAIRWISE_DISTINCT]


def test_validate_triplet_category_other():
    t = Triplet(
        id="t",
        base=Sentence.make("t.b", "one sentence"),
        positive=Sentence.make("t.p", "two sentence"),
        negative=Sentence.make("t.n", "three sentence"),
        category=MRCategory.OTHER,
    )
    assert validate_triplet(t) == [Violation.CATEGORY_OTHER]


def test_metadata_line_round_trips():
    corpus = Corpus(
        triplets=parse_corpus(WS_RECORD).triplets,
        metadata=CorpusMetadata(name="demo", seed=99, extras={"k": "v"}),
    )
    again = parse_corpus(serialize_corpus(corpus))
    assert again.metadata == corpus.metadata


def test_corpus_hash_ignores_metadata():
    triplets = parse_corpus(WS_RECORD).triplets
    a = Corpus(triplets=triplets)
    b = Corpus(triplets=triplets, metadata=CorpusMetadata(name="other", seed=1))
    assert corpus_hash(a) == corpus_hash(b)
    assert corpus_hash(a) != corpus_hash(make_random_corpus(1, seed=3))


def test_pair_records_round_trip():
    text = (
        '{"id": "p1", "s1": "one sentence", "s2": "two sentence", "label": "Contradiction"}\n'
        '{"id": "p2", "s1": "three sentence", "s2": "four sentence", "label": "Entailment", "category": "ErrNli"}\n'
    )
    records = parse_pairs(text)
    assert [r.id for r in records] == ["p1", "p2"]
    assert records[1].category is MRCategory.ERR_NLI
    assert serialize_pairs(records) == text


def test_pair_duplicate_ids_rejected():
    line = '{"id": "p1", "s1": "a b", "s2": "c d", "label": "Neutral"}'
    with pytest.raises(DuplicateId):
        parse_pairs(line + "\n" + line)
