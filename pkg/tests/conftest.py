"""Shared fixtures: bundled corpora, random-corpus generator, fake transports."""

from __future__ import annotations

import random
from importlib import resources
from pathlib import Path

import pytest

from matchprobe.corpus import (
    Corpus,
    CorpusMetadata,
    MRCategory,
    Sentence,
    Source,
    Triplet,
    parse_corpus,
)

DATA_DIR = Path(__file__).parent / "data"

_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


def record_criterion(name: str) -> None:
    _ACCEPTANCE_RESULTS.append((name, "PASS"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, status in _ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status}  {name}")


def bundled_corpus(name: str) -> Corpus:
    text = resources.files("matchprobe").joinpath("data", f"{name}.jsonl").read_text("utf-8")
    return parse_corpus(text)


@pytest.fixture(scope="session")
def sample32() -> Corpus:
    return bundled_corpus("sample32")


@pytest.fixture(scope="session")
def oneway8() -> Corpus:
    return bundled_corpus("oneway8")


@pytest.fixture(scope="session")
def sample32_path() -> Path:
    return Path(str(resources.files("matchprobe").joinpath("data", "sample32.jsonl")))


@pytest.fixture(scope="session")
def oneway8_path() -> Path:
    return Path(str(resources.files("matchprobe").joinpath("data", "oneway8.jsonl")))


_WORDS = (
    "river stone market garden winter engine harbor window basket copper "
    "signal forest meadow lantern bridge valley saddle barrel needle anchor"
).split()

_CATEGORIES = [c for c in MRCategory if c is not MRCategory.OTHER]


def make_random_corpus(n: int, seed: int, name: str = "random") -> Corpus:
    """Random but valid corpus: distinct texts, non-Other categories."""
    rng = random.Random(seed)
    triplets = []
    for i in range(n):
        words = lambda k: " ".join(rng.choice(_WORDS) for _ in range(k))
        tid = f"{name}-{i:04d}"
        base = f"the {words(4)} number {i} alpha"
        positive = f"a {words(4)} number {i} beta"
        negative = f"that {words(4)} number {i} gamma"
        triplets.append(
            Triplet(
                id=tid,
                base=Sentence.make(f"{tid}.base", base, Source.COLLECTED),
                positive=Sentence.make(f"{tid}.positive", positive, Source.GENERATED),
                negative=Sentence.make(f"{tid}.negative", negative, Source.COLLECTED),
                category=rng.choice(_CATEGORIES),
            )
        )
    return Corpus(
        triplets=tuple(triplets),
        metadata=CorpusMetadata(name=name, seed=seed),
    )
