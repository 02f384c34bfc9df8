"""Retrieval simulation: per triplet, embed base/positive/negative, measure
both candidate distances, and pick the closer one the way a vector store
would. Aggregates accuracy and average distances per (method, category).

Evaluation embeds every distinct sentence once per provider, fits the
Mahalanobis covariance (when needed) over all normalized vectors of the
run before any verdicts, and tallies per-triplet provider or metric errors
instead of aborting. Aggregation is a deterministic fold over outcomes in
canonical order, so worker scheduling cannot change a report.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import Corpus, MRCategory, Triplet, corpus_hash
from .embedding import EmbeddingVector, Provider, normalize
from .errors import EvaluationError, MatchProbeError, ReportError
from .metrics import CovarianceModel, MetricId, distance, fit_covariance
from .scorer import Scorer


class Verdict(Enum):
    CORRECT = "Correct"
    FALSE_MATCH = "FalseMatch"
    TIE = "Tie"


class Order(Enum):
    FORWARD = "Forward"
    REVERSE = "Reverse"


@dataclass(frozen=True)
class MethodSpec:
    """One matching method: an embedding provider paired with a metric."""

    provider: Provider
    metric: MetricId

    @property
    def method_id(self) -> str:
        return f"{self.provider.spec.model_id}+{self.metric.value}"


@dataclass(frozen=True)
class MatchOutcome:
    """Distances (or scores) for one triplet under one method."""

    triplet_id: str
    method_id: str
    d_pos: float
    d_neg: float
    verdict: Verdict


@dataclass
class CategoryStats:
    total: int = 0
    correct: int = 0
    ties: int = 0
    errors: int = 0
    sum_pos: float = 0.0
    sum_neg: float = 0.0

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.total else 0.0

    @property
    def avg_pos(self) -> float:
        return self.sum_pos / self.total if self.total else 0.0

    @property
    def avg_neg(self) -> float:
        return self.sum_neg / self.total if self.total else 0.0


@dataclass
class EvalReport:
    """Aggregated evaluation results for a set of methods on one corpus."""

    corpus_hash: str
    method_ids: list[str]
    categories: dict[str, str]  # triplet id -> category value
    outcomes: list[MatchOutcome] = field(default_factory=list)
    errors: list[tuple[str, str, str]] = field(default_factory=list)  # (triplet, method, msg)
    stats: dict[tuple[str, str], CategoryStats] = field(default_factory=dict)

    def stats_for(self, method_id: str, category: str) -> CategoryStats:
        return self.stats.get((method_id, category), CategoryStats())

    def category_values(self) -> list[str]:
        ordered = [c.value for c in MRCategory]
        present = {cat for (_, cat) in self.stats}
        return [c for c in ordered if c in present]

    def accuracy(self, method_id: str, category: str | None = None) -> float:
        if category is not None:
            return self.stats_for(method_id, category).accuracy
        total = sum(s.total for (m, _), s in self.stats.items() if m == method_id)
        correct = sum(s.correct for (m, _), s in self.stats.items() if m == method_id)
        return correct / total if total else 0.0

    def error_count(self, method_id: str, category: str | None = None) -> int:
        if category is None:
            return sum(1 for (_, m, _) in self.errors if m == method_id)
        return self.stats_for(method_id, category).errors


def compare_distances(d_pos: float, d_neg: float) -> Verdict:
    """Smaller distance wins; an exact tie is its own verdict."""
    if d_pos < d_neg:
        return Verdict.CORRECT
    if d_pos == d_neg:
        return Verdict.TIE
    return Verdict.FALSE_MATCH


def compare_scores(s_pos: float, s_neg: float) -> Verdict:
    """Higher score wins; an exact tie is its own verdict."""
    if s_pos > s_neg:
        return Verdict.CORRECT
    if s_pos == s_neg:
        return Verdict.TIE
    return Verdict.FALSE_MATCH


def match_triplet(
    t: Triplet, m: MethodSpec, cov: CovarianceModel | None = None
) -> MatchOutcome:
    """Embed all three sentences, normalize, and match base against the
    two candidates under the method's metric."""
    try:
        base = normalize(m.provider.embed(t.base.text))
        pos = normalize(m.provider.embed(t.positive.text))
        neg = normalize(m.provider.embed(t.negative.text))
        d_pos = distance(base, pos, m.metric, cov)
        d_neg = distance(base, neg, m.metric, cov)
    except MatchProbeError as exc:
        raise EvaluationError(t.id, exc) from exc
    return MatchOutcome(
        triplet_id=t.id,
        method_id=m.method_id,
        d_pos=d_pos,
        d_neg=d_neg,
        verdict=compare_distances(d_pos, d_neg),
    )


def aggregate(
    corpus_hash_value: str,
    method_ids: Sequence[str],
    categories: dict[str, str],
    outcomes: Iterable[MatchOutcome],
    errors: Iterable[tuple[str, str, str]] = (),
) -> EvalReport:
    """Fold outcomes and errors into per-(method, category) statistics.

    Outcomes are processed in sorted (method, triplet) order so the same
    inputs always produce the identical report, regardless of how the
    evaluation was chunked or scheduled.
    """
    report = EvalReport(
        corpus_hash=corpus_hash_value,
        method_ids=list(method_ids),
        categories=dict(categories),
    )
    ordered = sorted(outcomes, key=lambda o: (o.method_id, o.triplet_id))
    for outcome in ordered:
        category = report.categories.get(outcome.triplet_id, MRCategory.OTHER.value)
        stats = report.stats.setdefault((outcome.method_id, category), CategoryStats())
        stats.total += 1
        stats.sum_pos += outcome.d_pos
        stats.sum_neg += outcome.d_neg
        if outcome.verdict is Verdict.CORRECT:
            stats.correct += 1
        elif outcome.verdict is Verdict.TIE:
            stats.ties += 1
        report.outcomes.append(outcome)
    for triplet_id, method_id, message in sorted(errors):
        category = report.categories.get(triplet_id, MRCategory.OTHER.value)
        stats = report.stats.setdefault((method_id, category), CategoryStats())
        stats.errors += 1
        report.errors.append((triplet_id, method_id, message))
    return report


def _embed_corpus(
    provider: Provider, texts: Sequence[str]
) -> tuple[dict[str, EmbeddingVector], dict[str, str]]:
    """Normalized vector per text; failures isolated per text."""
    vectors: dict[str, EmbeddingVector] = {}
    failures: dict[str, str] = {}
    try:
        provider.embed_many(list(texts))
    except MatchProbeError:
        pass  # fall through to per-text isolation
    for text in texts:
        try:
            vectors[text] = normalize(provider.embed(text))
        except MatchProbeError as exc:
            failures[text] = str(exc)
    return vectors, failures


def evaluate(
    corpus: Corpus,
    methods: Sequence[MethodSpec],
    epsilon_scale: float = 1e-6,
    max_workers: int = 1,
) -> EvalReport:
    """Run every (triplet, method) match and aggregate.

    Triplets whose sentences a provider cannot embed, and metric failures
    on individual triplets, are excluded from the accuracy denominator and
    counted in the error tally.
    """
    if len(corpus) == 0:
        raise ValueError("corpus is empty")
    if not methods:
        raise ValueError("no methods given")
    texts = corpus.unique_texts()
    categories = {t.id: t.category.value for t in corpus}

    by_provider: dict[int, tuple[Provider, list[MethodSpec]]] = {}
    for m in methods:
        by_provider.setdefault(id(m.provider), (m.provider, []))[1].append(m)

    outcomes: list[MatchOutcome] = []
    errors: list[tuple[str, str, str]] = []

    for provider, provider_methods in by_provider.values():
        vectors, failures = _embed_corpus(provider, texts)
        covariance: CovarianceModel | None = None
        covariance_error: str | None = None
        if any(m.metric is MetricId.MD for m in provider_methods):
            try:
                covariance = fit_covariance(list(vectors.values()), epsilon_scale)
            except MatchProbeError as exc:
                covariance_error = str(exc)

        def run_one(t: Triplet, m: MethodSpec) -> MatchOutcome | tuple[str, str, str]:
            slot_texts = [s.text for s in t.sentences()]
            failed = [text for text in slot_texts if text in failures]
            if failed:
                return (t.id, m.method_id, failures[failed[0]])
            if m.metric is MetricId.MD and covariance is None:
                return (t.id, m.method_id, covariance_error or "missing covariance")
            try:
                vb, vp, vn = (vectors[text] for text in slot_texts)
                d_pos = distance(vb, vp, m.metric, covariance)
                d_neg = distance(vb, vn, m.metric, covariance)
            except MatchProbeError as exc:
                return (t.id, m.method_id, str(exc))
            return MatchOutcome(
                triplet_id=t.id,
                method_id=m.method_id,
                d_pos=d_pos,
                d_neg=d_neg,
                verdict=compare_distances(d_pos, d_neg),
            )

        tasks = [(t, m) for t in corpus for m in provider_methods]
        if max_workers > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as pool:
                results = list(pool.map(lambda tm: run_one(*tm), tasks))
        else:
            results = [run_one(t, m) for t, m in tasks]
        for result in results:
            if isinstance(result, MatchOutcome):
                outcomes.append(result)
            else:
                errors.append(result)

    return aggregate(
        corpus_hash(corpus),
        [m.method_id for m in methods],
        categories,
        outcomes,
        errors,
    )


def scorer_method_id(scorer: Scorer, order: Order) -> str:
    suffix = "-R" if order is Order.REVERSE else ""
    return f"scorer:{scorer.spec.name}{suffix}"


def evaluate_with_scorer(
    corpus: Corpus, scorer: Scorer, order: Order = Order.FORWARD
) -> EvalReport:
    """Match candidates by scorer output instead of vector distance.

    Forward order scores (base, candidate); Reverse swaps the argument
    order on every call. Higher score wins; d_pos/d_neg in the outcomes
    hold the scores.
    """
    if len(corpus) == 0:
        raise ValueError("corpus is empty")
    method_id = scorer_method_id(scorer, order)
    categories = {t.id: t.category.value for t in corpus}
    outcomes: list[MatchOutcome] = []
    errors: list[tuple[str, str, str]] = []
    for t in corpus:
        try:
            if order is Order.FORWARD:
                s_pos = scorer.score(t.base.text, t.positive.text)
                s_neg = scorer.score(t.base.text, t.negative.text)
            else:
                s_pos = scorer.score(t.positive.text, t.base.text)
                s_neg = scorer.score(t.negative.text, t.base.text)
        except MatchProbeError as exc:
            errors.append((t.id, method_id, str(exc)))
            continue
        outcomes.append(
            MatchOutcome(
                triplet_id=t.id,
                method_id=method_id,
                d_pos=s_pos,
                d_neg=s_neg,
                verdict=compare_scores(s_pos, s_neg),
            )
        )
    return aggregate(corpus_hash(corpus), [method_id], categories, outcomes, errors)


# --- outcome dumps ---


def write_outcome_dump(path: str | Path, report: EvalReport) -> None:
    """Line-delimited audit dump: header, outcome records, error records."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        header = {
            "corpus_hash": report.corpus_hash,
            "method_ids": report.method_ids,
            "triplet_categories": report.categories,
        }
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for o in report.outcomes:
            fh.write(
                json.dumps(
                    {
                        "triplet_id": o.triplet_id,
                        "method_id": o.method_id,
                        "d_pos": o.d_pos,
                        "d_neg": o.d_neg,
                        "verdict": o.verdict.value,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )
        for triplet_id, method_id, message in report.errors:
            fh.write(
                json.dumps(
                    {"triplet_id": triplet_id, "method_id": method_id, "error": message},
                    ensure_ascii=False,
                )
                + "\n"
            )
    import os

    os.replace(tmp, path)


def read_outcome_dump(path: str | Path) -> EvalReport:
    """Rebuild a report by re-aggregating a dump (no stored aggregates)."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ReportError(f"{path}: empty dump")
    try:
        header = json.loads(lines[0])
        hash_value = header["corpus_hash"]
        method_ids = list(header["method_ids"])
        categories = dict(header["triplet_categories"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ReportError(f"{path}: bad dump header ({exc})") from None
    outcomes: list[MatchOutcome] = []
    errors: list[tuple[str, str, str]] = []
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            if "error" in record:
                errors.append((record["triplet_id"], record["method_id"], record["error"]))
            else:
                outcomes.append(
                    MatchOutcome(
                        triplet_id=record["triplet_id"],
                        method_id=record["method_id"],
                        d_pos=float(record["d_pos"]),
                        d_neg=float(record["d_neg"]),
                        verdict=Verdict(record["verdict"]),
                    )
                )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ReportError(f"{path}:{line_no}: bad dump record ({exc})") from None
    return aggregate(hash_value, method_ids, categories, outcomes, errors)


def merge_reports(reports: Sequence[EvalReport]) -> EvalReport:
    """Union of outcome sets computed on the same corpus.

    Reports with different corpus hashes never merge; that is the guard
    against mixing results from different datasets in one table.
    """
    if not reports:
        raise ReportError("nothing to merge")
    hashes = {r.corpus_hash for r in reports}
    if len(hashes) != 1:
        raise ReportError(f"cannot merge dumps from different corpora: {sorted(hashes)}")
    method_ids: list[str] = []
    categories: dict[str, str] = {}
    outcomes: list[MatchOutcome] = []
    errors: list[tuple[str, str, str]] = []
    for r in reports:
        for m in r.method_ids:
            if m not in method_ids:
                method_ids.append(m)
        categories.update(r.categories)
        outcomes.extend(r.outcomes)
        errors.extend(r.errors)
    return aggregate(hashes.pop(), method_ids, categories, outcomes, errors)
