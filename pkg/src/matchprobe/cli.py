"""Command-line entry points for the full pipeline.

    matchprobe tag        label pairs with their relation category
    matchprobe build      complete tagged pairs into a triplet corpus
    matchprobe transform  derive the non-metamorphic control corpus
    matchprobe embed      materialize a vector file via a provider
    matchprobe eval       run matching methods/scorers over a corpus
    matchprobe report     merge outcome dumps into tables and figures

Exit codes: 0 ok, 1 partial failures over threshold, 2 usage or format
errors. All file outputs are written atomically (temp file + rename).
"""

from __future__ import annotations

import os
import sys
from collections import Counter
from pathlib import Path

import click

from . import __version__
from .builder import RngState, complete_pair, make_nonmetamorphic
from .config import RunConfig, load_run_config
from .corpus import (
    Corpus,
    CorpusMetadata,
    MRCategory,
    PairRecord,
    parse_corpus,
    parse_pairs,
    serialize_corpus,
    serialize_pairs,
)
from .errors import BuilderError, CorpusError, MatchProbeError, ReportError
from .generation import HttpGenerationClient, StubGenerationClient
from .report import accuracy_drop_table, accuracy_table, method_category_table
from .simulate import (
    EvalReport,
    MethodSpec,
    Order,
    evaluate,
    evaluate_with_scorer,
    merge_reports,
    read_outcome_dump,
    write_outcome_dump,
)
from .tagging import tag_pair


def write_text_atomic(path: str | Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def parse_provider_desc(desc: str, config: RunConfig):
    """Provider descriptor -> provider instance.

    Forms: ``bow[:dim]``, ``charN[:dim]``, ``file:PATH``,
    ``http:MODEL:DIM:ENDPOINT``.
    """
    from .embedding import (
        BagOfWordsProvider,
        CharNgramProvider,
        HttpApiProvider,
        ProviderKind,
        ProviderSpec,
        VectorFileProvider,
    )

    parts = desc.split(":")
    head = parts[0]
    if head == "bow":
        dim = int(parts[1]) if len(parts) > 1 else 64
        return BagOfWordsProvider(dimension=dim)
    if head.startswith("char") and head[4:].isdigit():
        n = int(head[4:])
        dim = int(parts[1]) if len(parts) > 1 else 256
        return CharNgramProvider(dimension=dim, n=n)
    if head == "file":
        if len(parts) < 2:
            raise click.UsageError(f"provider {desc!r}: expected file:PATH")
        return VectorFileProvider(":".join(parts[1:]))
    if head == "http":
        if len(parts) < 4:
            raise click.UsageError(f"provider {desc!r}: expected http:MODEL:DIM:ENDPOINT")
        model, dim = parts[1], int(parts[2])
        endpoint = ":".join(parts[3:])
        spec = ProviderSpec(
            kind=ProviderKind.HTTP_API,
            model_id=model,
            dimension=dim,
            endpoint=endpoint,
            api_key_env=config.embed_api_key_env,
        )
        return HttpApiProvider(
            spec,
            batch_size=config.batch_size,
            max_retries=config.max_retries,
            timeout=config.timeout,
        )
    raise click.UsageError(f"unknown provider descriptor {desc!r}")


def parse_method_descs(descs: list[str], config: RunConfig) -> list[MethodSpec]:
    """``PROVIDER+METRIC`` descriptors; providers are shared across methods
    with the same descriptor so embeddings are computed once."""
    from .metrics import MetricId

    providers: dict[str, object] = {}
    methods: list[MethodSpec] = []
    for desc in descs:
        if "+" not in desc:
            raise click.UsageError(f"method {desc!r}: expected PROVIDER+METRIC")
        provider_desc, _, metric_names = desc.rpartition("+")
        for metric_name in metric_names.split(","):
            try:
                metric = MetricId(metric_name.strip())
            except ValueError:
                valid = ", ".join(m.value for m in MetricId)
                raise click.UsageError(
                    f"unknown metric {metric_name!r} (valid: {valid})"
                ) from None
            if provider_desc not in providers:
                providers[provider_desc] = parse_provider_desc(provider_desc, config)
            methods.append(MethodSpec(provider=providers[provider_desc], metric=metric))
    return methods


def parse_scorer_desc(desc: str, config: RunConfig):
    """Forms: ``stub:containment``, ``stub:overlap``, ``stub:constant[:v]``,
    ``cassette:NAME:PATH``, ``http:NAME:ENDPOINT``."""
    from .scorer import (
        CassetteScorer,
        ConstantScorer,
        ContainmentScorer,
        HttpScorer,
        ScorerSpec,
        TokenOverlapScorer,
    )

    parts = desc.split(":")
    head = parts[0]
    if head == "stub":
        kind = parts[1] if len(parts) > 1 else "overlap"
        if kind == "containment":
            return ContainmentScorer()
        if kind == "overlap":
            return TokenOverlapScorer()
        if kind == "constant":
            return ConstantScorer(float(parts[2]) if len(parts) > 2 else 0.5)
        raise click.UsageError(f"unknown stub scorer {kind!r}")
    if head == "cassette":
        if len(parts) < 3:
            raise click.UsageError(f"scorer {desc!r}: expected cassette:NAME:PATH")
        return CassetteScorer(":".join(parts[2:]), name=parts[1])
    if head == "http":
        if len(parts) < 3:
            raise click.UsageError(f"scorer {desc!r}: expected http:NAME:ENDPOINT")
        spec = ScorerSpec(
            name=parts[1],
            endpoint=":".join(parts[2:]),
            order_sensitive=True,
            timeout=config.timeout,
            max_retries=config.max_retries,
            api_key_env=config.gen_api_key_env,
        )
        return HttpScorer(spec)
    raise click.UsageError(f"unknown scorer descriptor {desc!r}")


@click.group()
@click.version_option(version=__version__)
def main():
    """Metamorphic triplet harness for vector matching methods."""


def _select_tagger(name: str):
    """Tagger registry keyed by the ``tagger`` config value."""
    from .tagging.postag import default_tagger

    registry = {"lexicon": default_tagger}
    try:
        return registry[name]()
    except KeyError:
        raise click.UsageError(
            f"unknown tagger {name!r} (available: {', '.join(registry)})"
        ) from None


@main.command()
@click.argument("pairs_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def tag(pairs_file, output, config_path):
    """Tag each pair record with its relation category."""
    config = load_run_config(config_path)
    tagger = _select_tagger(config.tagger)
    try:
        records = parse_pairs(Path(pairs_file).read_text("utf-8"))
    except CorpusError as exc:
        raise SystemExit(click.echo(f"error: {exc}", err=True) or 2)
    tagged = [
        PairRecord(id=r.id, pair=r.pair, category=tag_pair(r.pair, tagger))
        for r in records
    ]
    out_path = output or str(Path(pairs_file).with_suffix(".tagged.jsonl"))
    write_text_atomic(out_path, serialize_pairs(tagged))
    histogram = Counter(r.category.value for r in tagged if r.category is not MRCategory.OTHER)
    for category in MRCategory:
        if category.value in histogram:
            click.echo(f"{category.value}\t{histogram[category.value]}")
    other = sum(1 for r in tagged if r.category is MRCategory.OTHER)
    if other:
        click.echo(f"Other\t{other}")
    click.echo(f"wrote {out_path} ({len(tagged)} records)")


@main.command()
@click.argument("tagged_pairs", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
@click.option("--seed", type=int, required=True, help="Run seed for all generation.")
@click.option("--stub", "use_stub", is_flag=True, help="Use the offline stub generator.")
@click.option("--gen-endpoint", default="", help="HTTP generation endpoint.")
@click.option("--name", default="", help="Corpus name stored in metadata.")
@click.option("--fail-threshold", default=0.10, show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def build(tagged_pairs, output, seed, use_stub, gen_endpoint, name, fail_threshold, config_path):
    """Complete tagged pairs into a triplet corpus."""
    config = load_run_config(config_path)
    if use_stub or not (gen_endpoint or config.gen_endpoint):
        client = StubGenerationClient()
        if not use_stub:
            click.echo("no generation endpoint configured; using the offline stub", err=True)
    else:
        client = HttpGenerationClient(
            gen_endpoint or config.gen_endpoint,
            api_key_env=config.gen_api_key_env,
            timeout=config.timeout,
            max_retries=config.max_retries,
        )
    try:
        records = parse_pairs(Path(tagged_pairs).read_text("utf-8"))
    except CorpusError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(2)
    run_rng = RngState(seed=seed)
    triplets = []
    failures: list[tuple[str, str]] = []
    skipped = 0
    buildable = 0
    for index, record in enumerate(records):
        if record.category is None or record.category is MRCategory.OTHER:
            skipped += 1
            continue
        buildable += 1
        try:
            triplets.append(complete_pair(record, client, run_rng.split(index)))
        except BuilderError as exc:
            failures.append((record.id, str(exc)))
    metadata = (
        CorpusMetadata(name=name or Path(output).stem, seed=seed)
        if triplets
        else CorpusMetadata()
    )
    corpus = Corpus(triplets=tuple(triplets), metadata=metadata)
    write_text_atomic(output, serialize_corpus(corpus))
    click.echo(
        f"wrote {output}: {len(triplets)} triplets"
        f" ({skipped} untaggable records skipped, {len(failures)} failed)"
    )
    for record_id, message in failures:
        click.echo(f"  failed {record_id}: {message}", err=True)
    if buildable and len(failures) / buildable > fail_threshold:
        raise SystemExit(1)


@main.command()
@click.argument("corpus_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def transform(corpus_file, output):
    """Swap consecutive negatives with the partner's positive (control corpus)."""
    try:
        corpus = parse_corpus(Path(corpus_file).read_text("utf-8"))
    except CorpusError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(2)
    if len(corpus) < 2:
        click.echo("warning: corpus has fewer than 2 triplets; nothing to swap", err=True)
    transformed = make_nonmetamorphic(corpus)
    out_path = output or str(
        Path(corpus_file).with_name(Path(corpus_file).stem + ".nonmetamorphic.jsonl")
    )
    write_text_atomic(out_path, serialize_corpus(transformed))
    click.echo(f"wrote {out_path} ({len(transformed)} triplets)")


@main.command()
@click.argument("corpus_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--provider", "provider_desc", required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
@click.option("--binary", is_flag=True, help="Store components as binary (base64).")
@click.option("--with-texts", is_flag=True, help="Keep sentence texts in the file.")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def embed(corpus_file, provider_desc, output, binary, with_texts, config_path):
    """Embed every distinct sentence of a corpus into a vector file."""
    from .corpus import text_hash
    from .embedding import save_vector_file

    config = load_run_config(config_path)
    try:
        corpus = parse_corpus(Path(corpus_file).read_text("utf-8"))
    except CorpusError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(2)
    provider = parse_provider_desc(provider_desc, config)
    texts = corpus.unique_texts()
    try:
        provider.embed_many(texts)
    except MatchProbeError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(1)
    entries = {text_hash(t): provider.embed(t) for t in texts}
    save_vector_file(
        output,
        model_id=provider.spec.model_id,
        dimension=provider.spec.dimension,
        entries=entries,
        texts={text_hash(t): t for t in texts} if with_texts else None,
        encoding="binary" if binary else "decimal",
    )
    click.echo(f"wrote {output}: {len(entries)} vectors, dim {provider.spec.dimension}")


def _run_eval(corpus: Corpus, methods, scorers, order_values, config) -> list[EvalReport]:
    reports = []
    if methods:
        reports.append(
            evaluate(
                corpus,
                methods,
                epsilon_scale=config.epsilon_scale,
                max_workers=config.max_workers,
            )
        )
    for scorer in scorers:
        for order in order_values:
            reports.append(evaluate_with_scorer(corpus, scorer, order))
    return reports


@main.command(name="eval")
@click.argument("corpus_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--method", "method_descs", multiple=True, help="PROVIDER+METRIC, repeatable.")
@click.option("--scorer", "scorer_descs", multiple=True, help="Scorer descriptor, repeatable.")
@click.option(
    "--order",
    type=click.Choice(["forward", "reverse", "both"]),
    default="forward",
    show_default=True,
)
@click.option("--transformed", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("-o", "--out-dir", type=click.Path(file_okay=False), default="out", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def eval_command(corpus_file, method_descs, scorer_descs, order, transformed, out_dir, config_path):
    """Evaluate matching methods and scorers over a corpus."""
    config = load_run_config(config_path)
    method_descs = list(method_descs) or config.methods
    scorer_descs = list(scorer_descs) or config.scorers
    if not method_descs and not scorer_descs:
        raise click.UsageError("give at least one --method or --scorer")
    try:
        corpus = parse_corpus(Path(corpus_file).read_text("utf-8"))
    except CorpusError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(2)
    methods = parse_method_descs(method_descs, config)
    scorers = [parse_scorer_desc(d, config) for d in scorer_descs]
    order_values = {
        "forward": [Order.FORWARD],
        "reverse": [Order.REVERSE],
        "both": [Order.FORWARD, Order.REVERSE],
    }[order]

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = merge_reports(_run_eval(corpus, methods, scorers, order_values, config))
    write_outcome_dump(out / "outcomes.jsonl", report)
    write_text_atomic(out / "accuracy.csv", accuracy_table(report).to_csv())
    write_text_atomic(out / "distances.csv", method_category_table(report).to_csv())
    click.echo(accuracy_table(report).to_text())

    if transformed:
        control_corpus = parse_corpus(Path(transformed).read_text("utf-8"))
        control = merge_reports(
            _run_eval(control_corpus, methods, scorers, order_values, config)
        )
        write_outcome_dump(out / "outcomes_control.jsonl", control)
        drop = accuracy_drop_table(report, control)
        write_text_atomic(out / "accuracy_drop.csv", drop.to_csv())
        click.echo(drop.to_text())

    empty = [m for m in report.method_ids if not any(o.method_id == m for o in report.outcomes)]
    if empty:
        click.echo(f"error: methods with zero valid outcomes: {', '.join(empty)}", err=True)
        raise SystemExit(1)


@main.command(name="report")
@click.argument("dumps", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--out-dir", type=click.Path(file_okay=False), default="report", show_default=True)
@click.option("--figures/--no-figures", default=True, show_default=True)
def report_command(dumps, out_dir, figures):
    """Merge outcome dumps into per-(method, category) tables and figures."""
    try:
        merged = merge_reports([read_outcome_dump(p) for p in dumps])
    except ReportError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(2)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    table = method_category_table(merged)
    write_text_atomic(out / "method_category.csv", table.to_csv())
    write_text_atomic(out / "accuracy.csv", accuracy_table(merged).to_csv())
    write_text_atomic(out / "plot_data.csv", table.to_csv())
    click.echo(table.to_text())
    if figures:
        from .figures import render_figures

        for path in render_figures(merged, out):
            click.echo(f"wrote {path}")
    click.echo(f"wrote {out / 'method_category.csv'}")


if __name__ == "__main__":
    sys.exit(main())
