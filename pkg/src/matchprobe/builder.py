"""Triplet completion: turns tagged pairs into full {base, positive,
negative} triplets, and derives the non-metamorphic control corpus.

Completion routes by category. Quantifier substitution synthesizes the
negative from the base; most categories keep the collected negative and
generate the positive as a structural paraphrase; claim-in-context pairs
keep the collected context as positive and generate the negative by
removing the supporting evidence from it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, replace

from .corpus import (
    Corpus,
    MRCategory,
    PairRecord,
    Sentence,
    Source,
    Triplet,
    validate_triplet,
)
from .errors import (
    GenerationFailed,
    NoQuantifier,
    SubstitutionFailed,
    ValidationFailed,
)
from .generation import GenerationClient, GenerationKind, GenerationRequest
from .tagging.postag import load_stopwords
from .tagging.tokens import extract_quantifiers, tokenize

#: Redraw the random factor while it sits inside 1 +/- this window, so the
#: substituted value cannot round back to the original.
UNIT_EXCLUSION = 0.1
_MAX_DRAWS = 100
_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class RngState:
    """Seeded random source; same seed, same draw sequence.

    The algorithm is pinned to Python's Mersenne Twister so corpora built
    from a given seed are reproducible across platforms and runs.
    """

    seed: int
    algorithm: str = "mt19937"

    def __post_init__(self):
        object.__setattr__(self, "seed", self.seed & _SEED_MASK)
        if self.algorithm != "mt19937":
            raise ValueError(f"unsupported rng algorithm {self.algorithm!r}")

    def generator(self) -> random.Random:
        return random.Random(self.seed)

    def split(self, index: int) -> "RngState":
        """Per-item stream: run seed XOR item index."""
        return RngState(seed=(self.seed ^ index) & _SEED_MASK)


def _format_like(original: str, value: float) -> str:
    """Format a number with the same shape as the original literal:
    integers stay integers, decimals keep the decimal-place count."""
    if "." in original:
        places = len(original.split(".", 1)[1])
        return f"{value:.{places}f}"
    return str(int(round(value)))


def substitute_quantifier(base: Sentence, rng: RngState) -> Sentence:
    """Replace the first numeric quantifier with a scaled variant.

    The scale factor is drawn uniformly from (0, 2), redrawn while it is
    within 0.1 of 1 or while the formatted result equals the original
    literal. Only the matched span changes; the rest of the text is
    untouched.
    """
    quantifiers = extract_quantifiers(base.text)
    if not quantifiers:
        raise NoQuantifier(f"no quantifier in {base.text[:60]!r}")
    target = quantifiers[0]
    value = float(target.text)
    lo, hi = min(0.0, 2.0 * value), max(0.0, 2.0 * value)
    gen = rng.generator()
    replacement: str | None = None
    for _ in range(_MAX_DRAWS):
        factor = gen.uniform(0.0, 2.0)
        if abs(factor - 1.0) < UNIT_EXCLUSION:
            continue
        candidate = _format_like(target.text, value * factor)
        if candidate == target.text:
            continue
        # Rounding at the edges may leave the open interval (0, 2q); redraw.
        if not (lo < float(candidate) < hi):
            continue
        replacement = candidate
        break
    if replacement is None:
        raise SubstitutionFailed(
            f"could not produce a changed value for {target.text!r}"
        )
    text = base.text[: target.start] + replacement + base.text[target.end :]
    return Sentence(id=f"{base.id}.quantsub", text=text, source=Source.GENERATED)


def _token_overlap(a: str, b: str) -> float:
    sa, sb = set(tokenize(a)), set(tokenize(b))
    union = sa | sb
    if not union:
        return 1.0
    return len(sa & sb) / len(union)


def generate_positive(
    base: Sentence,
    client: GenerationClient,
    seed: int = 0,
    max_attempts: int = 3,
    overlap_max: float = 0.9,
) -> Sentence:
    """Ask the generator for a paraphrase that changes structure.

    Output is rejected (and regenerated, up to ``max_attempts``) when it is
    empty, tokenizes identically to the base, or its token overlap with the
    base exceeds ``overlap_max``.
    """
    base_tokens = tokenize(base.text)
    for attempt in range(max_attempts):
        request = GenerationRequest(
            kind=GenerationKind.POSITIVE_REWRITE,
            variables={"base": base.text},
            seed=seed + attempt,
        )
        text = client.generate(request).strip()
        if not text:
            continue
        if tokenize(text) == base_tokens:
            continue
        if _token_overlap(text, base.text) > overlap_max:
            continue
        return Sentence(id=f"{base.id}.positive", text=text, source=Source.GENERATED)
    raise GenerationFailed(
        f"no acceptable paraphrase for {base.text[:60]!r} after {max_attempts} attempts"
    )


def generate_negative_by_evidence_removal(
    claim: Sentence,
    context: Sentence,
    client: GenerationClient,
    seed: int = 0,
) -> Sentence:
    """Rewrite the context so it no longer supports the claim.

    Validation: at least one content word shared by claim and context must
    be absent from the output.
    """
    stopwords = load_stopwords()
    claim_words = {t for t in tokenize(claim.text) if t not in stopwords}
    context_words = {t for t in tokenize(context.text) if t not in stopwords}
    shared = claim_words & context_words
    if not shared:
        raise ValidationFailed("claim and context share no content words")
    request = GenerationRequest(
        kind=GenerationKind.NEGATIVE_EVIDENCE_REMOVAL,
        variables={"claim": claim.text, "context": context.text},
        seed=seed,
    )
    text = client.generate(request).strip()
    if not text:
        raise GenerationFailed("generator returned empty output")
    output_tokens = set(tokenize(text))
    if shared <= output_tokens:
        raise ValidationFailed(
            "output still contains every content word shared with the claim"
        )
    return Sentence(id=f"{claim.id}.negative", text=text, source=Source.GENERATED)


def complete_pair(record: PairRecord, client: GenerationClient, rng: RngState) -> Triplet:
    """Build the full triplet for one tagged pair.

    Routing: QuantSub regenerates the negative from the base; ErrNli keeps
    the collected context as positive and removes its evidence for the
    negative; every other category keeps the collected negative and
    generates the positive.
    """
    category = record.category
    if category is None or category is MRCategory.OTHER:
        raise ValueError(f"pair {record.id} is untagged; cannot complete")
    seed = rng.seed
    s1, s2 = record.pair.s1, record.pair.s2
    base = replace(s1, id=f"{record.id}.base", source=Source.COLLECTED)

    if category is MRCategory.QUANT_SUB:
        negative = substitute_quantifier(base, rng)
        positive = generate_positive(base, client, seed=seed)
    elif category is MRCategory.ERR_NLI:
        positive = replace(s2, id=f"{record.id}.positive", source=Source.COLLECTED)
        negative = generate_negative_by_evidence_removal(base, positive, client, seed=seed)
    else:
        negative = replace(s2, id=f"{record.id}.negative", source=Source.COLLECTED)
        positive = generate_positive(base, client, seed=seed)

    triplet = Triplet(
        id=record.id,
        base=base,
        positive=replace(positive, id=f"{record.id}.positive"),
        negative=replace(negative, id=f"{record.id}.negative"),
        category=category,
    )
    violations = validate_triplet(triplet)
    if violations:
        raise ValidationFailed(
            f"completed triplet {record.id} invalid: {[v.value for v in violations]}"
        )
    return triplet


_NONMETA_FLAG = "nonmetamorphic"
_ODD_NOTE = "nonmetamorphic_odd_passthrough"
_NEGATIVE_STASH = "nonmetamorphic_original_negatives"


def _restore_from_stash(c: Corpus) -> Corpus | None:
    """Undo a previous transformation using the stashed negatives."""
    try:
        stash = json.loads(c.metadata.extras[_NEGATIVE_STASH])
    except (KeyError, json.JSONDecodeError):
        return None
    triplets = []
    for t in c.triplets:
        entry = stash.get(t.id)
        if entry is None:
            triplets.append(t)
            continue
        restored = Sentence(
            id=f"{t.id}.negative",
            text=entry["text"],
            source=Source(entry["source"]),
        )
        triplets.append(replace(t, negative=restored))
    extras = {
        k: v
        for k, v in c.metadata.extras.items()
        if k not in (_NONMETA_FLAG, _ODD_NOTE, _NEGATIVE_STASH)
    }
    metadata = replace(c.metadata, extras=extras)
    return Corpus(triplets=tuple(triplets), metadata=metadata)


def make_nonmetamorphic(c: Corpus) -> Corpus:
    """Replace the negatives of consecutive triplet pairs with the partner's
    positive, producing the control corpus where both candidates differ
    structurally from the base.

    Pairing is positional: (1,2), (3,4), ... in corpus order; a trailing odd
    triplet passes through unchanged and is noted in the metadata. The
    displaced negatives are stashed in the metadata so a second application
    restores the input byte-for-byte (the operation is an involution).
    """
    if c.metadata.extras.get(_NONMETA_FLAG) == "true":
        restored = _restore_from_stash(c)
        if restored is not None:
            return restored

    triplets = list(c.triplets)
    stash: dict[str, dict[str, str]] = {}
    for i in range(0, len(triplets) - 1, 2):
        a, b = triplets[i], triplets[i + 1]
        stash[a.id] = {"text": a.negative.text, "source": a.negative.source.value}
        stash[b.id] = {"text": b.negative.text, "source": b.negative.source.value}
        triplets[i] = replace(a, negative=replace(b.positive, id=f"{a.id}.negative"))
        triplets[i + 1] = replace(b, negative=replace(a.positive, id=f"{b.id}.negative"))

    extras = dict(c.metadata.extras)
    extras[_NONMETA_FLAG] = "true"
    extras[_NEGATIVE_STASH] = json.dumps(stash, ensure_ascii=False, sort_keys=True)
    if len(triplets) % 2 == 1:
        extras[_ODD_NOTE] = triplets[-1].id
    metadata = replace(c.metadata, extras=extras)
    return Corpus(triplets=tuple(triplets), metadata=metadata)
