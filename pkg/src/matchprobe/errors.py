"""Exception hierarchy shared across the package.

Every error raised by matchprobe derives from :class:`MatchProbeError`, so
callers can catch one base class at pipeline boundaries while tests assert
on the precise subclass.
"""

from __future__ import annotations


class MatchProbeError(Exception):
    """Base class for all matchprobe errors."""


# --- corpus / record parsing ---


class CorpusError(MatchProbeError):
    pass


class MalformedRecord(CorpusError):
    """A line in a record file does not parse or misses required fields."""

    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class DuplicateId(CorpusError):
    """Record ids repeat within one file; carries every duplicated id."""

    def __init__(self, ids: list[str]):
        self.ids = ids
        super().__init__(f"duplicate ids: {', '.join(ids)}")


class EmptyText(CorpusError):
    """Sentence text is empty after trimming."""


class InvariantViolation(CorpusError):
    """A parsed triplet violates a structural invariant."""

    def __init__(self, line_no: int, violations: list[str]):
        self.line_no = line_no
        self.violations = violations
        super().__init__(f"line {line_no}: {', '.join(violations)}")


# --- tagging ---


class NoDifference(MatchProbeError):
    """Two equal-length token sequences contain no differing position."""


# --- triplet building ---


class BuilderError(MatchProbeError):
    pass


class NoQuantifier(BuilderError):
    """The sentence contains no numeric quantifier to substitute."""


class SubstitutionFailed(BuilderError):
    """Quantifier substitution could not produce a changed value."""


class GenerationFailed(BuilderError):
    """The text generator exhausted its retries without a usable output."""


class ValidationFailed(BuilderError):
    """Generated text failed a structural validation rule."""


class ClientError(BuilderError):
    """Transport-level failure talking to a generation endpoint."""


# --- embedding ---


class EmbeddingError(MatchProbeError):
    pass


class MissingVector(EmbeddingError):
    """A vector-file provider has no entry for the requested text."""


class ProviderError(EmbeddingError):
    """An embedding provider failed after exhausting retries."""


class DimensionMismatch(EmbeddingError):
    """Vector dimensions disagree with each other or the provider spec."""


class ZeroVector(EmbeddingError):
    """A zero vector cannot be normalized."""


class FormatError(EmbeddingError):
    """A vector file does not conform to the on-disk format."""


# --- distance metrics ---


class MetricError(MatchProbeError):
    pass


class DegenerateInput(MetricError):
    """Input vectors make the metric undefined (zero/constant vectors)."""


class MissingCovariance(MetricError):
    """Mahalanobis distance requested without a fitted covariance model."""


class TooFewSamples(MetricError):
    """Covariance fitting needs at least two sample vectors."""


class SingularAfterRegularization(MetricError):
    """The regularized covariance is still not positive-definite."""


class EmptyInput(MetricError):
    """An aggregate operation received an empty list."""


# --- scorers ---


class ScorerError(MatchProbeError):
    """A scorer endpoint failed or returned an unusable response."""


class RangeViolation(ScorerError):
    """A scorer returned a value outside the declared [0, 1] range."""


# --- evaluation / reporting ---


class EvaluationError(MatchProbeError):
    """A per-triplet failure annotated with the triplet id."""

    def __init__(self, triplet_id: str, cause: Exception):
        self.triplet_id = triplet_id
        self.cause = cause
        super().__init__(f"triplet {triplet_id}: {cause}")


class ReportError(MatchProbeError):
    """Outcome dumps cannot be merged or rendered."""
