"""The seven distance functions used for candidate matching, covariance
fitting for the Mahalanobis metric, and max-min normalization for reporting.

All functions accept :class:`~matchprobe.embedding.EmbeddingVector` or any
array-like of reals. Distances are nonnegative; cosine and Pearson clip the
correlation term into [-1, 1] so floating-point noise cannot produce a
negative distance for identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    EmptyInput,
    MissingCovariance,
    SingularAfterRegularization,
    TooFewSamples,
)


class MetricId(Enum):
    """Marks: cosine, euclidean, mahalanobis, bray-curtis, lance-williams
    (canberra form), pearson-correlation, manhattan."""

    CD = "CD"
    ED = "ED"
    MD = "MD"
    BD = "BD"
    LD = "LD"
    PD = "PD"
    MHD = "MhD"


ALL_METRICS = tuple(MetricId)
#: Metrics that need no fitted covariance.
PLAIN_METRICS = tuple(m for m in MetricId if m is not MetricId.MD)


def as_array(v) -> np.ndarray:
    """Coerce an EmbeddingVector or array-like to a 1-D float64 array."""
    values = getattr(v, "values", v)
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise DimensionMismatch(f"expected a 1-D vector, got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class CovarianceModel:
    """Fitted parameters for the Mahalanobis metric.

    ``inverse_covariance`` is the inverse of the regularized sample
    covariance; it must be symmetric (within 1e-9) and positive-definite.
    """

    mean: np.ndarray
    inverse_covariance: np.ndarray
    epsilon: float
    sample_count: int

    def __post_init__(self):
        vi = self.inverse_covariance
        if vi.ndim != 2 or vi.shape[0] != vi.shape[1]:
            raise DimensionMismatch(f"inverse covariance must be square, got {vi.shape}")
        if not np.allclose(vi, vi.T, atol=1e-9):
            raise SingularAfterRegularization("inverse covariance is not symmetric")
        try:
            np.linalg.cholesky(vi)
        except np.linalg.LinAlgError:
            raise SingularAfterRegularization(
                "inverse covariance is not positive-definite"
            ) from None

    @property
    def dimension(self) -> int:
        return self.inverse_covariance.shape[0]


def identity_covariance(dimension: int) -> CovarianceModel:
    """Unit covariance model; Mahalanobis then reduces to Euclidean."""
    return CovarianceModel(
        mean=np.zeros(dimension),
        inverse_covariance=np.eye(dimension),
        epsilon=0.0,
        sample_count=0,
    )


def fit_covariance(
    vectors: Iterable, epsilon_scale: float = 1e-6
) -> CovarianceModel:
    """Sample covariance plus ``epsilon * I`` ridge, inverted via Cholesky.

    ``epsilon`` is ``epsilon_scale`` times the mean per-dimension variance;
    when the sample has zero variance (all vectors equal) the scale itself
    is used so the model stays invertible.
    """
    rows = [as_array(v) for v in vectors]
    if len(rows) < 2:
        raise TooFewSamples(f"covariance needs >= 2 vectors, got {len(rows)}")
    dims = {len(r) for r in rows}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed dimensions in sample: {sorted(dims)}")
    data = np.vstack(rows)
    mean = data.mean(axis=0)
    sigma = np.cov(data, rowvar=False, ddof=1)
    sigma = np.atleast_2d(sigma)
    d = sigma.shape[0]
    mean_variance = float(np.trace(sigma)) / d
    epsilon = epsilon_scale * (mean_variance if mean_variance > 0 else 1.0)
    regularized = sigma + epsilon * np.eye(d)
    try:
        lower = np.linalg.cholesky(regularized)
    except np.linalg.LinAlgError:
        raise SingularAfterRegularization(
            f"covariance singular even with epsilon={epsilon}"
        ) from None
    lower_inv = np.linalg.solve(lower, np.eye(d))
    vi = lower_inv.T @ lower_inv
    vi = (vi + vi.T) / 2.0
    return CovarianceModel(
        mean=mean, inverse_covariance=vi, epsilon=epsilon, sample_count=len(rows)
    )


def _cosine(u: np.ndarray, v: np.ndarray) -> float:
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise DegenerateInput("cosine distance undefined for zero vectors")
    cos = float(np.clip(np.dot(u, v) / (nu * nv), -1.0, 1.0))
    return 1.0 - cos


def _euclidean(u: np.ndarray, v: np.ndarray) -> float:
    return float(np.linalg.norm(u - v))


def _manhattan(u: np.ndarray, v: np.ndarray) -> float:
    return float(np.sum(np.abs(u - v)))


def _braycurtis(u: np.ndarray, v: np.ndarray) -> float:
    denom = float(np.sum(np.abs(u + v)))
    if denom == 0.0:
        raise DegenerateInput("bray-curtis denominator is zero")
    return float(np.sum(np.abs(u - v))) / denom


def _lance_williams(u: np.ndarray, v: np.ndarray) -> float:
    num = np.abs(u - v)
    denom = np.abs(u) + np.abs(v)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(denom > 0.0, num / np.where(denom > 0.0, denom, 1.0), 0.0)
    return float(np.sum(terms))


def _pearson(u: np.ndarray, v: np.ndarray) -> float:
    du = u - u.mean()
    dv = v - v.mean()
    nu = np.linalg.norm(du)
    nv = np.linalg.norm(dv)
    if nu == 0.0 or nv == 0.0:
        raise DegenerateInput("pearson distance undefined for constant vectors")
    corr = float(np.clip(np.dot(du, dv) / (nu * nv), -1.0, 1.0))
    return 1.0 - corr


def _mahalanobis(u: np.ndarray, v: np.ndarray, cov: CovarianceModel) -> float:
    if cov.dimension != len(u):
        raise DimensionMismatch(
            f"covariance dimension {cov.dimension} != vector dimension {len(u)}"
        )
    delta = u - v
    quad = float(delta @ cov.inverse_covariance @ delta)
    return float(np.sqrt(max(quad, 0.0)))


def distance(u, v, metric: MetricId, cov: CovarianceModel | None = None) -> float:
    """Distance between two vectors under the chosen metric.

    ``cov`` is required for (and only used by) the Mahalanobis metric.
    """
    a = as_array(u)
    b = as_array(v)
    if len(a) != len(b):
        raise DimensionMismatch(f"vector dimensions differ: {len(a)} vs {len(b)}")
    if metric is MetricId.CD:
        return _cosine(a, b)
    if metric is MetricId.ED:
        return _euclidean(a, b)
    if metric is MetricId.MHD:
        return _manhattan(a, b)
    if metric is MetricId.BD:
        return _braycurtis(a, b)
    if metric is MetricId.LD:
        return _lance_williams(a, b)
    if metric is MetricId.PD:
        return _pearson(a, b)
    if metric is MetricId.MD:
        if cov is None:
            raise MissingCovariance("mahalanobis distance needs a fitted covariance")
        return _mahalanobis(a, b, cov)
    raise ValueError(f"unknown metric {metric!r}")


def minmax_normalize(xs: Sequence[float]) -> list[float]:
    """Affine rescale onto [0, 1]; a constant list maps to all zeros."""
    if len(xs) == 0:
        raise EmptyInput("cannot normalize an empty list")
    lo = min(xs)
    hi = max(xs)
    if hi == lo:
        return [0.0] * len(xs)
    span = hi - lo
    return [(x - lo) / span for x in xs]
