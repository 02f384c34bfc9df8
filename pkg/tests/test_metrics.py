"""Distance metrics against an independently written per-element oracle,
plus covariance fitting and max-min normalization."""

from __future__ import annotations

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchprobe.embedding import EmbeddingVector
from matchprobe.errors import (
    DegenerateInput,
    DimensionMismatch,
    EmptyInput,
    MissingCovariance,
    TooFewSamples,
)
from matchprobe.metrics import (
    ALL_METRICS,
    CovarianceModel,
    MetricId,
    distance,
    fit_covariance,
    identity_covariance,
    minmax_normalize,
)

# --- oracle: plain-Python loops straight from the formulas ---


def oracle_distance(u, v, metric, vi=None):
    n = len(u)
    if metric is MetricId.CD:
        dot = sum(u[i] * v[i] for i in range(n))
        nu = math.sqrt(sum(x * x for x in u))
        nv = math.sqrt(sum(x * x for x in v))
        return 1.0 - dot / (nu * nv)
    if metric is MetricId.ED:
        return math.sqrt(sum((u[i] - v[i]) ** 2 for i in range(n)))
    if metric is MetricId.MHD:
        return sum(abs(u[i] - v[i]) for i in range(n))
    if metric is MetricId.BD:
        return sum(abs(u[i] - v[i]) for i in range(n)) / sum(
            abs(u[i] + v[i]) for i in range(n)
        )
    if metric is MetricId.LD:
        total = 0.0
        for i in range(n):
            denom = abs(u[i]) + abs(v[i])
            if denom > 0:
                total += abs(u[i] - v[i]) / denom
        return total
    if metric is MetricId.PD:
        mu = sum(u) / n
        mv = sum(v) / n
        du = [x - mu for x in u]
        dv = [x - mv for x in v]
        dot = sum(du[i] * dv[i] for i in range(n))
        nu = math.sqrt(sum(x * x for x in du))
        nv = math.sqrt(sum(x * x for x in dv))
        return 1.0 - dot / (nu * nv)
    if metric is MetricId.MD:
        delta = [u[i] - v[i] for i in range(n)]
        total = 0.0
        for i in range(n):
            for j in range(n):
                total += delta[i] * vi[i][j] * delta[j]
        return math.sqrt(total)
    raise AssertionError(metric)


def random_pair(rng, dim):
    u = [rng.uniform(-5, 5) for _ in range(dim)]
    v = [rng.uniform(-5, 5) for _ in range(dim)]
    return u, v


def test_all_metrics_match_oracle_on_random_pairs():
    rng = random.Random(12345)
    for _ in range(200):
        dim = rng.randint(2, 64)
        u, v = random_pair(rng, dim)
        cov = identity_covariance(dim)
        vi = np.eye(dim).tolist()
        for metric in ALL_METRICS:
            got = distance(u, v, metric, cov if metric is MetricId.MD else None)
            want = oracle_distance(u, v, metric, vi if metric is MetricId.MD else None)
            assert got == pytest.approx(want, rel=1e-9, abs=1e-12), metric


def test_metrics_match_scipy_reference():
    scipy_distance = pytest.importorskip("scipy.spatial.distance")
    rng = random.Random(99)
    for _ in range(50):
        dim = rng.randint(2, 32)
        u, v = random_pair(rng, dim)
        assert distance(u, v, MetricId.CD) == pytest.approx(scipy_distance.cosine(u, v), rel=1e-9)
        assert distance(u, v, MetricId.ED) == pytest.approx(scipy_distance.euclidean(u, v), rel=1e-9)
        assert distance(u, v, MetricId.MHD) == pytest.approx(scipy_distance.cityblock(u, v), rel=1e-9)
        assert distance(u, v, MetricId.BD) == pytest.approx(scipy_distance.braycurtis(u, v), rel=1e-9)
        assert distance(u, v, MetricId.LD) == pytest.approx(scipy_distance.canberra(u, v), rel=1e-9)
        assert distance(u, v, MetricId.PD) == pytest.approx(scipy_distance.correlation(u, v), rel=1e-9)


def test_cosine_orthogonal_unit_vectors():
    assert distance([1.0, 0.0], [0.0, 1.0], MetricId.CD) == pytest.approx(1.0)


def test_identity_of_indiscernibles():
    rng = random.Random(4)
    for _ in range(20):
        dim = rng.randint(2, 16)
        v = [rng.uniform(-3, 3) for _ in range(dim)]
        for metric in ALL_METRICS:
            cov = identity_covariance(dim) if metric is MetricId.MD else None
            assert distance(v, v, metric, cov) <= 1e-12, metric


def test_braycurtis_example():
    assert distance([1.0, 2.0], [2.0, 1.0], MetricId.BD) == pytest.approx(2 / 6)


def test_mahalanobis_identity_covariance_equals_euclidean():
    rng = random.Random(7)
    for _ in range(100):
        dim = rng.randint(2, 16)
        u, v = random_pair(rng, dim)
        cov = identity_covariance(dim)
        assert distance(u, v, MetricId.MD, cov) == distance(u, v, MetricId.ED)


def test_pearson_perfect_correlation():
    assert distance([1.0, 2.0, 3.0], [2.0, 4.0, 6.0], MetricId.PD) == pytest.approx(0.0)


def test_lance_williams_zero_denominator_terms_contribute_zero():
    assert distance([0.0, 1.0], [0.0, 3.0], MetricId.LD) == pytest.approx(0.5)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.floats(-10, 10), min_size=2, max_size=16),
    st.data(),
)
def test_symmetry(u, data):
    v = data.draw(
        st.lists(st.floats(-10, 10), min_size=len(u), max_size=len(u))
    )
    cov = identity_covariance(len(u))
    for metric in ALL_METRICS:
        try:
            forward = distance(u, v, metric, cov if metric is MetricId.MD else None)
            backward = distance(v, u, metric, cov if metric is MetricId.MD else None)
        except DegenerateInput:
            continue
        assert forward == pytest.approx(backward, rel=1e-12, abs=1e-12)


def test_triangle_inequality_ed_mhd():
    rng = random.Random(11)
    for _ in range(1000):
        dim = rng.randint(2, 8)
        a = [rng.uniform(-5, 5) for _ in range(dim)]
        b = [rng.uniform(-5, 5) for _ in range(dim)]
        c = [rng.uniform(-5, 5) for _ in range(dim)]
        for metric in (MetricId.ED, MetricId.MHD):
            ab = distance(a, b, metric)
            bc = distance(b, c, metric)
            ac = distance(a, c, metric)
            assert ac <= ab + bc + 1e-9


def test_scale_invariance_cd_pd():
    rng = random.Random(21)
    for _ in range(100):
        dim = rng.randint(2, 16)
        u, v = random_pair(rng, dim)
        alpha = rng.uniform(0.01, 100)
        for metric in (MetricId.CD, MetricId.PD):
            base = distance(u, v, metric)
            scaled = distance([alpha * x for x in u], v, metric)
            assert scaled == pytest.approx(base, rel=1e-9, abs=1e-9)


def test_unit_sphere_ed_squared_is_twice_cd():
    rng = random.Random(31)
    for _ in range(100):
        dim = rng.randint(2, 16)
        u = np.array([rng.uniform(-1, 1) for _ in range(dim)])
        v = np.array([rng.uniform(-1, 1) for _ in range(dim)])
        u /= np.linalg.norm(u)
        v /= np.linalg.norm(v)
        ed = distance(u, v, MetricId.ED)
        cd = distance(u, v, MetricId.CD)
        assert ed**2 == pytest.approx(2 * cd, rel=1e-9, abs=1e-12)


# --- error paths ---


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        distance([1.0, 2.0], [1.0, 2.0, 3.0], MetricId.ED)


def test_cosine_zero_vector_degenerate():
    with pytest.raises(DegenerateInput):
        distance([0.0, 0.0], [1.0, 2.0], MetricId.CD)


def test_pearson_constant_vector_degenerate():
    with pytest.raises(DegenerateInput):
        distance([3.0, 3.0, 3.0], [1.0, 2.0, 3.0], MetricId.PD)


def test_braycurtis_zero_denominator_degenerate():
    with pytest.raises(DegenerateInput):
        distance([1.0, -1.0], [-1.0, 1.0], MetricId.BD)


def test_mahalanobis_requires_covariance():
    with pytest.raises(MissingCovariance):
        distance([1.0, 2.0], [2.0, 1.0], MetricId.MD)


# --- fit_covariance ---


def test_fit_covariance_degenerate_sample_is_scaled_identity():
    v = EmbeddingVector(np.array([1.0, 2.0, 3.0]))
    model = fit_covariance([v, v], epsilon_scale=1e-6)
    expected = np.eye(3) / 1e-6
    np.testing.assert_allclose(model.inverse_covariance, expected, rtol=1e-6)
    assert model.sample_count == 2


def test_fit_covariance_too_few_samples():
    with pytest.raises(TooFewSamples):
        fit_covariance([EmbeddingVector(np.array([1.0, 2.0]))])


def test_fit_covariance_isotropic_gaussian_recovers_precision():
    rng = np.random.default_rng(42)
    sigma = 0.7
    data = rng.normal(0.0, sigma, size=(10000, 4))
    model = fit_covariance([EmbeddingVector(row) for row in data])
    expected = np.eye(4) / sigma**2
    np.testing.assert_allclose(model.inverse_covariance, expected, rtol=0.05, atol=0.05)


def test_fit_covariance_mean_recorded():
    rng = np.random.default_rng(3)
    data = rng.normal(5.0, 1.0, size=(500, 3))
    model = fit_covariance([EmbeddingVector(row) for row in data])
    np.testing.assert_allclose(model.mean, data.mean(axis=0))


def test_covariance_model_rejects_asymmetric():
    with pytest.raises(Exception):
        CovarianceModel(
            mean=np.zeros(2),
            inverse_covariance=np.array([[1.0, 0.5], [0.0, 1.0]]),
            epsilon=0.0,
            sample_count=2,
        )


# --- minmax_normalize ---


def test_minmax_basic():
    assert minmax_normalize([1.0, 3.0, 5.0]) == [0.0, 0.5, 1.0]


def test_minmax_constant_list_maps_to_zeros():
    assert minmax_normalize([7.0, 7.0, 7.0]) == [0.0, 0.0, 0.0]


def test_minmax_empty_input():
    with pytest.raises(EmptyInput):
        minmax_normalize([])


def test_minmax_preserves_order_and_hits_bounds():
    rng = random.Random(8)
    xs = [rng.uniform(-100, 100) for _ in range(1000)]
    ys = minmax_normalize(xs)
    assert min(ys) == 0.0 and max(ys) == 1.0
    assert ys[xs.index(min(xs))] == 0.0
    assert ys[xs.index(max(xs))] == 1.0
    order_x = sorted(range(len(xs)), key=lambda i: xs[i])
    order_y = sorted(range(len(ys)), key=lambda i: ys[i])
    assert order_x == order_y
