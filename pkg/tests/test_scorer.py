"""Scorer gateway: range enforcement, stubs, HTTP client, cassettes."""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from matchprobe.errors import RangeViolation, ScorerError
from matchprobe.scorer import (
    CassetteRecorder,
    CassetteScorer,
    ConstantScorer,
    ContainmentScorer,
    HttpScorer,
    ScorerSpec,
    TokenOverlapScorer,
    check_range,
)


class FakeResponse:
    def __init__(self, status_code, payload):
        self.status_code = status_code
        self._payload = payload

    def json(self):
        return self._payload


def make_post(score=0.5, status=200, fail_times=0):
    state = {"fails": fail_times, "calls": []}

    def post(url, json=None, headers=None, timeout=None):
        state["calls"].append(json)
        if state["fails"] > 0:
            state["fails"] -= 1
            raise ConnectionError("down")
        return FakeResponse(status, {"score": score})

    post.state = state
    return post


def spec(name="test-scorer"):
    return ScorerSpec(name=name, endpoint="http://scorer.test/score", order_sensitive=True)


def test_check_range_rejects_out_of_range():
    with pytest.raises(RangeViolation):
        check_range(1.0000001, "x")
    with pytest.raises(RangeViolation):
        check_range(-0.1, "x")
    assert check_range(0.0, "x") == 0.0
    assert check_range(1.0, "x") == 1.0


def test_http_scorer_returns_score():
    scorer = HttpScorer(spec(), post=make_post(score=0.73))
    assert scorer.score("one", "two") == 0.73


def test_http_scorer_sends_ordered_pair():
    post = make_post()
    scorer = HttpScorer(spec(), post=post)
    scorer.score("first sentence", "second sentence")
    assert post.state["calls"][0] == {"s1": "first sentence", "s2": "second sentence"}


def test_http_scorer_range_violation_not_clamped():
    scorer = HttpScorer(spec(), post=make_post(score=1.5))
    with pytest.raises(RangeViolation):
        scorer.score("a", "b")


def test_http_scorer_retries_then_succeeds():
    scorer = HttpScorer(spec(), post=make_post(score=0.4, fail_times=2))
    assert scorer.score("a", "b") == 0.4


def test_http_scorer_error_after_retries():
    scorer = HttpScorer(spec(), post=make_post(fail_times=10))
    with pytest.raises(ScorerError):
        scorer.score("a", "b")


def test_http_scorer_against_real_server():
    class Handler(BaseHTTPRequestHandler):
        def do_POST(self):
            body = json.loads(self.rfile.read(int(self.headers["Content-Length"])))
            score = 1.0 if body["s1"] == body["s2"] else 0.25
            payload = json.dumps({"score": score}).encode()
            self.send_response(200)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(payload)))
            self.end_headers()
            self.wfile.write(payload)

        def log_message(self, *args):
            pass

    server = HTTPServer(("127.0.0.1", 0), Handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        endpoint = f"http://127.0.0.1:{server.server_port}/score"
        scorer = HttpScorer(ScorerSpec(name="live", endpoint=endpoint, order_sensitive=True))
        assert scorer.score("same", "same") == 1.0
        assert scorer.score("same", "different") == 0.25
    finally:
        server.shutdown()


# --- stubs ---


def test_constant_scorer():
    scorer = ConstantScorer(0.5)
    assert scorer.score("a", "b") == 0.5
    assert scorer.score("b", "a") == 0.5


def test_token_overlap_identity_is_one():
    scorer = TokenOverlapScorer()
    assert scorer.score("Exactly the same text.", "Exactly the same text.") == 1.0
    assert scorer.score("alpha beta", "gamma delta") == 0.0
    assert scorer.score("alpha beta", "beta alpha") == 1.0  # order-insensitive


def test_containment_scorer_is_order_sensitive():
    scorer = ContainmentScorer()
    longer = "The orchestra rehearsed the symphony in the old concert hall."
    shorter = "The orchestra rehearsed the symphony."
    assert scorer.score(longer, shorter) == 1.0
    assert scorer.score(shorter, longer) == 0.0
    assert scorer.score("x y z", "x y z") == 1.0


def test_containment_ignores_case_and_edge_punctuation():
    scorer = ContainmentScorer()
    assert scorer.score("In 2012, Jordan started all games.", "jordan started ALL games") == 1.0


# --- cassettes ---


def test_cassette_record_and_replay_bit_exact(tmp_path):
    path = tmp_path / "cassette.jsonl"
    recorder = CassetteRecorder(HttpScorer(spec(), post=make_post(score=0.123456789)), path)
    pairs = [("alpha one", "beta two"), ("beta two", "alpha one")]
    recorded = [recorder.score(a, b) for a, b in pairs]
    replay = CassetteScorer(path)
    replayed = [replay.score(a, b) for a, b in pairs]
    assert recorded == replayed


def test_cassette_is_order_sensitive(tmp_path):
    path = tmp_path / "cassette.jsonl"

    def post(url, json=None, headers=None, timeout=None):
        score = 0.9 if json["s1"] < json["s2"] else 0.1
        return FakeResponse(200, {"score": score})

    recorder = CassetteRecorder(HttpScorer(spec(), post=post), path)
    assert recorder.score("aaa", "zzz") == 0.9
    assert recorder.score("zzz", "aaa") == 0.1
    replay = CassetteScorer(path)
    assert replay.score("aaa", "zzz") == 0.9
    assert replay.score("zzz", "aaa") == 0.1


def test_cassette_unknown_pair_errors(tmp_path):
    path = tmp_path / "cassette.jsonl"
    CassetteRecorder(ConstantScorer(0.5), path).score("a b", "c d")
    replay = CassetteScorer(path)
    with pytest.raises(ScorerError):
        replay.score("never", "seen")


def test_cassette_bad_record_rejected(tmp_path):
    path = tmp_path / "cassette.jsonl"
    path.write_text('{"s1_hash": "x"}\n')
    with pytest.raises(ScorerError):
        CassetteScorer(path)
