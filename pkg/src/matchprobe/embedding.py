"""Embedding providers: a uniform text -> vector interface over precomputed
vector files, an HTTP embeddings API, and two deterministic built-in
embedders (hashed bag-of-words and hashed character trigrams).

Vectors are cached per provider keyed by (model id, content hash of the
text), so each distinct sentence is embedded once per model in a run. The
vector-file format doubles as the recorded-response cassette for the HTTP
provider: record a run with :func:`save_vector_file`, replay it with
:class:`VectorFileProvider`.

File format (UTF-8, line-delimited JSON):

    header  {"model_id", "dimension", "count", "encoding"}
    record  {"text_hash", "text"?, "components"}        encoding="decimal"
    record  {"text_hash", "text"?, "components_b64"}    encoding="binary"

Decimal components are written with Python's shortest exact float repr
(<= 17 significant digits) and round-trip bit-exactly; binary components
are base64-encoded little-endian float64 and are bit-exact by construction.
"""

from __future__ import annotations

import base64
import json
import os
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .corpus import text_hash
from .errors import (
    DimensionMismatch,
    FormatError,
    MissingVector,
    ProviderError,
    ZeroVector,
)
from .tagging.tokens import tokenize


@dataclass(frozen=True, eq=False)
class EmbeddingVector:
    """A fixed-dimension vector of finite reals."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 1:
            raise DimensionMismatch(f"expected 1-D vector, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("embedding vector contains NaN or Inf")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @property
    def dimension(self) -> int:
        return len(self.values)

    def tolist(self) -> list[float]:
        return self.values.tolist()


def normalize(v: EmbeddingVector) -> EmbeddingVector:
    """Scale to unit L2 norm; direction is preserved."""
    norm = float(np.linalg.norm(v.values))
    if norm == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    return EmbeddingVector(v.values / norm)


class ProviderKind(Enum):
    VECTOR_FILE = "VectorFile"
    HTTP_API = "HttpApi"
    BAG_OF_WORDS = "BagOfWords"
    CHAR_NGRAM = "CharNgram"


@dataclass(frozen=True)
class ProviderSpec:
    kind: ProviderKind
    model_id: str
    dimension: int
    endpoint: str = ""
    api_key_env: str = ""

    def __post_init__(self):
        if self.dimension <= 0:
            raise DimensionMismatch(f"dimension must be positive, got {self.dimension}")


# FNV-1a 64-bit parameters.
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_FNV_MASK = 0xFFFFFFFFFFFFFFFF


def fnv1a_64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & _FNV_MASK
    return h


class Provider:
    """Base provider: caching, dimension enforcement, and batch embedding."""

    def __init__(self, spec: ProviderSpec):
        self.spec = spec
        self._cache: dict[str, EmbeddingVector] = {}

    def _compute(self, text: str) -> EmbeddingVector:
        raise NotImplementedError

    def embed(self, text: str) -> EmbeddingVector:
        key = text_hash(text)
        vector = self._cache.get(key)
        if vector is None:
            vector = self._compute(text)
            if vector.dimension != self.spec.dimension:
                raise DimensionMismatch(
                    f"{self.spec.model_id}: got dimension {vector.dimension}, "
                    f"expected {self.spec.dimension}"
                )
            self._cache[key] = vector
        return vector

    def embed_many(self, texts: Sequence[str]) -> list[EmbeddingVector]:
        return [self.embed(t) for t in texts]

    def cached_entries(self) -> dict[str, EmbeddingVector]:
        """Snapshot of every vector embedded so far, keyed by text hash."""
        return dict(self._cache)


class BagOfWordsProvider(Provider):
    """Hashed token counts: FNV-1a of each token, bucketed modulo dimension.

    Uses the pipeline tokenizer, so two sentences with equal word multisets
    embed to the same vector regardless of word order.
    """

    def __init__(self, dimension: int = 64, model_id: str | None = None):
        super().__init__(
            ProviderSpec(
                kind=ProviderKind.BAG_OF_WORDS,
                model_id=model_id or f"bow-{dimension}",
                dimension=dimension,
            )
        )

    def _compute(self, text: str) -> EmbeddingVector:
        counts = np.zeros(self.spec.dimension)
        for token in tokenize(text):
            counts[fnv1a_64(token.encode("utf-8")) % self.spec.dimension] += 1.0
        return EmbeddingVector(counts)


class CharNgramProvider(Provider):
    """Hashed character n-gram counts over the lowercased raw string."""

    def __init__(self, dimension: int = 256, n: int = 3, model_id: str | None = None):
        super().__init__(
            ProviderSpec(
                kind=ProviderKind.CHAR_NGRAM,
                model_id=model_id or f"char{n}-{dimension}",
                dimension=dimension,
            )
        )
        self.n = n

    def _compute(self, text: str) -> EmbeddingVector:
        lowered = text.lower()
        if len(lowered) < self.n:
            grams: Iterable[str] = [lowered] if lowered else []
        else:
            grams = (lowered[i : i + self.n] for i in range(len(lowered) - self.n + 1))
        counts = np.zeros(self.spec.dimension)
        for gram in grams:
            counts[fnv1a_64(gram.encode("utf-8")) % self.spec.dimension] += 1.0
        return EmbeddingVector(counts)


class VectorFileProvider(Provider):
    """Serves precomputed vectors loaded from a vector file."""

    def __init__(self, path: str | Path):
        data = load_vector_file(path)
        super().__init__(
            ProviderSpec(
                kind=ProviderKind.VECTOR_FILE,
                model_id=data.model_id,
                dimension=data.dimension,
            )
        )
        self._vectors = data.vectors

    def _compute(self, text: str) -> EmbeddingVector:
        key = text_hash(text)
        try:
            return self._vectors[key]
        except KeyError:
            raise MissingVector(
                f"{self.spec.model_id}: no vector for text {text[:60]!r}"
            ) from None


class HttpApiProvider(Provider):
    """OpenAI-compatible embeddings endpoint client with batching and retry.

    Request: ``{"model": ..., "input": [...]}``; response:
    ``{"data": [{"index": i, "embedding": [...]}, ...]}``. The bearer token
    is read from the environment variable named in the provider spec.
    ``post`` is injectable for tests and cassette recording.
    """

    def __init__(
        self,
        spec: ProviderSpec,
        batch_size: int = 64,
        max_retries: int = 3,
        timeout: float = 30.0,
        post: Callable[..., object] | None = None,
    ):
        super().__init__(spec)
        self.batch_size = batch_size
        self.max_retries = max_retries
        self.timeout = timeout
        if post is None:
            import requests

            session = requests.Session()

            def post(url, **kwargs):
                return session.post(url, **kwargs)

        self._post = post

    def _headers(self) -> dict[str, str]:
        headers = {"Content-Type": "application/json"}
        if self.spec.api_key_env:
            token = os.environ.get(self.spec.api_key_env, "")
            if token:
                headers["Authorization"] = f"Bearer {token}"
        return headers

    def _request_batch(self, batch: list[str]) -> list[EmbeddingVector]:
        last_error: Exception | None = None
        for attempt in range(self.max_retries):
            try:
                response = self._post(
                    self.spec.endpoint,
                    json={"model": self.spec.model_id, "input": list(batch)},
                    headers=self._headers(),
                    timeout=self.timeout,
                )
                status = getattr(response, "status_code", 200)
                if status >= 400:
                    raise ProviderError(f"HTTP {status} from {self.spec.endpoint}")
                payload = response.json()
                rows = sorted(payload["data"], key=lambda r: r["index"])
                if len(rows) != len(batch):
                    raise ProviderError(
                        f"expected {len(batch)} embeddings, got {len(rows)}"
                    )
                return [EmbeddingVector(np.asarray(r["embedding"])) for r in rows]
            except ProviderError as exc:
                last_error = exc
            except Exception as exc:  # transport or payload shape
                last_error = ProviderError(str(exc))
            if attempt + 1 < self.max_retries:
                time.sleep(min(0.1 * 2**attempt, 2.0))
        raise last_error  # type: ignore[misc]

    def embed_many(self, texts: Sequence[str]) -> list[EmbeddingVector]:
        missing = [t for t in texts if text_hash(t) not in self._cache]
        # De-duplicate while preserving order.
        unique_missing = list(dict.fromkeys(missing))
        for start in range(0, len(unique_missing), self.batch_size):
            batch = unique_missing[start : start + self.batch_size]
            vectors = self._request_batch(batch)
            for text, vector in zip(batch, vectors):
                if vector.dimension != self.spec.dimension:
                    raise DimensionMismatch(
                        f"{self.spec.model_id}: got dimension {vector.dimension}, "
                        f"expected {self.spec.dimension}"
                    )
                self._cache[text_hash(text)] = vector
        return [self.embed(t) for t in texts]

    def _compute(self, text: str) -> EmbeddingVector:
        return self._request_batch([text])[0]


@dataclass
class VectorFileData:
    model_id: str
    dimension: int
    encoding: str
    vectors: dict[str, EmbeddingVector]
    texts: dict[str, str] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.vectors)


def save_vector_file(
    path: str | Path,
    model_id: str,
    dimension: int,
    entries: dict[str, EmbeddingVector],
    texts: dict[str, str] | None = None,
    encoding: str = "decimal",
) -> None:
    """Write a vector file; ``entries`` maps text hash -> vector."""
    if encoding not in ("decimal", "binary"):
        raise FormatError(f"unknown encoding {encoding!r}")
    texts = texts or {}
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        header = {
            "model_id": model_id,
            "dimension": dimension,
            "count": len(entries),
            "encoding": encoding,
        }
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for key in sorted(entries):
            vector = entries[key]
            if vector.dimension != dimension:
                raise DimensionMismatch(
                    f"entry {key[:12]} has dimension {vector.dimension}, header says {dimension}"
                )
            record: dict = {"text_hash": key}
            if key in texts:
                record["text"] = texts[key]
            if encoding == "decimal":
                record["components"] = vector.tolist()
            else:
                raw = np.asarray(vector.values, dtype="<f8").tobytes()
                record["components_b64"] = base64.b64encode(raw).decode("ascii")
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    os.replace(tmp, path)


def load_vector_file(path: str | Path) -> VectorFileData:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise FormatError(f"{path}: empty vector file")
    try:
        header = json.loads(lines[0])
        model_id = header["model_id"]
        dimension = int(header["dimension"])
        count = int(header["count"])
        encoding = header.get("encoding", "decimal")
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad header ({exc})") from None
    if encoding not in ("decimal", "binary"):
        raise FormatError(f"{path}: unknown encoding {encoding!r}")
    vectors: dict[str, EmbeddingVector] = {}
    texts: dict[str, str] = {}
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            key = record["text_hash"]
            if encoding == "decimal":
                arr = np.asarray(record["components"], dtype=np.float64)
            else:
                raw = base64.b64decode(record["components_b64"])
                arr = np.frombuffer(raw, dtype="<f8").astype(np.float64)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"{path}:{line_no}: bad record ({exc})") from None
        if len(arr) != dimension:
            raise DimensionMismatch(
                f"{path}:{line_no}: vector has dimension {len(arr)}, header says {dimension}"
            )
        vectors[key] = EmbeddingVector(arr)
        if "text" in record:
            texts[key] = record["text"]
    if len(vectors) != count:
        raise FormatError(f"{path}: header count {count} != {len(vectors)} records")
    return VectorFileData(
        model_id=model_id,
        dimension=dimension,
        encoding=encoding,
        vectors=vectors,
        texts=texts,
    )


def build_provider(spec: ProviderSpec, **kwargs) -> Provider:
    """Instantiate the provider class matching a spec."""
    if spec.kind is ProviderKind.BAG_OF_WORDS:
        return BagOfWordsProvider(dimension=spec.dimension, model_id=spec.model_id)
    if spec.kind is ProviderKind.CHAR_NGRAM:
        return CharNgramProvider(
            dimension=spec.dimension, model_id=spec.model_id, **kwargs
        )
    if spec.kind is ProviderKind.VECTOR_FILE:
        return VectorFileProvider(spec.endpoint)
    if spec.kind is ProviderKind.HTTP_API:
        return HttpApiProvider(spec, **kwargs)
    raise ValueError(f"unknown provider kind {spec.kind!r}")
