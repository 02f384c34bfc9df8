"""Run configuration: a flat key=value file with environment-variable
interpolation, overridden by command-line flags.

File syntax: one ``key = value`` per line, ``#`` comments, ``${VAR}``
expands from the environment (empty when unset). ``method`` and ``scorer``
keys may repeat to build lists.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from pathlib import Path

_VAR_RE = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)\}")


def interpolate_env(value: str) -> str:
    return _VAR_RE.sub(lambda m: os.environ.get(m.group(1), ""), value)


def parse_config_file(path: str | Path) -> dict[str, list[str]]:
    """Key -> list of values (repeated keys accumulate)."""
    entries: dict[str, list[str]] = {}
    for line_no, raw in enumerate(Path(path).read_text("utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{line_no}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        entries.setdefault(key.strip(), []).append(interpolate_env(value.strip()))
    return entries


@dataclass
class RunConfig:
    seed: int | None = None
    output_dir: str = "out"
    tagger: str = "lexicon"
    methods: list[str] = field(default_factory=list)
    scorers: list[str] = field(default_factory=list)
    gen_endpoint: str = ""
    gen_api_key_env: str = "MATCHPROBE_GEN_API_KEY"
    embed_api_key_env: str = "MATCHPROBE_EMBED_API_KEY"
    epsilon_scale: float = 1e-6
    max_workers: int = 1
    batch_size: int = 64
    timeout: float = 30.0
    max_retries: int = 3
    figures: bool = True


def load_run_config(path: str | Path | None) -> RunConfig:
    config = RunConfig()
    if path is None:
        return config
    entries = parse_config_file(path)

    def last(key: str) -> str | None:
        values = entries.get(key)
        return values[-1] if values else None

    if last("seed") is not None:
        config.seed = int(last("seed"))  # type: ignore[arg-type]
    if last("output_dir"):
        config.output_dir = last("output_dir")  # type: ignore[assignment]
    if last("tagger"):
        config.tagger = last("tagger")  # type: ignore[assignment]
    config.methods = entries.get("method", [])
    config.scorers = entries.get("scorer", [])
    for key in ("gen_endpoint", "gen_api_key_env", "embed_api_key_env"):
        if last(key):
            setattr(config, key, last(key))
    for key, cast in (
        ("epsilon_scale", float),
        ("max_workers", int),
        ("batch_size", int),
        ("timeout", float),
        ("max_retries", int),
    ):
        if last(key) is not None:
            setattr(config, key, cast(last(key)))  # type: ignore[arg-type]
    if last("figures") is not None:
        config.figures = last("figures").lower() in ("1", "true", "yes", "on")  # type: ignore[union-attr]
    return config
