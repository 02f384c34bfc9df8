"""Text-generation clients used to complete triplets: an HTTP client for a
hosted model, a deterministic offline stub, and a scripted client for tests."""

from .client import (
    GenerationClient,
    GenerationKind,
    GenerationRequest,
    HttpGenerationClient,
    ScriptedGenerationClient,
    StubGenerationClient,
    render_template,
    EVIDENCE_REMOVAL_TEMPLATE,
    POSITIVE_REWRITE_TEMPLATE,
)

__all__ = [
    "GenerationClient",
    "GenerationKind",
    "GenerationRequest",
    "HttpGenerationClient",
    "ScriptedGenerationClient",
    "StubGenerationClient",
    "render_template",
    "EVIDENCE_REMOVAL_TEMPLATE",
    "POSITIVE_REWRITE_TEMPLATE",
]
