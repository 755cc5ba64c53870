from .evidence import (
    EvidenceBundle,
    EvidenceItem,
    Sufficiency,
    build_evidence,
    check_sufficiency,
)
from .extractive import extractive_answer
from .generate import RemoteChatProvider, generate_answer
from .localize import TranslationProvider, localize
from .structured import (
    AnswerEnvelope,
    QueryRequest,
    SourceRef,
    StructuredAnswer,
    answer_violations,
    envelope_violations,
    parse_envelope,
    refusal,
)

__all__ = [
    "AnswerEnvelope",
    "EvidenceBundle",
    "EvidenceItem",
    "QueryRequest",
    "RemoteChatProvider",
    "SourceRef",
    "StructuredAnswer",
    "Sufficiency",
    "TranslationProvider",
    "answer_violations",
    "build_evidence",
    "check_sufficiency",
    "envelope_violations",
    "extractive_answer",
    "generate_answer",
    "localize",
    "parse_envelope",
    "refusal",
]
