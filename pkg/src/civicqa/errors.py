"""Exception types shared across the package."""
from __future__ import annotations


class CivicQAError(Exception):
    """Base class for all package errors."""


class ConfigurationError(CivicQAError):
    """Fatal misconfiguration, e.g. embedding dimension disagreement."""


class InitiativeNotFoundError(CivicQAError):
    """The remote source does not know the requested initiative."""


class FetchError(CivicQAError):
    """Transient failure while fetching remote pages.

    Carries the page cursor so the caller can resume the fetch.
    """

    def __init__(self, message: str, page: int):
        super().__init__(message)
        self.page = page
        self.retriable = True


class ProviderUnavailableError(CivicQAError):
    """A remote provider failed after retries; safe to retry later."""

    def __init__(self, message: str, retry_after_s: float = 5.0):
        super().__init__(message)
        self.retry_after_s = retry_after_s


class GenerationContractError(CivicQAError):
    """The generation provider violated the answer envelope twice."""

    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self.violations = violations or []


class IndexFormatError(CivicQAError):
    """Index file is not readable: bad magic, version or dimension."""
