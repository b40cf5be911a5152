"""
Custom exceptions for the multiobjective bat algorithm toolkit.
"""

from typing import Any, Dict, Optional


class MobaException(Exception):
    """Base exception for the toolkit."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class ContractViolationException(MobaException):
    """An operation was called outside its preconditions (shapes, bounds, ordering)."""

    pass


class ValidationException(MobaException):
    """Parameter validation exception."""

    pass


class ConfigurationException(MobaException):
    """Configuration exception."""

    pass


class ResourceNotFoundException(MobaException):
    """Resource not found exception."""

    pass


class OutputException(MobaException):
    """Output file could not be written."""

    pass


class BenchmarkException(MobaException):
    """A benchmark run failed for a reason outside the known error kinds."""

    pass


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3


def exit_code_for(exc: BaseException) -> int:
    """Convert exceptions to process exit codes."""

    if isinstance(
        exc,
        (ValidationException, ConfigurationException, ResourceNotFoundException),
    ):
        return EXIT_USAGE

    elif isinstance(exc, OutputException):
        return EXIT_IO

    else:
        return EXIT_FAILURE

