"""
Exception hierarchy shared by every package module.

Each error carries the process exit code the CLI reports when it escapes a run.
"""
from typing import Any, Dict, Optional


class SfMaslovError(Exception):
    """Base class for all errors raised by sfmaslov."""
    exit_code = 3

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.details: Dict[str, Any] = details or {}


class InputError(SfMaslovError):
    """Non-finite or malformed numeric input."""


class PolicyError(InputError):
    """Tolerance policy values violate their invariants."""
    exit_code = 2


class DomainError(SfMaslovError):
    """An operation was called outside its precondition."""


class ChartDomainError(DomainError):
    """A graph chart was requested for a Lagrangian that meets the chart complement."""


class CertificationError(SfMaslovError):
    """Spectral-flow certification ran out of refinements on some subinterval."""

    def __init__(self, message: str, subinterval: tuple, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message, details)
        self.subinterval = subinterval


class OracleInconclusiveError(SfMaslovError):
    """The sampling oracle could not pair eigenvalue tracks unambiguously."""


class ChartCoverError(SfMaslovError):
    """No admissible chart cover of a Lagrangian path was found."""


class NumericError(SfMaslovError):
    """A linear solve was too ill-conditioned to trust."""


class SearchError(SfMaslovError):
    """A randomized search exhausted its retry budget."""


class InternalError(SfMaslovError):
    """A construction that cannot fail in exact arithmetic failed numerically."""


class ScenarioError(SfMaslovError):
    """Scenario or instance file could not be parsed or validated."""
    exit_code = 2
