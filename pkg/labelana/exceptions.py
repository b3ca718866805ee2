"""Exceptions raised by labelana."""
from __future__ import annotations


class LabelanaError(Exception):
    """Base class for all labelana errors."""

    kind = "Error"


class ParseError(LabelanaError):
    """Input text does not follow the .lgr format or the JSON schema."""

    kind = "ParseError"

    def __init__(self, message: str, line: int | None = None) -> None:
        """Initialize with an optional 1-based line number."""
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(LabelanaError):
    """A well-formed graph or config breaks an invariant."""

    def __init__(self, kind: str, subject: str, message: str | None = None) -> None:
        """Initialize with the violated invariant and its subject."""
        super().__init__(message or f"{kind}: {subject}")
        self.kind = kind
        self.subject = subject


class ResourceBoundExceeded(LabelanaError):
    """A configured size limit was exceeded."""

    kind = "ResourceBoundExceeded"


class AtomBudgetExceeded(ResourceBoundExceeded):
    """Explicit enumeration over atoms requested beyond the atom cap."""

    kind = "AtomBudgetExceeded"

    def __init__(self, atoms: int, cap: int) -> None:
        """Initialize with the atom count and the cap."""
        super().__init__(f"{atoms} atoms exceed the configured cap of {cap}")
        self.atoms = atoms
        self.cap = cap


class EmptyOmega0(LabelanaError):
    """Every vertex is a source, so the family holds only the empty set."""

    kind = "EmptyOmega0"


class WellDefinednessFailure(LabelanaError):
    """A quotient operation disagreed with its representatives."""

    kind = "WellDefinednessFailure"


class OracleInapplicable(LabelanaError):
    """The classical oracle needs an injectively labeled graph."""

    kind = "OracleInapplicable"


class ConsistencyError(LabelanaError):
    """Computed predicates or verdicts contradict a proved implication."""

    kind = "ConsistencyError"

    def __init__(self, violations: list[str]) -> None:
        """Initialize with the list of violated implications."""
        super().__init__("; ".join(violations))
        self.violations = violations
