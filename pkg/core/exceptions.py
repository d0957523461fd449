# core/exceptions.py
"""
Core exception definitions for arcalg.
"""

class ArcAlgebraError(Exception):
    """Base exception for arcalg errors."""
    pass

class ParseError(ArcAlgebraError):
    """Raised when weight, diagram, element or polynomial text is malformed."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)
        self.position = position

class StructureError(ArcAlgebraError):
    """Raised when diagram data violates a structural invariant."""
    pass

class BlockMismatchError(ArcAlgebraError):
    """Raised when operands live in different blocks."""
    pass

class ContractViolation(ArcAlgebraError):
    """Raised when the surgery engine is driven with inputs it never accepts."""
    pass

class PreconditionError(ArcAlgebraError):
    """Raised when an operation is applied outside its domain."""
    pass

class ConfigError(ArcAlgebraError):
    """Raised when a verification config file fails validation."""
    pass

class VerificationFailure(ArcAlgebraError):
    """Raised when a verification suite finds counterexamples."""

    def __init__(self, suite: str, counterexamples: list[str]):
        shown = counterexamples[0] if counterexamples else "no detail"
        super().__init__(f"suite '{suite}' failed: {shown}")
        self.suite = suite
        self.counterexamples = list(counterexamples)
