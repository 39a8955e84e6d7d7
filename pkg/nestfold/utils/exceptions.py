"""
Exception hierarchy shared by every nestfold module.
"""
from __future__ import annotations


class NestfoldError(Exception):
    """Base exception for nestfold errors."""


# =============================================================================
# Declarations
# =============================================================================

class DeclarationError(NestfoldError):
    """Raised when a declaration program is malformed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class DeclarationSyntaxError(DeclarationError):
    """Raised when declaration source does not match the grammar."""


class DuplicateNameError(DeclarationError):
    """Raised when a declaration, parameter or constructor name is reused."""


class KindError(DeclarationError):
    """Raised when a type expression is ill-kinded."""


class ArityMismatchError(KindError):
    """Raised when a type constructor is applied to the wrong number of arguments."""


class UnboundParameterError(KindError):
    """Raised when a type variable is not a parameter of its declaration."""


class UnknownTypeConstructorError(KindError):
    """Raised when a type constructor has no declaration."""


class HigherOrderArgumentError(KindError):
    """Raised when a constructor takes a function-typed argument."""


class UnknownRootError(DeclarationError):
    """Raised when the requested root type is not declared."""


# =============================================================================
# Derivation
# =============================================================================

class DerivationError(NestfoldError):
    """Raised when an artifact cannot be derived."""


class OutOfClosureError(DerivationError):
    """Raised when a type mentions a constructor outside the closure."""


class FreeIndexVariableError(DerivationError):
    """Raised when a closed index is required but a variable is present."""


# =============================================================================
# Values
# =============================================================================

class ValueTypeError(NestfoldError):
    """Raised when a value does not inhabit the type at its index."""


class ValueSyntaxError(NestfoldError):
    """Raised when a value or index literal cannot be parsed."""


class EmptyCarrierError(NestfoldError):
    """Raised when a carrier set is empty."""


class AlgebraError(NestfoldError):
    """Raised when an algebra cannot be applied."""


class MissingCaseError(AlgebraError):
    """Raised when an algebra does not cover a fold case."""


class NativeFunctionError(AlgebraError):
    """Raised when a native function fails or is unknown."""


# =============================================================================
# Registries and output
# =============================================================================

class UnknownEntryError(NestfoldError):
    """Raised when a corpus entry is not registered."""


class UnknownPropertyError(NestfoldError):
    """Raised when a property is not registered."""


class EmitError(NestfoldError):
    """Raised when an emission request cannot be honoured."""
