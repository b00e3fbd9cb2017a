"""
Error types for heunlame.

Every failure raised by the library derives from HeunlameError so callers
(the CLI, the MCP server) can map it to an exit status or a message.
"""


class HeunlameError(Exception):
    """Base class for every library error."""


class ConfigError(HeunlameError, ValueError):
    """Invalid configuration value, CLI flag or environment override."""


class DomainError(HeunlameError, ValueError):
    """Argument outside the domain of an operation."""


class PoleError(DomainError):
    """Evaluation at a pole (Gamma at 0, -1, -2, ... or an excluded basis parameter)."""


class DivergenceError(HeunlameError, ArithmeticError):
    """A series or continued fraction failed to converge."""


class PivotError(HeunlameError, ArithmeticError):
    """A forward recurrence hit alpha_n = 0 before the requested index."""

    def __init__(self, index: int):
        super().__init__(f"alpha_{index} vanishes; forward solve cannot continue past n={index}")
        self.index = index


class SolverError(HeunlameError, RuntimeError):
    """An eigenvalue or minimal-solution solver did not reach its target."""


class SpectrumError(SolverError):
    """The supplied energy is not a characteristic root of the family."""
