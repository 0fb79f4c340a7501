"""
Exception hierarchy shared by the parsers, the engine, the oracle and the CLI
"""
from typing import Optional


class ChromaticError(Exception):
    """Base class for every error raised by this package"""


class ConfigError(ChromaticError, ValueError):
    """An environment variable holds an unusable value"""


class GraphError(ChromaticError, ValueError):
    """Invalid graph construction or edge surgery"""


class ColoringError(ChromaticError, ValueError):
    """A colouring does not fit its graph, palette or fold"""


class GraphParseError(ChromaticError, ValueError):
    """Input text could not be turned into a graph"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class BudgetExceededError(ChromaticError):
    """The brute-force oracle refused an instance larger than its budget"""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} candidate assignments, budget is {budget}; "
            "shrink the instance or raise the budget"
        )


class InvariantViolation(ChromaticError):
    """An internal invariant failed (non-exact division, cross-check mismatch)"""


class UsageError(ChromaticError):
    """Command-line usage problem"""
