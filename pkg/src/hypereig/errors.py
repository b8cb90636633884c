"""Exception types shared across the package.

The CLI maps these onto exit codes, so library code should raise the most
specific class that applies instead of bare ValueError/RuntimeError.
"""

from __future__ import annotations


class HypereigError(Exception):
    """Base class for all library errors."""


class ParseError(HypereigError):
    """Malformed input file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(HypereigError):
    """An operation was called on input outside its stated domain."""


class NotZTensorError(PreconditionError):
    """Tensor has a positive off-diagonal entry. Carries the offending orbit."""

    def __init__(self, orbit, value):
        super().__init__(f"positive off-diagonal entry {value} at orbit {orbit}")
        self.orbit = orbit
        self.value = value


class NotWeaklyIrreducibleError(PreconditionError):
    """The tensor's index digraph is not strongly connected."""


class DisconnectedError(PreconditionError):
    """A connected hypergraph was required."""


class BudgetExceededError(PreconditionError):
    """Brute-force enumeration would exceed the candidate budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration needs {required} candidates, budget is {budget}"
        )
        self.required = required
        self.budget = budget


class ConvergenceError(HypereigError):
    """Iteration budget exhausted. Carries the last certified bounds."""

    def __init__(self, message: str, lower: float, upper: float, iterations: int):
        super().__init__(
            f"{message} (last bounds [{lower!r}, {upper!r}] "
            f"after {iterations} iterations)"
        )
        self.lower = lower
        self.upper = upper
        self.iterations = iterations


class ResidualCheckError(HypereigError):
    """An enumerated eigenvector failed its residual check.

    Theory guarantees every emitted vector is an eigenvector, so this
    signals an implementation bug or solver inaccuracy, never bad input.
    """

    def __init__(self, exponent, residual: float, tol: float):
        super().__init__(
            f"exponent vector {exponent} has residual {residual:.3e} > tol {tol:.3e}"
        )
        self.exponent = exponent
        self.residual = residual
        self.tol = tol
