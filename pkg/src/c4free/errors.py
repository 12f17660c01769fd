"""Exception types shared across the package."""


class C4FreeError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimePower(C4FreeError, ValueError):
    pass


class NotPrime(C4FreeError, ValueError):
    pass


class DivisionByZero(C4FreeError, ZeroDivisionError):
    pass


class SizeMismatch(C4FreeError, ValueError):
    pass


class Unsatisfiable(C4FreeError):
    """A requested combinatorial configuration does not exist."""


class OutOfRange(C4FreeError, ValueError):
    pass


class FormatError(C4FreeError, ValueError):
    """Malformed graph, coloring, CNF or solution text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(FormatError):
    pass


class SearchBudgetExceeded(C4FreeError):
    """Node budget exhausted; carries the best solution found so far."""

    def __init__(self, best, witness, nodes):
        self.best = best
        self.witness = witness
        self.nodes = nodes
        super().__init__(f"node budget exhausted after {nodes} nodes (best so far {best})")

    def __reduce__(self):
        return type(self), (self.best, self.witness, self.nodes)


class BudgetExceeded(C4FreeError):
    """SAT conflict budget exhausted. Distinct from an UNSAT answer."""


class NoBoundFound(C4FreeError):
    pass


class AlreadyViolated(C4FreeError):
    pass


class UnfillableCell(C4FreeError):
    pass


class InconsistentOneHot(C4FreeError):
    pass
