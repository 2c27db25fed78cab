"""Exception types raised across the package."""


class TangleCountError(Exception):
    pass


class CycleError(TangleCountError, ValueError):
    """The generating relation is not acyclic, so it has no strict order closure."""


class SizeError(TangleCountError, ValueError):
    """A desk-scale size bound was exceeded."""


class Not31FreeError(TangleCountError, ValueError):
    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"poset contains an induced (3+1): {witness}")


class MalformedPathError(TangleCountError, ValueError):
    pass


class SpecMismatchError(TangleCountError, ValueError):
    pass


class ZeroConstantTermError(TangleCountError, ZeroDivisionError):
    pass


class CompositionOrderError(TangleCountError, ValueError):
    pass


class ValuationError(TangleCountError, ValueError):
    pass


class IntegralityError(TangleCountError, ArithmeticError):
    pass


class ParseError(TangleCountError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
