"""Exception types shared across the package."""


class WFAError(Exception):
    pass


class ShapeError(WFAError, ValueError):
    """Dimension mismatch, or a malformed semiring table."""


class SemiringMismatch(WFAError, ValueError):
    pass


class AlphabetMismatch(WFAError, ValueError):
    pass


class UnsupportedSemiring(WFAError, TypeError):
    """Raised when an operation is asked to run over a semiring it has no procedure for."""


class ParseError(WFAError):
    def __init__(self, msg, path=None, line=None, col=None):
        self.msg = msg
        self.path = path
        self.line = line
        self.col = col
        where = ':'.join(str(x) for x in (path, line, col) if x is not None)
        super().__init__(f'{where}: {msg}' if where else msg)
