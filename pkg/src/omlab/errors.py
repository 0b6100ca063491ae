"""Exception hierarchy shared by every omlab module."""

from __future__ import annotations


class OmlabError(Exception):
    pass


class IndexOutOfRange(OmlabError):
    """A table is not square or holds an entry outside ``0..n-1``."""


class AxiomViolation(OmlabError):
    def __init__(self, reports):
        self.reports = list(reports)
        names = ", ".join(r.law for r in self.reports)
        super().__init__(f"axioms violated: {names}")


class NotIOML(OmlabError):
    pass


class NotOrtholattice(OmlabError):
    pass


class BudgetExceeded(OmlabError):
    pass


class MalformedProgram(OmlabError):
    pass


class InvalidState(OmlabError):
    pass


class ParseError(OmlabError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DuplicateHeader(ParseError):
    pass


class SizeMismatch(ParseError):
    pass
