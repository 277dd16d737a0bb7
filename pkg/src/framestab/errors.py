"""Shared exception types."""

from __future__ import annotations


class FramestabError(Exception):
    """Base class for library errors."""


class ParseError(FramestabError):
    """Malformed matrix text. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EnumerationLimit(FramestabError):
    """An exact computation would require enumerating more objects than the cap allows."""


class BudgetExceeded(FramestabError):
    """A backtracking search ran out of its node budget.

    ``partial`` holds whatever group was generated by the automorphisms found
    before the budget ran out; it is a lower bound only, never the full group.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
        self.lower_bound_only = True
