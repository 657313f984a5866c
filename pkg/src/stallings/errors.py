"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class StallingsError(Exception):
    """Root of every error raised by the package."""

    exit_code = 1


class ParseError(StallingsError, ValueError):
    exit_code = 2

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(self._render())

    def _render(self) -> str:
        if self.line is None and self.column is None:
            return self.message
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        return f"{self.message} ({', '.join(where)})"

    def at_line(self, line: int, column_offset: int = 0) -> "ParseError":
        column = None if self.column is None else self.column + column_offset
        return ParseError(self.message, line=line, column=column)


class AlphabetMismatchError(StallingsError, ValueError):
    exit_code = 2


class PreconditionError(StallingsError, ValueError):
    """A hypothesis of the requested decision procedure does not hold for the input."""

    exit_code = 2


class TrivialSubgroupError(PreconditionError):
    pass


class AutomatonInvariantError(StallingsError):
    exit_code = 3

    def __init__(self, message: str, failed: list | None = None):
        self.failed = list(failed or [])
        super().__init__(message)


class MonoidOverflowError(StallingsError):
    exit_code = 4

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"Transition monoid exceeds the element cap of {cap}")


class InconsistencyError(StallingsError, AssertionError):
    """Two independent criteria for the same property disagree."""

    exit_code = 5
