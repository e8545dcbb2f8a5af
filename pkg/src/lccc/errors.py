"""Exception hierarchy.

Construction errors subclass ValueError as well, so code written against the
builtin contract keeps working. Input errors carry a position.
"""
from typing import Iterable, Optional


class LCCCError(Exception):
    pass


class DomainMismatch(LCCCError, ValueError):
    pass


class CodomainMismatch(LCCCError, ValueError):
    pass


class UnknownElement(LCCCError, KeyError):
    def __init__(self, element: str, where: str):
        self.element = element
        self.where = where
        super().__init__(f'{element!r} is not an element of {where}')

    def __str__(self):
        return self.args[0]


class InvalidLabel(LCCCError, ValueError):
    pass


class LabelCollision(LCCCError, ValueError):
    pass


class TotalityError(LCCCError, ValueError):
    pass


class EnumerationTooLarge(LCCCError):
    def __init__(self, what: str, required: int, limit: int):
        self.what = what
        self.required = required
        self.limit = limit
        super().__init__(
            f'Enumerating {what} requires {required} items, over the limit of {limit}'
        )


class BaseMismatch(LCCCError, ValueError):
    pass


class ObjectMismatch(LCCCError, ValueError):
    pass


class ShapeMismatch(LCCCError, ValueError):
    pass


class TriangleDoesNotCommute(LCCCError, ValueError):
    def __init__(self, message: str, witness: str):
        self.witness = witness
        super().__init__(f'{message} (witness: {witness!r})')


class ConeDoesNotCommute(LCCCError, ValueError):
    def __init__(self, message: str, witness: str):
        self.witness = witness
        super().__init__(f'{message} (witness: {witness!r})')


class InputError(LCCCError):
    """Bad user input: diagram files, DSL sources, environment."""


class DiagramError(InputError):
    def __init__(self, message: str, location: str = '', line: int = 0, column: int = 0):
        self.location = location
        self.line = line
        self.column = column
        where = location or ''
        if line:
            where = f'{where} (line {line}, column {column})'.strip()
        super().__init__(f'{where}: {message}' if where else message)


class DslError(InputError):
    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f'line {line}, column {column}: {message}')


class DslSyntaxError(DslError):
    def __init__(
        self, message: str, line: int, column: int, expected: Optional[Iterable[str]] = None
    ):
        self.expected = tuple(sorted(expected or ()))
        if self.expected:
            message = f'{message}; expected one of: {", ".join(self.expected)}'
        super().__init__(message, line, column)


class DslNameError(DslError):
    pass


class DslTotalityError(DslError):
    pass


class DslTypeError(DslError):
    pass
