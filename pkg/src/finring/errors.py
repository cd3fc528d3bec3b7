"""Exception types shared across the package."""

from __future__ import annotations


class FinRingError(Exception):
    """Base class for all errors raised by this package."""


class ConstructionError(FinRingError):
    """A constructor was given parameters it cannot realize."""


class AxiomError(FinRingError):
    """An operation table failed the ring-axiom audit."""


class CapExceededError(ConstructionError):
    """A requested object exceeds a configured size cap."""


class SpecParseError(FinRingError):
    """A ring-spec string failed to parse.

    Carries the 0-based offset of the offending token so callers can point
    at the exact position.
    """

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} (at position {pos}: {text!r})")


class CellClosureError(FinRingError):
    """A constrained tuple construction produced a value outside a cell.

    Raised by the table kernels; constructors catch it and re-raise a
    ConstructionError with decoded coordinates.
    """

    def __init__(self, slot: int, left: int, right: int, value: int):
        self.slot = slot
        self.left = left
        self.right = right
        self.value = value
        super().__init__(
            f"product of elements {left} and {right} escapes slot {slot} "
            f"(base value {value} not allowed there)"
        )
