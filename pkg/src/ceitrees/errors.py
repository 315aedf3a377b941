"""Exception hierarchy.

Every error raised by the package derives from :class:`CEIError`, which is a
``ValueError`` so callers can catch bad input generically.
"""

from __future__ import annotations


class CEIError(ValueError):
    """Base class for all package errors."""


class TooSmall(CEIError):
    pass


class TooLarge(CEIError):
    pass


# tree-core


class NotATree(CEIError):
    """Edge list is not a tree.

    ``edge_index`` points at the first offending edge (0-based) when one can
    be singled out, e.g. the edge that closes a cycle.
    """

    def __init__(self, message: str, edge_index: int | None = None):
        super().__init__(message)
        self.edge_index = edge_index


class BadLabel(CEIError):
    def __init__(self, message: str, edge_index: int | None = None):
        super().__init__(message)
        self.edge_index = edge_index


class BadVertex(CEIError):
    pass


# degree sequences


class InvalidSequence(CEIError):
    pass


class BadSum(InvalidSequence):
    pass


class NonPositive(InvalidSequence):
    pass


class InvalidLevelSequence(CEIError):
    pass


class RootNotSingleton(InvalidLevelSequence):
    pass


class LevelCountMismatch(InvalidLevelSequence):
    pass


class BadUnion(InvalidLevelSequence):
    pass


class LengthMismatch(CEIError):
    pass


class SumMismatch(CEIError):
    pass


class NotComparable(CEIError):
    pass


# constructions


class BadR(CEIError):
    pass


class BadA(CEIError):
    pass


class BadPQ(CEIError):
    pass


# enumeration


class BadEntry(CEIError):
    pass


class InvalidAssignment(CEIError):
    pass
