"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RegCurvError(Exception):
    """Base class for all package errors."""


class InputError(RegCurvError, ValueError):
    """Malformed input data (maps to CLI exit code 2)."""


class DomainError(RegCurvError, ValueError):
    """A mathematical precondition was violated (CLI exit code 3)."""


class UnsupportedRange(RegCurvError, ValueError):
    """Request lies outside the supported envelope (CLI exit code 4)."""


# graphcore
class IndexOutOfRange(DomainError, IndexError):
    pass


class NotAnEdge(DomainError):
    pass


class MalformedGraph6(InputError):
    pass


class MalformedEdgeList(InputError):
    pass


class UnsupportedSize(UnsupportedRange):
    pass


# lap
class NonSquare(InputError):
    pass


class NegativeCost(InputError):
    pass


class EntryOutOfRange(InputError):
    pass


class TooLarge(UnsupportedRange):
    pass


# transport / curvature
class AlphaOutOfRange(DomainError):
    pass


class IsolatedVertex(DomainError):
    pass


class NotProbability(DomainError):
    pass


class UnreachableMass(DomainError):
    pass


class SameVertex(DomainError):
    pass


class UnequalDegrees(DomainError):
    pass


class Disconnected(DomainError):
    pass


class NoEdges(DomainError):
    pass


class NotRegular(DomainError):
    pass


# families
class InvalidParams(InputError):
    pass


class UnknownFixture(InputError):
    pass


class EmptyGraph(InputError):
    pass


# census
class OutOfSupportedRange(UnsupportedRange):
    pass
