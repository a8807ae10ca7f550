"""Exception hierarchy.

Every error carries a short ``tag`` (its class name) that the CLI prints as
a one-line, machine-readable failure message.
"""


class InducedMatchError(ValueError):
    @property
    def tag(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.tag}: {msg}" if msg else self.tag


# core types
class AsymmetricInput(InducedMatchError):
    pass


class NegativeValue(InducedMatchError):
    pass


class NonzeroDiagonal(InducedMatchError):
    pass


class DuplicateLabel(InducedMatchError):
    pass


class NotSquare(InducedMatchError):
    pass


class InvalidBijection(InducedMatchError):
    pass


# gf2 / block functions
class LengthMismatch(InducedMatchError):
    pass


class AmbientMismatch(InducedMatchError):
    pass


class SizeMismatch(InducedMatchError):
    pass


# matching
class MarginalMismatch(InducedMatchError):
    pass


class CardinalityMismatch(InducedMatchError):
    pass


class InvalidExponent(InducedMatchError):
    pass


# dtw / pipeline
class EmptySeries(InducedMatchError):
    pass


class FrameOutOfRange(InducedMatchError):
    pass


class UnequalLengths(InducedMatchError):
    pass


class EmptyInput(InducedMatchError):
    pass


class IndexMismatch(InducedMatchError):
    pass


class InvalidConfig(InducedMatchError):
    pass


# io
class ParseError(InducedMatchError):
    pass


class MissingSample(InducedMatchError):
    pass


class DuplicateSample(InducedMatchError):
    pass
