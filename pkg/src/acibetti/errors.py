"""Exception hierarchy shared by every module of the package."""


class AciError(ValueError):
    """Base class for all domain errors raised by acibetti."""


# shift algebra
class NotSubmodule(AciError):
    pass


class NegativeValue(AciError):
    pass


class CannotCancel(AciError):
    pass


# Gorenstein degree sequences
class NotOddLength(AciError):
    pass


class ThetaNotIntegral(AciError):
    pass


class GaetaViolation(AciError):
    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


# ACI recognition
class NotAciRanks(AciError):
    pass


class NonIntegralDstar(AciError):
    pass


class NonPositiveDstar(AciError):
    pass


class DualNotEmbedded(AciError):
    pass


class DstarNotAGenerator(AciError):
    pass


class F2PrimeMismatch(AciError):
    pass


class SumIdentityViolation(AciError):
    pass


class NotMinimal(AciError):
    """A table flagged as non-minimal was handed to a minimal-only consumer."""


class LinkedSequenceInvalid(AciError):
    pass


# monomial ideals
class PreconditionViolation(AciError):
    pass


class NotType2(AciError):
    pass


class NotType3(AciError):
    pass


class CharacterizationFailed(AciError):
    pass


class NotRealizable(AciError):
    pass


class TooManyGenerators(AciError):
    pass


class NotArtinian(AciError):
    pass


# liaison
class CodimMismatch(AciError):
    pass


class NotGorensteinTail(AciError):
    pass


class ThetaMismatch(AciError):
    pass


class GeneratorDegreeTooHigh(AciError):
    pass


# finite-field oracle
class NotArtinianWithinBound(AciError):
    pass


class BoundTooSmall(AciError):
    pass


class NotContained(AciError):
    pass


class DegreeBelowIdeal(AciError):
    pass


class NoConsistentDegreeMatrix(AciError):
    pass


class SamplingFailed(AciError):
    pass
