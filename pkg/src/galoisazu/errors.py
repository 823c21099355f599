"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GaloisAzuError(Exception):
    """Base class for all errors raised by galoisazu."""


# fields

class FieldError(GaloisAzuError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class FieldMismatch(FieldError):
    pass


class NoSuchElement(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class EmbeddingInvalid(FieldError):
    pass


# algebras

class AlgebraError(GaloisAzuError):
    pass


class ConstructionError(AlgebraError):
    """A structure-constant table failed its associativity or unit check."""


class CharTwo(AlgebraError):
    pass


class CharNotTwo(AlgebraError):
    pass


class ZeroParameter(AlgebraError):
    pass


class BadRootOrder(AlgebraError):
    pass


class NotAUnit(AlgebraError):
    pass


class DimensionCap(AlgebraError):
    pass


class FieldTooLarge(AlgebraError):
    pass


class InfiniteField(AlgebraError):
    pass


class UnsupportedField(AlgebraError):
    pass


# group actions

class ActionError(GaloisAzuError):
    pass


class NotAutomorphism(ActionError):
    pass


class WrongOrder(ActionError):
    pass


class NonCommuting(ActionError):
    pass


# Galois certification

class CertificationError(GaloisAzuError):
    pass


class ActionMovesBase(CertificationError):
    pass


class InvariantsMismatch(CertificationError):
    def __init__(self, message, invariants=None):
        super().__init__(message)
        self.invariants = invariants


class GammaSingular(CertificationError):
    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


class NotStrict(CertificationError):
    pass


class FixedRingNotField(CertificationError):
    pass


class SubgroupNotFactor(CertificationError):
    pass


class BaseMismatch(CertificationError):
    pass


class NotAlgebraMorphism(CertificationError):
    pass


class NotEquivariant(CertificationError):
    pass


class NotCommutative(CertificationError):
    pass


class NotCentralizing(CertificationError):
    pass


class NotInvertible(CertificationError):
    pass
