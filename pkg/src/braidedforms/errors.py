"""Shared exception types."""


class BraidedFormsError(Exception):
    pass


class ShapeError(BraidedFormsError):
    """Dimension mismatch in a matrix or tensor operation."""


class DivisionByZero(BraidedFormsError, ZeroDivisionError):
    """Inversion of the zero scalar."""


class FactorizationError(BraidedFormsError):
    """A map failed to factor through a quotient or corestrict to a subobject."""


class ParseError(BraidedFormsError):
    """Input file is malformed or violates the documented schema."""


class NotABiIdeal(BraidedFormsError):
    """Generated ideal violates the coideal condition."""


class NotASubmodule(BraidedFormsError):
    """Generators are not stable under the action/coaction."""


class InvalidBaseHopf(BraidedFormsError):
    """Degree-0 data is not a Hopf algebra."""


class IncompatibleBraiding(BraidedFormsError):
    """Braiding parameter incompatible with a differential (lambda must be -1)."""


class TooLarge(BraidedFormsError):
    """Requested construction exceeds the desk-scale resource bound."""
