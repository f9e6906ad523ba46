from __future__ import annotations


class AlgebraError(ValueError):
    """Base class for every domain error raised by the algebra engine."""


class SignatureError(AlgebraError):
    pass


class AlgebraMismatchError(AlgebraError):
    pass


class GradeError(AlgebraError):
    pass


class ParseError(AlgebraError):
    pass


class RotorNormError(AlgebraError):
    pass


class ConvergenceError(AlgebraError):
    pass
