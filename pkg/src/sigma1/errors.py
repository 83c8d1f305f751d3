class Sigma1Error(Exception):
    """Base class for all errors raised by the package."""


class InvalidParameters(Sigma1Error, ValueError):
    pass


class UnsupportedRing(Sigma1Error):
    pass


class NotUnimodular(Sigma1Error, ValueError):
    pass


class SingularMatrix(Sigma1Error, ValueError):
    pass


class InvalidType(Sigma1Error, ValueError):
    pass


class NotMaximal(Sigma1Error, ValueError):
    pass


class LevelMismatch(Sigma1Error, ValueError):
    pass


class ModulusMismatch(Sigma1Error, ValueError):
    pass


class NotDegreeZero(Sigma1Error, ValueError):
    pass


class ZeroElement(Sigma1Error, ValueError):
    pass


class NonUnit(Sigma1Error, ArithmeticError):
    pass


class NotAUnit(Sigma1Error, ValueError):
    pass
