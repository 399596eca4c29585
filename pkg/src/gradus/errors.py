"""Exception hierarchy shared by all gradus modules."""


class GradusError(ValueError):
    """Base class for every error raised by gradus."""


class VariableMismatch(GradusError):
    pass


class RingMismatch(GradusError):
    pass


class ZeroDivisor(GradusError, ZeroDivisionError):
    pass


class NotBivariate(GradusError):
    pass


class DegreeZeroInEliminationVariable(GradusError):
    pass


class ZeroPolynomial(GradusError):
    pass


class UnsupportedSemidegreeKind(GradusError):
    pass


class UnsupportedPartKind(GradusError):
    pass


class NotTriangular(GradusError):
    pass


class ConstantDivisor(GradusError):
    pass


class InvalidStep(GradusError):
    pass


class UnsupportedShape(GradusError):
    pass


class DimensionTooHigh(GradusError):
    pass


class DimensionMismatch(GradusError):
    pass


class OriginNotInterior(GradusError):
    pass


class ZeroDirection(GradusError):
    pass


class NotCommonMultiple(GradusError):
    pass


class NonpositiveWeight(GradusError):
    pass


class NonpositiveComponentDegree(GradusError):
    pass


class PartsDisagree(GradusError):
    pass


class CertificateIdentityFails(GradusError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotPrincipal(GradusError):
    pass


class LeadingCoefficientZero(GradusError):
    pass


class DegenerateSum(GradusError):
    pass


class InfinitelyManyRoots(GradusError):
    pass


class ShearFailure(GradusError):
    pass


class SchemaError(GradusError):
    def __init__(self, message, pointer=""):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.message = message


class InvariantViolation(GradusError):
    """An internal cross-check disagreed; the result cannot be trusted."""


class DegreeAboveBound(GradusError):
    """A filtration degree exceeded the search cap."""
