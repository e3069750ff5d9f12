"""Exception hierarchy.

Every error carries a short ``code`` that the CLI prints on stderr so scripts
can match on it without parsing messages.
"""


class NPCurvesError(Exception):
    code = "Error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class DomainError(NPCurvesError, ValueError):
    """Invalid mathematical input (exit code 1 at the CLI)."""

    code = "DomainError"


class NotPrime(DomainError):
    code = "NotPrime"


class BadDegree(DomainError):
    code = "BadDegree"


class EnumerationCapExceeded(DomainError):
    code = "EnumerationCapExceeded"


class NoRootFound(NPCurvesError, RuntimeError):
    code = "NoRootFound"


class ParseError(DomainError):
    code = "ParseError"


# curves
class DegenerateLambda(DomainError):
    code = "DegenerateLambda"


class NotSquarefree(DomainError):
    code = "NotSquarefree"


class WildPoleOrder(DomainError):
    code = "WildPoleOrder"


class EvenDegreeModel(DomainError):
    code = "EvenDegreeModel"


class IrrationalPole(DomainError):
    code = "IrrationalPole"


class ReducibleCurve(DomainError):
    code = "ReducibleCurve"


class UnsupportedCurve(DomainError):
    code = "UnsupportedCurve"


# zeta
class NonIntegralNewtonStep(NPCurvesError, ArithmeticError):
    code = "NonIntegralNewtonStep"


class WeilBoundViolation(NPCurvesError, ArithmeticError):
    code = "WeilBoundViolation"


class ZetaInconsistency(NPCurvesError, ArithmeticError):
    code = "ZetaInconsistency"

    def __init__(self, s: int, predicted: int, counted: int):
        self.s, self.predicted, self.counted = s, predicted, counted
        super().__init__(f"N_{s}: predicted {predicted} from L, counted {counted}")


class GenusMismatch(DomainError):
    code = "GenusMismatch"


# npoly
class NonIntegralBreakPoint(NPCurvesError, ArithmeticError):
    code = "NonIntegralBreakPoint"


class AsymmetricSlopes(NPCurvesError, ArithmeticError):
    code = "AsymmetricSlopes"


class InvalidPolygon(DomainError):
    code = "InvalidPolygon"


class CapExceeded(DomainError):
    code = "CapExceeded"


# eo / strata
class InvalidEOType(DomainError):
    code = "InvalidEOType"


class NotTwoSlope(DomainError):
    code = "NotTwoSlope"


# construct
class BadDigits(DomainError):
    code = "BadDigits"


class IdentityFailure(NPCurvesError, AssertionError):
    code = "IdentityFailure"


class NotSupersingular(NPCurvesError, AssertionError):
    code = "NotSupersingular"


class InconsistentBranchData(DomainError):
    code = "InconsistentBranchData"
