from fractions import Fraction
from typing import Optional, Sequence


class SeriesEuclidError(Exception):
    """Base class for every error raised by the package"""

    signal = "Error"


class ParseError(SeriesEuclidError, ValueError):
    """Malformed rational, alphabet or index text"""

    signal = "ParseError"

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class ZeroConstantTerm(SeriesEuclidError, ZeroDivisionError):
    """Inverting a series whose constant coefficient is zero"""

    signal = "ZeroConstantTerm"


class InsufficientPrecision(SeriesEuclidError, ValueError):
    """A result would need coefficients beyond the known order"""

    signal = "InsufficientPrecision"


class NonGeneric(SeriesEuclidError):
    """A Schur function needed as a denominator vanishes"""

    signal = "NonGeneric"

    def __init__(self, index: Sequence[int], detail: Optional[str] = None):
        self.index = tuple(index)
        message = f"{schur_label(self.index)} vanishes"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)

    @property
    def vanishing(self) -> str:
        return schur_label(self.index)


class SingularSystem(SeriesEuclidError, ArithmeticError):
    """Exact elimination found no pivot"""

    signal = "SingularSystem"


class DivisionTerminated(SeriesEuclidError):
    """The division stopped (beta = 0) before the requested step"""

    signal = "Terminated"

    def __init__(self, step: int, alpha: Fraction):
        super().__init__(f"division terminated at step {step} (beta = 0, alpha = {alpha})")
        self.step = step
        self.alpha = alpha


def schur_label(index: Sequence[int]) -> str:
    return "S_(" + ",".join(str(part) for part in index) + ")"


class UsageError(SeriesEuclidError, ValueError):
    """Bad command-line flags"""

    signal = "UsageError"

    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage
