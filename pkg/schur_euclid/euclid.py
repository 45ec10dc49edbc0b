"""
Euclidean division of formal series.

Each step writes f_{k-1} = (1 + alpha_k z) f_k + beta_k z^2 f_{k+1} with
f_{k+1} unitary. A vanishing beta ends the division; it is returned as a
``Terminated`` value, not raised.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .alphabets import VirtualAlphabet, sigma
from .arith import DensePoly, Series
from .errors import DivisionTerminated, InsufficientPrecision
from .logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class DivisionStep:
    k: int
    alpha: Fraction
    beta: Fraction
    remainder: Series

    @property
    def quotient(self) -> DensePoly:
        """1 + alpha z"""
        return DensePoly((1, self.alpha))


@dataclass(frozen=True)
class Terminated:
    k: int
    alpha: Fraction


StepOutcome = Union[DivisionStep, Terminated]


@dataclass(frozen=True)
class DivisionTrace:
    f_init: Tuple[Series, Series]
    steps: Tuple[DivisionStep, ...]
    terminated: Optional[Terminated] = None

    @property
    def is_terminated(self) -> bool:
        return self.terminated is not None

    @property
    def alphas(self) -> List[Fraction]:
        return [step.alpha for step in self.steps]

    @property
    def betas(self) -> List[Fraction]:
        return [step.beta for step in self.steps]

    def series(self, k: int) -> Series:
        """f_k for k >= -1"""
        if k == -1:
            return self.f_init[0]
        if k == 0:
            return self.f_init[1]
        if 1 <= k <= len(self.steps):
            return self.steps[k - 1].remainder
        if self.terminated is not None and k > self.terminated.k:
            raise DivisionTerminated(self.terminated.k, self.terminated.alpha)
        raise IndexError(f"f_{k} was not computed ({len(self.steps)} steps)")

    def reconstructs(self) -> bool:
        """f_{k-1} = (1 + alpha_k z) f_k + beta_k z^2 f_{k+1} for every step"""
        for step in self.steps:
            order = step.remainder.order + 2
            lhs = self.series(step.k - 1).truncate(order)
            rhs = self.series(step.k).truncate(order) * step.quotient
            rhs = rhs + step.remainder.shift_up(2).scale(step.beta)
            if lhs.coeffs != rhs.coeffs:
                return False
        return True


def divide_step(f_prev: Series, f_cur: Series, k: int = 0) -> StepOutcome:
    if not (f_prev.is_unitary and f_cur.is_unitary):
        raise ValueError("division step needs two unitary series")
    order = min(f_prev.order, f_cur.order)
    if order < 3:
        raise InsufficientPrecision(f"division step needs order >= 3, got {order}")

    f_prev = f_prev.truncate(order)
    f_cur = f_cur.truncate(order)
    alpha = f_prev[1] - f_cur[1]
    residue = f_prev - f_cur * DensePoly((1, alpha))
    beta = residue[2]

    if beta == 0:
        logger.debug("division terminated", k=k, alpha=str(alpha))
        return Terminated(k, alpha)

    remainder = residue.shift_down(2).scale(1 / beta)
    logger.debug("division step", k=k, alpha=str(alpha), beta=str(beta), order=remainder.order)
    return DivisionStep(k, alpha, beta, remainder)


def divide_series(f_prev: Series, f_cur: Series, steps: int) -> DivisionTrace:
    """Iterate the division step from an arbitrary unitary pair"""
    f_init = (f_prev, f_cur)
    done: List[DivisionStep] = []
    for k in range(steps):
        outcome = divide_step(f_prev, f_cur, k)
        if isinstance(outcome, Terminated):
            return DivisionTrace(f_init, tuple(done), outcome)
        done.append(outcome)
        f_prev, f_cur = f_cur, outcome.remainder
    return DivisionTrace(f_init, tuple(done))


def divide_iterate(num: VirtualAlphabet, den: VirtualAlphabet, steps: int, order: int) -> DivisionTrace:
    """Divide sigma_z(num) by sigma_z(den)"""
    if order < 2 * steps + 2:
        raise InsufficientPrecision(f"{steps} division steps need order >= {2 * steps + 2}, got {order}")
    return divide_series(sigma(num, order), sigma(den, order), steps)
