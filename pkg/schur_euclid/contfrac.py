"""
J-fraction expansion of (1/z) sigma_{1/z}(A):

    1 / (z + s1_0 + s2_0 / (z + s1_1 + s2_1 / (z + ...)))

where (s1_k, s2_k) = (S_1, S_2)(A^(k-1) - A^k) and A^(-1) = 0. This is the
only module that works in t = 1/z.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .alphabets import EMPTY, VirtualAlphabet, sigma
from .arith import DensePoly, Series
from .closedform import remainder_one_by_sigma
from .errors import InsufficientPrecision
from .euclid import divide_iterate
from .logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CFLevel:
    k: int
    s1: Fraction
    s2: Fraction

    @property
    def is_final(self) -> bool:
        return self.s2 == 0


@dataclass(frozen=True, eq=False)
class RationalFunction:
    numerator: DensePoly
    denominator: DensePoly

    def __post_init__(self):
        if self.denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __call__(self, z) -> Fraction:
        return self.numerator(z) / self.denominator(z)

    def series_in_t(self, order: int) -> Series:
        """Expansion in t = 1/z; needs deg numerator <= deg denominator"""
        p = max(self.numerator.degree, 0)
        q = self.denominator.degree
        shift = q - p
        if shift < 0:
            raise ValueError("numerator degree exceeds denominator degree")
        if order <= shift:
            return Series((0,) * order)
        head = order - shift
        top = self.numerator.reversed(p).to_series(head)
        bottom = self.denominator.reversed(q).to_series(head)
        return (top / bottom).shift_up(shift)


def _level(k: int, upper: Series, lower: Series) -> CFLevel:
    quotient = upper.truncate(3) / lower.truncate(3)
    return CFLevel(k, quotient[1], quotient[2])


def cf_levels(alphabet: VirtualAlphabet, depth: int, order: int) -> List[CFLevel]:
    """Levels 0 .. depth, stopping after the first level whose s2 vanishes"""
    if order < 2 * depth + 4:
        raise InsufficientPrecision(f"depth {depth} needs order >= {2 * depth + 4}, got {order}")
    lower = sigma(alphabet, order)
    levels = [_level(0, Series.one(order), lower)]
    for k in range(1, depth + 1):
        if levels[-1].is_final:
            break
        upper, lower = lower, remainder_one_by_sigma(alphabet, k, order)
        levels.append(_level(k, upper, lower))
    logger.debug("continued fraction levels", count=len(levels), final=levels[-1].is_final)
    return levels


def cf_convergent(levels: Sequence[CFLevel], depth: int) -> RationalFunction:
    """Truncate after level ``depth``, dropping its s2 tail"""
    if not 0 <= depth < len(levels):
        raise ValueError(f"depth {depth} outside the {len(levels)} available levels")
    z = DensePoly((0, 1))
    numerator = DensePoly.constant(1)
    denominator = z + DensePoly.constant(levels[depth].s1)
    for level in reversed(levels[:depth]):
        partial = (z + DensePoly.constant(level.s1)) * denominator + numerator.scale(level.s2)
        numerator, denominator = denominator, partial
    return RationalFunction(numerator, denominator)


def sigma_rational_function(alphabet: VirtualAlphabet) -> RationalFunction:
    """(1/z) sigma_{1/z}(V) as a ratio of products of (z - letter)"""
    excess = len(alphabet.plus) - len(alphabet.minus) - 1
    numerator = DensePoly.monomial(1, max(excess, 0))
    for b in alphabet.minus:
        numerator = numerator * DensePoly((-b, 1))
    denominator = DensePoly.monomial(1, max(-excess, 0))
    for a in alphabet.plus:
        denominator = denominator * DensePoly((-a, 1))
    return RationalFunction(numerator, denominator)


def _prefix_agreement(f: Series, g: Series) -> int:
    for i in range(min(f.order, g.order)):
        if f[i] != g[i]:
            return i
    return min(f.order, g.order)


@dataclass(frozen=True)
class CFReport:
    levels: Tuple[CFLevel, ...]
    depth: int
    convergent: RationalFunction
    contact_length: int
    order: int
    division_consistent: bool
    exact: bool

    @property
    def terminates(self) -> bool:
        return self.levels[-1].is_final


def cf_verify(alphabet: VirtualAlphabet, depth: int, order: int) -> CFReport:
    levels = cf_levels(alphabet, depth, order)
    depth = min(depth, len(levels) - 1)
    convergent = cf_convergent(levels, depth)

    target = sigma(alphabet, order - 1).shift_up(1)
    contact_length = _prefix_agreement(convergent.series_in_t(order), target)

    trace = divide_iterate(EMPTY, alphabet, len(levels), max(order, 2 * len(levels) + 2))
    expected = [(step.alpha, step.beta) for step in trace.steps]
    if trace.terminated is not None:
        expected.append((trace.terminated.alpha, Fraction(0)))
    division_consistent = expected[: len(levels)] == [(level.s1, level.s2) for level in levels]

    exact = convergent == sigma_rational_function(alphabet)
    return CFReport(tuple(levels), depth, convergent, contact_length, order, division_consistent, exact)
