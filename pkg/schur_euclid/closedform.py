"""
Closed forms for the division data.

The k-th remainder of sigma_z(A) divided by 1 is

    f_k = sum_i z^i S_{k+1+i,(k+1)^(k-1)}(A) / S_{(k+1)^k}(A)

and the quotient and subtrahend polynomials that produce it are Schur
quotients with the rectangle S_{k^(k-1)}(A) as denominator. The same data is
recovered three independent ways: by a Hankel solve on the complete
functions, by Laurent-valued Schur functions S(A +- 1/z) (the Pade form), and
by the division engine.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .alphabets import EMPTY, MINUS, PLUS, CompleteFamily, VirtualAlphabet, sigma
from .arith import DensePoly, Series
from .errors import InsufficientPrecision, NonGeneric, SeriesEuclidError, schur_label
from .euclid import divide_iterate
from .linalg import solve
from .logger import get_logger
from .schur import Partition, jacobi_trudi, jacobi_trudi_span, schur, schur_with_letter

logger = get_logger(__name__)

PASS = "pass"
FAIL = "fail"


def _rectangle(width: int, height: int) -> Tuple[int, ...]:
    return Partition.rectangle(width, height).parts


def _require_nonzero(index: Sequence[int], value: Fraction) -> Fraction:
    if value == 0:
        logger.info("vanishing schur function", vanishing=schur_label(index))
        raise NonGeneric(index)
    return value


def _require_k(k: int, minimum: int = 1):
    if k < minimum:
        raise ValueError(f"k must be >= {minimum}, got {k}")


def _schur_series(alphabet: VirtualAlphabet, head: int, tail: Tuple[int, ...], order: int) -> List[Fraction]:
    """S_{head+i, tail}(alphabet) for i = 0 .. order-1 from one table of complete functions"""
    family = CompleteFamily(alphabet, jacobi_trudi_span((head + order - 1,) + tail))
    return [jacobi_trudi((head + i,) + tail, family) for i in range(order)]


def remainder_sigma_by_one(alphabet: VirtualAlphabet, k: int, order: int) -> Series:
    """f_k in the division of sigma_z(A) by 1"""
    _require_k(k)
    rectangle = _rectangle(k + 1, k)
    denominator = _require_nonzero(rectangle, schur(rectangle, alphabet))
    numerators = _schur_series(alphabet, k + 1, _rectangle(k + 1, k - 1), order)
    return Series(tuple(value / denominator for value in numerators))


def remainder_sigma_by_sigma(a: VirtualAlphabet, b: VirtualAlphabet, k: int, order: int) -> Series:
    """f_k in the division of sigma_z(A) by sigma_z(B)"""
    return sigma(b, order) * remainder_sigma_by_one(a - b, k, order)


def remainder_one_by_sigma(alphabet: VirtualAlphabet, k: int, order: int) -> Series:
    """sigma_z(A^k): the k-th remainder in the division of 1 by sigma_z(A)"""
    _require_k(k, minimum=0)
    if k == 0:
        return sigma(alphabet, order)
    rectangle = _rectangle(k, k + 1)
    denominator = _require_nonzero(rectangle, schur(rectangle, alphabet))
    numerators = _schur_series(alphabet, k, _rectangle(k, k), order)
    return Series(tuple(value / denominator for value in numerators))


@dataclass(frozen=True)
class Eq8Solution:
    """z^(2k) gamma f_k = quotient_poly * sigma_z(A) - subtrahend_poly"""

    k: int
    quotient_poly: DensePoly
    subtrahend_poly: DensePoly
    gamma: Fraction
    remainder: Optional[Series] = None

    def implied_remainder(self) -> Series:
        if self.remainder is None:
            raise NonGeneric(_rectangle(self.k + 1, self.k), "gamma vanishes")
        return self.remainder


def eq8_solve(alphabet: VirtualAlphabet, k: int, order: int) -> Eq8Solution:
    """Force the coefficients of z^1 .. z^(2k-1) to vanish by exact elimination"""
    _require_k(k)
    if order < 2 * k + 2:
        raise InsufficientPrecision(f"eq8 for k={k} needs order >= {2 * k + 2}, got {order}")
    s = CompleteFamily(alphabet, max(order, 2 * k + 1))

    # Hankel system in q_1 .. q_{k-1}, rows for z^{k+1} .. z^{2k-1}
    size = k - 1
    matrix = [[s(k + r - c) for c in range(size)] for r in range(size)]
    rhs = [-s(k + 1 + r) for r in range(size)]
    q = [Fraction(1)] + (solve(matrix, rhs) if size else [])

    p = [sum((q[m] * s(j - m) for m in range(min(j, k - 1) + 1)), Fraction(0)) for j in range(k + 1)]
    gamma = sum((q[m] * s(2 * k - m) for m in range(k)), Fraction(0))

    quotient_poly = DensePoly(tuple(q))
    subtrahend_poly = DensePoly(tuple(p))
    remainder = None
    if gamma != 0:
        residue = sigma(alphabet, order) * quotient_poly - subtrahend_poly
        remainder = residue.shift_down(2 * k).scale(1 / gamma)
    logger.debug("eq8 solved", k=k, gamma=str(gamma))
    return Eq8Solution(k, quotient_poly, subtrahend_poly, gamma, remainder)


def displayed_quotient(alphabet: VirtualAlphabet, k: int) -> DensePoly:
    """q_j = (-1)^j S_{(k+1)^j, k^(k-1-j)} / S_{k^(k-1)}"""
    _require_k(k)
    rectangle = _rectangle(k, k - 1)
    denominator = _require_nonzero(rectangle, schur(rectangle, alphabet))
    coeffs = [
        (-1) ** j * schur(_rectangle(k + 1, j) + _rectangle(k, k - 1 - j), alphabet) / denominator
        for j in range(k)
    ]
    return DensePoly(tuple(coeffs))


def displayed_subtrahend(alphabet: VirtualAlphabet, k: int) -> DensePoly:
    """p_j = S_{k^(k-1), j} / S_{k^(k-1)}"""
    _require_k(k)
    rectangle = _rectangle(k, k - 1)
    denominator = _require_nonzero(rectangle, schur(rectangle, alphabet))
    return DensePoly(tuple(schur(rectangle + (j,), alphabet) / denominator for j in range(k + 1)))


def displayed_gamma(alphabet: VirtualAlphabet, k: int) -> Fraction:
    """gamma = (-1)^(k-1) S_{(k+1)^k} / S_{k^(k-1)}"""
    _require_k(k)
    rectangle = _rectangle(k, k - 1)
    denominator = _require_nonzero(rectangle, schur(rectangle, alphabet))
    return (-1) ** (k - 1) * schur(_rectangle(k + 1, k), alphabet) / denominator


@dataclass(frozen=True)
class PadeApproximant:
    """[k, k-1] approximant numerator / denominator with denominator(0) = 1"""

    numerator: DensePoly
    denominator: DensePoly
    k: int
    contact_order: int
    deviation: Fraction
    raw_numerator: DensePoly
    raw_denominator: DensePoly
    exact: bool = False

    def expand(self, order: int) -> Series:
        return self.numerator.to_series(order) / self.denominator.to_series(order)


def raw_pade_pair(alphabet: VirtualAlphabet, k: int) -> Tuple[DensePoly, DensePoly]:
    """(-1)^(k-1) z^k S_{k^k}(A + 1/z) and z^(k-1) S_{(k+1)^(k-1)}(A - 1/z), cleared of 1/z"""
    _require_k(k)
    upper = schur_with_letter(_rectangle(k, k), alphabet, PLUS)
    lower = schur_with_letter(_rectangle(k + 1, k - 1), alphabet, MINUS)
    raw_numerator = (upper.shift(k) * (-1) ** (k - 1)).to_dense()
    raw_denominator = lower.shift(k - 1).to_dense()
    return raw_numerator, raw_denominator


def pade(alphabet: VirtualAlphabet, k: int, order: Optional[int] = None) -> PadeApproximant:
    order = order or 2 * k + 8
    raw_numerator, raw_denominator = raw_pade_pair(alphabet, k)
    scale = raw_denominator[0]
    if scale == 0:
        rectangle = _rectangle(k, k - 1)
        logger.info("vanishing schur function", vanishing=schur_label(rectangle))
        raise NonGeneric(rectangle, "denominator constant term")

    numerator = raw_numerator.scale(1 / scale)
    denominator = raw_denominator.scale(1 / scale)
    order = max(order, 2 * k + 1, numerator.degree + 1)
    contact = sigma(alphabet, order) * denominator - numerator.to_series(order)
    valuation = contact.valuation()
    exact = valuation is None
    contact_order = order if exact else valuation
    deviation = contact[2 * k]
    return PadeApproximant(
        numerator, denominator, k, contact_order, deviation, raw_numerator, raw_denominator, exact
    )


@dataclass(frozen=True)
class PadeStructure:
    k: int
    product: Series
    left: Series
    low_ok: bool
    middle_ok: bool
    top_ok: bool
    vanishes_below_top: bool

    @property
    def top_coefficient(self) -> Fraction:
        return self.left[2 * self.k]

    @property
    def holds(self) -> bool:
        return self.low_ok and self.middle_ok and self.top_ok and self.vanishes_below_top


def pade_structure(alphabet: VirtualAlphabet, k: int) -> PadeStructure:
    """Coefficient structure of z^(k-1) S_{(k+1)^(k-1)}(A-1/z) sigma_z(A) + (-z)^k S_{k^k}(A+1/z)"""
    raw_numerator, raw_denominator = raw_pade_pair(alphabet, k)
    order = 2 * k + 1
    product = sigma(alphabet, order) * raw_denominator
    left = product - raw_numerator.to_series(order)

    sign = (-1) ** (k - 1)
    kk = _rectangle(k, k - 1)
    low_ok = all(product[j] == sign * schur(kk + (j,), alphabet) for j in range(k + 1))
    shifted = all(
        product[j] == schur((j + 1 - k,) + _rectangle(k + 1, k - 1), alphabet) for j in range(order)
    )
    middle_ok = all(product[j] == 0 for j in range(k + 1, 2 * k))
    top_ok = left[2 * k] == schur(_rectangle(k + 1, k), alphabet)
    vanishes = all(left[j] == 0 for j in range(2 * k))
    return PadeStructure(k, product, left, low_ok and shifted, middle_ok, top_ok, vanishes)


@dataclass(frozen=True)
class LowKIdentity:
    k: int
    polynomial: str
    factored: str
    vanishing: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.polynomial == PASS and self.factored == PASS


@dataclass(frozen=True)
class LowKReport:
    alphabet: VirtualAlphabet
    identities: Tuple[LowKIdentity, ...]

    @property
    def all_pass(self) -> bool:
        return all(identity.passed for identity in self.identities)

    def get(self, k: int) -> LowKIdentity:
        return self.identities[k - 1]


def _check_low_k(alphabet: VirtualAlphabet, k: int, order: int) -> LowKIdentity:
    try:
        # f_k exists only if every earlier remainder does
        for j in range(1, k + 1):
            _require_nonzero(_rectangle(j + 1, j), schur(_rectangle(j + 1, j), alphabet))
        top = schur(_rectangle(k + 1, k), alphabet)
        gamma = displayed_gamma(alphabet, k)
        quotient = displayed_quotient(alphabet, k)
        subtrahend = displayed_subtrahend(alphabet, k)
    except NonGeneric as exc:
        return LowKIdentity(k, exc.signal, exc.signal, exc.vanishing)

    trace = divide_iterate(alphabet, EMPTY, k, order)
    try:
        f_k = trace.series(k)
    except SeriesEuclidError:
        return LowKIdentity(k, FAIL, FAIL)

    s = sigma(alphabet, order)
    polynomial_lhs = f_k.shift_up(2 * k).scale(gamma)
    polynomial_rhs = s * quotient - subtrahend
    polynomial = PASS if polynomial_lhs.agrees_with(polynomial_rhs) else FAIL

    raw_numerator, raw_denominator = raw_pade_pair(alphabet, k)
    factored_lhs = f_k.shift_up(2 * k).scale(top)
    factored_rhs = s * raw_denominator - raw_numerator
    factored = PASS if factored_lhs.agrees_with(factored_rhs) else FAIL
    return LowKIdentity(k, polynomial, factored)


def low_k_identities(alphabet: VirtualAlphabet, order: int) -> LowKReport:
    """The displayed identities for f_1, f_2 and f_3, each in polynomial and factored form"""
    if order < 10:
        raise InsufficientPrecision(f"low-k identities need order >= 10, got {order}")
    return LowKReport(alphabet, tuple(_check_low_k(alphabet, k, order) for k in (1, 2, 3)))
