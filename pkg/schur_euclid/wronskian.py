"""
The alphabets A^0 = A, A^1, A^2, ... produced by dividing 1 by sigma_z(A),
Wronskians of complete functions over them, and the Bazin minor identity.

The alphabets are never materialised as letters; each A^i is its series
sigma_z(A^i).
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .alphabets import EMPTY, CompleteFamily, VirtualAlphabet
from .arith import Series
from .closedform import remainder_one_by_sigma
from .errors import InsufficientPrecision, NonGeneric, schur_label
from .euclid import divide_iterate
from .linalg import bareiss_determinant
from .logger import get_logger
from .schur import IntVector, Partition, schur

logger = get_logger(__name__)


class SequenceSource(str, Enum):
    CLOSED_FORM = "closed_form"
    DIVISION = "division"


@dataclass(frozen=True)
class AlphabetSequence:
    base: VirtualAlphabet
    entries: Tuple[Series, ...]
    source: SequenceSource
    cross_checked: Optional[bool] = None

    @property
    def kmax(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, i: int) -> Series:
        return self.entries[i]


@dataclass(frozen=True)
class WronskianQuery:
    K: Tuple[int, ...]

    def __post_init__(self):
        K = tuple(int(k) for k in self.K)
        if not K:
            raise ValueError("a Wronskian needs at least one function")
        if any(k < 0 for k in K):
            raise ValueError(f"Wronskian indices must be nonnegative: {K}")
        object.__setattr__(self, "K", K)

    @property
    def n(self) -> int:
        return len(self.K)


def _closed_entries(alphabet: VirtualAlphabet, kmax: int, order: int) -> List[Series]:
    return [remainder_one_by_sigma(alphabet, i, order) for i in range(kmax + 1)]


def _division_entries(alphabet: VirtualAlphabet, kmax: int, order: int) -> List[Series]:
    trace = divide_iterate(EMPTY, alphabet, kmax, order)
    return [trace.series(i) for i in range(kmax + 1)]


def alphabet_sequence(
    alphabet: VirtualAlphabet,
    kmax: int,
    order: int,
    source: SequenceSource = SequenceSource.CLOSED_FORM,
    cross_check: bool = False,
) -> AlphabetSequence:
    """sigma_z(A^0) .. sigma_z(A^kmax)"""
    if order < 2 * kmax + 2:
        raise InsufficientPrecision(f"{kmax} alphabets need order >= {2 * kmax + 2}, got {order}")

    if source == SequenceSource.DIVISION and not cross_check:
        return AlphabetSequence(alphabet, tuple(_division_entries(alphabet, kmax, order)), source)

    closed = _closed_entries(alphabet, kmax, order)
    checked = None
    if cross_check:
        divided = _division_entries(alphabet, kmax, order)
        checked = all(c.agrees_with(d) for c, d in zip(closed, divided))
        logger.debug("alphabet sequence cross-check", kmax=kmax, agrees=checked)
        if source == SequenceSource.DIVISION:
            return AlphabetSequence(alphabet, tuple(divided), source, checked)
    return AlphabetSequence(alphabet, tuple(closed), SequenceSource.CLOSED_FORM, checked)


def wronskian_matrix(query: WronskianQuery, sequence: AlphabetSequence) -> List[List[Fraction]]:
    """Entry (i, j) is S_{k_j - i}(A^i)"""
    return [
        [sequence[i][k - i] if k >= i else Fraction(0) for k in query.K]
        for i in range(query.n)
    ]


def wronskian_det(query: WronskianQuery, alphabet: VirtualAlphabet, order: Optional[int] = None) -> Fraction:
    minimum = max(max(query.K) + 1, 2 * (query.n - 1) + 2)
    order = order or minimum
    if order < minimum:
        raise InsufficientPrecision(f"Wronskian of {list(query.K)} needs order >= {minimum}, got {order}")
    sequence = alphabet_sequence(alphabet, query.n - 1, order)
    return bareiss_determinant(wronskian_matrix(query, sequence))


def wronskian_index(query: WronskianQuery) -> IntVector:
    """(k_n, k_{n-1} + 1, ..., k_1 + n - 1)"""
    return IntVector(tuple(k + i for i, k in enumerate(reversed(query.K))))


def wronskian_closed(query: WronskianQuery, alphabet: VirtualAlphabet) -> Fraction:
    rectangle = Partition.rectangle(query.n - 1, query.n)
    denominator = schur(rectangle, alphabet)
    if denominator == 0:
        logger.info("vanishing schur function", vanishing=schur_label(rectangle.parts))
        raise NonGeneric(rectangle.parts)
    return schur(wronskian_index(query), alphabet) / denominator


@lru_cache(maxsize=4096)
def hook_schur(k: int, i: int, alphabet: VirtualAlphabet) -> Fraction:
    """S_{k, i^i}(A)"""
    return schur((k,) + (i,) * i, alphabet)


def raw_wronskian(query: WronskianQuery, alphabet: VirtualAlphabet) -> Fraction:
    """det S_{k_j, i^i}(A): the Wronskian before dividing row i by S_{i^(i+1)}(A)"""
    return bareiss_determinant([[hook_schur(k, i, alphabet) for k in query.K] for i in range(query.n)])


def row_normalizer(alphabet: VirtualAlphabet, n: int) -> Fraction:
    """prod_{i=1}^{n-1} S_{i^(i+1)}(A)"""
    product = Fraction(1)
    for i in range(1, n):
        product *= schur(Partition.rectangle(i, i + 1), alphabet)
    return product


BAZIN_BASES = ((0, 1, 2), (0, 1, 3), (0, 3, 4), (3, 4, 5))


@dataclass(frozen=True)
class BazinReport:
    K: Tuple[int, ...]
    minors: Tuple[Tuple[Fraction, ...], ...]
    lhs: Fraction
    factors: Tuple[Fraction, Fraction, Fraction, Fraction]
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def bazin_check(alphabet: VirtualAlphabet, K: Sequence[int]) -> BazinReport:
    """det of the minors [012x], [013x], [034x], [345x] against [0123][0134][0345][x1x2x3x4]"""
    K = tuple(int(k) for k in K)
    if len(K) != 4:
        raise ValueError(f"the Bazin check takes exactly four indices, got {len(K)}")
    family = CompleteFamily(alphabet, max(K + (5,)) + 4)

    def column(shift: int) -> List[Fraction]:
        return [family(shift - r) for r in range(4)]

    numbered = [column(c) for c in range(6)]
    extra = [column(k + 3) for k in K]

    def minor(columns: Sequence[List[Fraction]]) -> Fraction:
        return bareiss_determinant([[col[r] for col in columns] for r in range(4)])

    minors = tuple(
        tuple(minor([numbered[c] for c in base] + [x]) for x in extra) for base in BAZIN_BASES
    )
    lhs = bareiss_determinant(minors)
    factors = (
        minor([numbered[c] for c in (0, 1, 2, 3)]),
        minor([numbered[c] for c in (0, 1, 3, 4)]),
        minor([numbered[c] for c in (0, 3, 4, 5)]),
        minor(extra),
    )
    rhs = factors[0] * factors[1] * factors[2] * factors[3]
    return BazinReport(K, minors, lhs, factors, rhs)
