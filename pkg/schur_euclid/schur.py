"""
Partitions, integer index vectors and Jacobi-Trudi Schur functions.

``jacobi_trudi`` takes any family j -> h_j with h_j = 0 for j < 0, so the
same code evaluates Schur functions with rational entries and with Laurent
polynomial entries S_j(A +- 1/z). Index vectors need not be partitions:
unsorted and negative entries straighten through the determinant itself.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence, Tuple, Union

from .alphabets import CompleteFamily, VirtualAlphabet
from .arith import LaurentPoly
from .errors import ParseError, schur_label
from .linalg import determinant

_INT_PATTERN = re.compile(r"-?\d+")


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def rectangle(cls, width: int, height: int) -> "Partition":
        """(width^height)"""
        return cls((width,) * height)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return schur_label(self.parts)


@dataclass(frozen=True)
class IntVector:
    entries: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    def exchange(self, i: int) -> "IntVector":
        """v_i, v_{i+1} -> v_{i+1} - 1, v_i + 1; negates the Schur function"""
        v = list(self.entries)
        v[i], v[i + 1] = v[i + 1] - 1, v[i] + 1
        return IntVector(tuple(v))

    def __add__(self, other: Sequence[int]) -> "IntVector":
        other = _entries(other)
        if len(other) != len(self.entries):
            raise ValueError("index vectors of different lengths")
        return IntVector(tuple(a + b for a, b in zip(self.entries, other)))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def label(self) -> str:
        return schur_label(self.entries)


Index = Union[Partition, IntVector, Sequence[int]]


def _entries(v: Index) -> Tuple[int, ...]:
    if isinstance(v, Partition):
        return v.parts
    if isinstance(v, IntVector):
        return v.entries
    return tuple(int(e) for e in v)


def parse_int_vector(text: str) -> IntVector:
    if not text.strip():
        return IntVector()
    entries = []
    position = 0
    for item in text.split(","):
        token = item.strip()
        if not _INT_PATTERN.fullmatch(token):
            raise ParseError(f"malformed integer {token!r}", position)
        entries.append(int(token))
        position += len(item) + 1
    return IntVector(tuple(entries))


def conjugate(partition: Partition) -> Partition:
    parts = partition.parts
    if not parts:
        return Partition()
    return Partition(tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)))


def jacobi_trudi_span(v: Index) -> int:
    """Size of a complete-function table covering every entry of the matrix"""
    entries = _entries(v)
    n = len(entries)
    if n == 0:
        return 1
    return max(max(e - i for i, e in enumerate(entries)) + n, 1)


def jacobi_trudi(
    v: Index,
    h: Callable[[int], Any],
    zero: Any = Fraction(0),
    one: Any = Fraction(1),
) -> Any:
    """det(h_{v_i + j - i}) over whatever ring h takes values in"""
    entries = _entries(v)
    n = len(entries)
    if n == 0:
        return h(0)
    matrix = [[h(entries[i] + j - i) for j in range(n)] for i in range(n)]
    return determinant(matrix, zero, one)


def schur(v: Index, alphabet: VirtualAlphabet) -> Fraction:
    return jacobi_trudi(v, CompleteFamily(alphabet, jacobi_trudi_span(v)))


def schur_with_letter(v: Index, alphabet: VirtualAlphabet, sign: str) -> LaurentPoly:
    """S_v(V +- 1/z) as a Laurent polynomial in z"""
    family = CompleteFamily(alphabet, jacobi_trudi_span(v))
    return jacobi_trudi(v, family.laurent(sign), LaurentPoly.zero(), LaurentPoly.one())
