"""
Finite alphabets of rational letters, their formal differences and the
complete functions S_j read off the generating series

    sigma_z(A - B) = prod_b (1 - z b) / prod_a (1 - z a)
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from .arith import ONE, ZERO, LaurentPoly, Scalar, Series, format_rational, parse_rational
from .errors import InsufficientPrecision, ParseError

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class Alphabet:
    letters: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(sorted(Fraction(x) for x in self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.letters + other.letters)

    def with_letter(self, letter: Scalar) -> "Alphabet":
        return Alphabet(self.letters + (Fraction(letter),))


@dataclass(frozen=True)
class VirtualAlphabet:
    """The formal difference plus - minus"""

    plus: Alphabet = field(default_factory=Alphabet)
    minus: Alphabet = field(default_factory=Alphabet)

    @classmethod
    def of(cls, plus: Iterable[Scalar] = (), minus: Iterable[Scalar] = ()) -> "VirtualAlphabet":
        return cls(Alphabet(tuple(plus)), Alphabet(tuple(minus)))

    def is_zero(self) -> bool:
        return not self.plus.letters and not self.minus.letters

    def __sub__(self, other: "VirtualAlphabet") -> "VirtualAlphabet":
        return VirtualAlphabet(self.plus + other.minus, self.minus + other.plus)

    def __add__(self, other: "VirtualAlphabet") -> "VirtualAlphabet":
        return VirtualAlphabet(self.plus + other.plus, self.minus + other.minus)

    def negated(self) -> "VirtualAlphabet":
        """0 - V"""
        return VirtualAlphabet(self.minus, self.plus)

    def adjoin(self, letter: Scalar, sign: str = PLUS) -> "VirtualAlphabet":
        if sign == PLUS:
            return VirtualAlphabet(self.plus.with_letter(letter), self.minus)
        if sign == MINUS:
            return VirtualAlphabet(self.plus, self.minus.with_letter(letter))
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")

    def to_json(self) -> Dict[str, List[str]]:
        return {
            "plus": [format_rational(x) for x in self.plus],
            "minus": [format_rational(x) for x in self.minus],
        }

    def __str__(self) -> str:
        plus = ",".join(format_rational(x) for x in self.plus)
        if not self.minus.letters:
            return plus
        return plus + ";" + ",".join(format_rational(x) for x in self.minus)


EMPTY = VirtualAlphabet()


def _parse_letters(text: str, offset: int) -> List[Fraction]:
    if not text.strip():
        return []
    letters = []
    position = offset
    for item in text.split(","):
        if not item.strip():
            raise ParseError("empty letter", position)
        letters.append(parse_rational(item, position))
        position += len(item) + 1
    return letters


def parse_alphabet(text: str) -> VirtualAlphabet:
    """Grammar ``plusList(';'minusList)?`` with comma-separated rationals"""
    parts = text.split(";")
    if len(parts) > 2:
        raise ParseError("more than one ';' in alphabet", len(parts[0]) + len(parts[1]) + 1)
    plus = _parse_letters(parts[0], 0)
    minus = _parse_letters(parts[1], len(parts[0]) + 1) if len(parts) == 2 else []
    return VirtualAlphabet.of(plus, minus)


def sigma(alphabet: VirtualAlphabet, order: int) -> Series:
    """sigma_z(V) through z^(order-1)"""
    if order < 1:
        raise InsufficientPrecision(f"series order must be positive, got {order}")
    coeffs = [ONE] + [ZERO] * (order - 1)
    for a in alphabet.plus:
        # multiply by 1/(1 - a z)
        for i in range(1, order):
            coeffs[i] += a * coeffs[i - 1]
    for b in alphabet.minus:
        # multiply by (1 - b z)
        for i in range(order - 1, 0, -1):
            coeffs[i] -= b * coeffs[i - 1]
    return Series(tuple(coeffs))


def complete(alphabet: VirtualAlphabet, j: int) -> Fraction:
    if j < 0:
        return ZERO
    return sigma(alphabet, j + 1)[j]


def complete_with_letter(alphabet: VirtualAlphabet, j: int, sign: str) -> LaurentPoly:
    """S_j(V +- 1/z) as a Laurent polynomial in z"""
    return CompleteFamily(alphabet, max(j + 1, 1)).with_letter(j, sign)


class CompleteFamily:
    """Table of S_0(V) .. S_{size-1}(V), extended by zero to negative indices"""

    def __init__(self, alphabet: VirtualAlphabet, size: int):
        self.alphabet = alphabet
        self.series = sigma(alphabet, max(size, 1))

    @property
    def size(self) -> int:
        return self.series.order

    def __call__(self, j: int) -> Fraction:
        if j < 0:
            return ZERO
        return self.series[j]

    def with_letter(self, j: int, sign: str) -> LaurentPoly:
        if sign == MINUS:
            return LaurentPoly.from_mapping({0: self(j), -1: -self(j - 1)})
        if sign == PLUS:
            return LaurentPoly.from_mapping({-m: self(j - m) for m in range(max(j + 1, 0))})
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")

    def laurent(self, sign: str):
        """The family j -> S_j(V +- 1/z)"""
        return lambda j: self.with_letter(j, sign)
