"""
Exact coefficient carriers in one variable z.

Rationals are ``fractions.Fraction``. ``DensePoly`` and ``LaurentPoly`` are
exact; ``Series`` is a truncated formal power series that knows how many of
its leading coefficients are valid (its order) and propagates that order
through every operation.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .errors import InsufficientPrecision, ParseError, ZeroConstantTerm

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"-?\d+(?:/\d+)?")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str, position: int = 0) -> Fraction:
    """Parse ``-?digits(/digits)?``; ``position`` is reported on failure"""
    token = text.strip()
    offset = position + (len(text) - len(text.lstrip()))
    if not _RATIONAL_PATTERN.fullmatch(token):
        raise ParseError(f"malformed rational {token!r}", offset)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", offset)


def format_rational(value: Scalar) -> str:
    return str(Fraction(value))


def _as_fractions(values: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class DensePoly:
    """Polynomial c_0 + c_1 z + ... with no trailing zero coefficient"""

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = list(_as_fractions(self.coeffs))
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> "DensePoly":
        return cls((value,))

    @classmethod
    def monomial(cls, value: Scalar, degree: int) -> "DensePoly":
        return cls((0,) * degree + (value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return ZERO

    def __add__(self, other: "DensePoly") -> "DensePoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return DensePoly(tuple(self[i] + other[i] for i in range(size)))

    def __neg__(self) -> "DensePoly":
        return DensePoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + (-other)

    def __mul__(self, other: Union["DensePoly", Scalar]) -> "DensePoly":
        if not isinstance(other, DensePoly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return DensePoly()
        product = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return DensePoly(tuple(product))

    def __rmul__(self, other: Scalar) -> "DensePoly":
        return self.scale(other)

    def scale(self, factor: Scalar) -> "DensePoly":
        return DensePoly(tuple(c * factor for c in self.coeffs))

    def __call__(self, z: Scalar) -> Fraction:
        value = ZERO
        for c in reversed(self.coeffs):
            value = value * z + c
        return value

    def reversed(self, degree: int) -> "DensePoly":
        """t^degree * p(1/t)"""
        if self.degree > degree:
            raise ValueError(f"degree {self.degree} exceeds reversal degree {degree}")
        padded = self.coeffs + (ZERO,) * (degree + 1 - len(self.coeffs))
        return DensePoly(tuple(reversed(padded)))

    def to_series(self, order: int) -> "Series":
        return Series(tuple(self[i] for i in range(order)))


@dataclass(frozen=True)
class LaurentPoly:
    """Finite sum of c_e z^e, e any integer; no zero coefficient is stored"""

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        merged: Dict[int, Fraction] = {}
        for exponent, value in self.terms:
            merged[int(exponent)] = merged.get(int(exponent), ZERO) + Fraction(value)
        cleaned = tuple(sorted((e, c) for e, c in merged.items() if c != 0))
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_mapping(cls, terms: Mapping[int, Scalar]) -> "LaurentPoly":
        return cls(tuple(terms.items()))

    @classmethod
    def monomial(cls, value: Scalar, exponent: int = 0) -> "LaurentPoly":
        return cls(((exponent, value),))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.monomial(1)

    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    @property
    def min_exponent(self) -> Optional[int]:
        return self.terms[0][0] if self.terms else None

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(self.terms + other.terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return LaurentPoly(tuple((e, c * other) for e, c in self.terms))
        return laurent_mul(self, other)

    def __rmul__(self, other: Scalar) -> "LaurentPoly":
        return self * other

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by z^m"""
        return LaurentPoly(tuple((e + m, c) for e, c in self.terms))

    def evaluate(self, z: Scalar) -> Fraction:
        z = Fraction(z)
        if z == 0 and self.terms and self.terms[0][0] < 0:
            raise ZeroDivisionError("negative exponent evaluated at z = 0")
        return sum((c * z ** e for e, c in self.terms), ZERO)

    def to_dense(self) -> DensePoly:
        if self.terms and self.terms[0][0] < 0:
            raise ValueError(f"negative exponent z^{self.terms[0][0]} has no polynomial form")
        size = self.terms[-1][0] + 1 if self.terms else 0
        mapping = self.as_dict()
        return DensePoly(tuple(mapping.get(i, ZERO) for i in range(size)))


@dataclass(frozen=True)
class Series:
    """Truncated power series c_0 + c_1 z + ... + c_{T-1} z^{T-1} + O(z^T)"""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = _as_fractions(self.coeffs)
        if not coeffs:
            raise InsufficientPrecision("a series needs at least one known coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls((ONE,) + (ZERO,) * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def is_unitary(self) -> bool:
        return self.coeffs[0] == 1

    def __getitem__(self, index: int) -> Fraction:
        if index < 0:
            return ZERO
        if index >= self.order:
            raise InsufficientPrecision(f"coefficient {index} unknown at order {self.order}")
        return self.coeffs[index]

    def __len__(self) -> int:
        return self.order

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise InsufficientPrecision(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[:order])

    def _coerce(self, other: Union["Series", DensePoly, Scalar]) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, DensePoly):
            return other.to_series(self.order)
        return DensePoly.constant(other).to_series(self.order)

    def __add__(self, other) -> "Series":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] + other.coeffs[i] for i in range(order)))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Series":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return series_mul(self, self._coerce(other))

    def __rmul__(self, other) -> "Series":
        return self * other

    def __truediv__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return self.scale(ONE / Fraction(other))
        return series_div(self, self._coerce(other))

    def scale(self, factor: Scalar) -> "Series":
        return Series(tuple(c * factor for c in self.coeffs))

    def inverse(self) -> "Series":
        return series_inverse(self)

    def shift_up(self, m: int) -> "Series":
        """Multiply by z^m; the known order grows by m"""
        return Series((ZERO,) * m + self.coeffs)

    def shift_down(self, m: int) -> "Series":
        """Exact division by z^m; the known order shrinks by m"""
        if self.order - m < 1:
            raise InsufficientPrecision(f"dividing by z^{m} leaves nothing of order {self.order}")
        if any(c != 0 for c in self.coeffs[:m]):
            raise ValueError(f"series is not divisible by z^{m}")
        return Series(self.coeffs[m:])

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero known coefficient, None if all vanish"""
        return next((i for i, c in enumerate(self.coeffs) if c != 0), None)

    def agrees_with(self, other: "Series", order: Optional[int] = None) -> bool:
        common = min(self.order, other.order)
        if order is None:
            order = common
        if order > common:
            return False
        return self.coeffs[:order] == other.coeffs[:order]


def series_mul(f: Series, g: Series) -> Series:
    order = min(f.order, g.order)
    product = [ZERO] * order
    for i in range(order):
        a = f.coeffs[i]
        if a == 0:
            continue
        for j in range(order - i):
            product[i + j] += a * g.coeffs[j]
    return Series(tuple(product))


def series_inverse(f: Series) -> Series:
    if f.coeffs[0] == 0:
        raise ZeroConstantTerm("constant coefficient cannot be zero")
    head = ONE / f.coeffs[0]
    inverse = [head]
    for n in range(1, f.order):
        acc = sum((f.coeffs[k] * inverse[n - k] for k in range(1, n + 1)), ZERO)
        inverse.append(-acc * head)
    return Series(tuple(inverse))


def series_div(f: Series, g: Series) -> Series:
    if g.coeffs[0] == 0:
        raise ZeroConstantTerm("denominator constant coefficient cannot be zero")
    order = min(f.order, g.order)
    head = ONE / g.coeffs[0]
    quotient = []
    for n in range(order):
        acc = f.coeffs[n] - sum((quotient[k] * g.coeffs[n - k] for k in range(n)), ZERO)
        quotient.append(acc * head)
    return Series(tuple(quotient))


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    product: Dict[int, Fraction] = {}
    for e1, c1 in p.terms:
        for e2, c2 in q.terms:
            product[e1 + e2] = product.get(e1 + e2, ZERO) + c1 * c2
    return LaurentPoly.from_mapping(product)
