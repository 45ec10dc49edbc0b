from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel

from .alphabets import VirtualAlphabet
from .arith import DensePoly, Series, format_rational


def rationals(values: Sequence[Fraction]) -> List[str]:
    return [format_rational(v) for v in values]


class AlphabetPayload(BaseModel):
    plus: List[str]
    minus: List[str]

    @classmethod
    def from_alphabet(cls, alphabet: VirtualAlphabet) -> "AlphabetPayload":
        return cls(**alphabet.to_json())


class SeriesPayload(BaseModel):
    coeffs: List[str]
    order: int

    @classmethod
    def from_series(cls, series: Series) -> "SeriesPayload":
        return cls(coeffs=rationals(series.coeffs), order=series.order)


def poly_payload(poly: DensePoly) -> List[str]:
    return rationals(poly.coeffs)


class DivisionStepPayload(BaseModel):
    k: int
    alpha: str
    beta: str
    remainder: SeriesPayload


class DivideResponse(BaseModel):
    num: AlphabetPayload
    den: AlphabetPayload
    order: int
    f_init: List[SeriesPayload]
    steps: List[DivisionStepPayload]
    terminated: bool
    terminated_at: Optional[int] = None
    terminated_alpha: Optional[str] = None
    witness: Optional[str] = None
    witness_value: Optional[str] = None
    signal: Optional[str] = None


class RemainderResponse(BaseModel):
    mode: str
    alphabet: AlphabetPayload
    divisor: Optional[AlphabetPayload] = None
    k: int
    remainder: SeriesPayload


class PadeResponse(BaseModel):
    alphabet: AlphabetPayload
    k: int
    numerator: List[str]
    denominator: List[str]
    raw_numerator: List[str]
    raw_denominator: List[str]
    contact_order: int
    deviation: str
    exact: bool


class Eq8Response(BaseModel):
    alphabet: AlphabetPayload
    k: int
    quotient_poly: List[str]
    subtrahend_poly: List[str]
    gamma: str
    remainder: Optional[SeriesPayload] = None
    matches_closed_form: Optional[bool] = None


class WronskianResponse(BaseModel):
    det: str
    closed: str
    match: bool


class SchurResponse(BaseModel):
    index: List[int]
    label: str
    value: str
    conjugate: Optional[List[int]] = None


class CFLevelPayload(BaseModel):
    k: int
    s1: str
    s2: str


class CFracResponse(BaseModel):
    alphabet: AlphabetPayload
    depth: int
    levels: List[CFLevelPayload]
    numerator: List[str]
    denominator: List[str]
    contact_length: int
    order: int
    division_consistent: bool
    exact: bool


class IdentityPayload(BaseModel):
    k: int
    polynomial: str
    factored: str
    vanishing: Optional[str] = None


class IdentitiesResponse(BaseModel):
    alphabet: AlphabetPayload
    identities: List[IdentityPayload]
    all_pass: bool


class SequenceResponse(BaseModel):
    alphabet: AlphabetPayload
    source: str
    entries: List[SeriesPayload]
    cross_checked: Optional[bool] = None


class BazinResponse(BaseModel):
    K: List[int]
    minors: List[List[str]]
    lhs: str
    factors: List[str]
    rhs: str
    holds: bool


class SignalResponse(BaseModel):
    signal: str
    vanishing: Optional[str] = None
    step: Optional[int] = None
    message: Optional[str] = None


class SuiteResultPayload(BaseModel):
    suite: str
    trials: int
    passed: int
    failed: int
    redraws: int
    anchors: Dict[str, bool]
    status: str
    failures: List[str] = []
    witnesses: Optional[List[str]] = None


class VerifyResponse(BaseModel):
    seed: int
    trials: int
    suites: List[SuiteResultPayload]
    success: bool
