"""
Seeded verification runner.

Every suite draws its random alphabets from its own ``random.Random`` seeded
with ``"{seed}:{suite}"``, so a suite's outcome does not depend on which other
suites run or on whether they run in parallel. Draws that hit a vanishing
Schur denominator are redrawn and counted.
"""
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .alphabets import EMPTY, CompleteFamily, VirtualAlphabet, complete, sigma
from .arith import DensePoly, Series
from .closedform import (
    displayed_gamma,
    displayed_quotient,
    displayed_subtrahend,
    eq8_solve,
    low_k_identities,
    pade,
    pade_structure,
    remainder_one_by_sigma,
    remainder_sigma_by_one,
    remainder_sigma_by_sigma,
)
from .config import settings
from .contfrac import CFLevel, RationalFunction, cf_convergent, cf_levels, cf_verify
from .errors import DivisionTerminated, NonGeneric, SingularSystem
from .euclid import divide_iterate, divide_series
from .linalg import bareiss_determinant
from .logger import get_logger
from .schemas import SuiteResultPayload, VerifyResponse
from .schur import Partition, conjugate, jacobi_trudi, schur
from .wronskian import (
    WronskianQuery,
    alphabet_sequence,
    bazin_check,
    raw_wronskian,
    row_normalizer,
    wronskian_closed,
    wronskian_det,
    wronskian_index,
    wronskian_matrix,
)

logger = get_logger(__name__)

SUITES = (
    "theorem1",
    "eq7",
    "prop1",
    "pade",
    "eq8",
    "wronskian",
    "bazin",
    "cfrac",
    "signs",
    "termination",
    "lowk",
)

NON_GENERIC = (NonGeneric, SingularSystem, DivisionTerminated)

A12 = VirtualAlphabet.of([1, 2])


@dataclass
class SuiteResult:
    suite: str
    trials: int = 0
    passed: int = 0
    failed: int = 0
    redraws: int = 0
    anchors: Dict[str, bool] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    witnesses: List[str] = field(default_factory=list)

    def record(self, ok: bool, label: str):
        self.trials += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(label)

    @property
    def success(self) -> bool:
        return self.failed == 0 and all(self.anchors.values())

    @property
    def status(self) -> str:
        return "passed" if self.success else "failed"

    def to_payload(self) -> SuiteResultPayload:
        return SuiteResultPayload(
            suite=self.suite,
            trials=self.trials,
            passed=self.passed,
            failed=self.failed,
            redraws=self.redraws,
            anchors=dict(self.anchors),
            status=self.status,
            failures=list(self.failures),
            witnesses=list(self.witnesses) or None,
        )


def random_letter(rng: random.Random) -> Fraction:
    numerator = rng.randint(1, settings.letter_numerator_bound) * rng.choice((1, -1))
    return Fraction(numerator, rng.randint(1, settings.letter_denominator_bound))


def random_alphabet(rng: random.Random, size: int, minus_size: int = 0) -> VirtualAlphabet:
    plus = [random_letter(rng) for _ in range(size)]
    minus = [random_letter(rng) for _ in range(minus_size)]
    return VirtualAlphabet.of(plus, minus)


def random_partition(rng: random.Random, max_weight: int) -> Partition:
    remaining = rng.randint(0, max_weight)
    parts = []
    while remaining:
        part = rng.randint(1, min(remaining, parts[-1] if parts else remaining))
        parts.append(part)
        remaining -= part
    return Partition(tuple(parts))


def _expect_signal(call: Callable[[], Any], index: Sequence[int]) -> bool:
    try:
        call()
    except NonGeneric as exc:
        return exc.index == tuple(index)
    return False


def _fractions(values: Iterable) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


class VerificationRunner:
    """Runs the property suites and collects one result per suite"""

    def __init__(self, seed: int = None, trials: Optional[int] = None, max_redraws: int = None):
        self.seed = settings.verify_seed if seed is None else seed
        self.trials = trials
        self.max_redraws = settings.max_redraws if max_redraws is None else max_redraws
        self.results: Dict[str, SuiteResult] = {}

    def trials_for(self, suite: str) -> int:
        if self.trials is not None:
            return self.trials
        defaults = {
            "wronskian": settings.wronskian_trials,
            "bazin": settings.bazin_trials,
            "cfrac": settings.cfrac_trials,
            "lowk": settings.lowk_trials,
            "signs": settings.sign_trials,
        }
        return defaults.get(suite, settings.verify_trials)

    def rng_for(self, suite: str) -> random.Random:
        return random.Random(f"{self.seed}:{suite}")

    def run(self, suites: Sequence[str], parallel: bool = False) -> VerifyResponse:
        names = list(SUITES) if "all" in suites else list(suites)
        unknown = [name for name in names if name not in SUITES]
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(unknown)}")

        if parallel and len(names) > 1:
            with ThreadPoolExecutor(max_workers=settings.parallel_workers) as pool:
                results = list(pool.map(self.run_suite, names))
        else:
            results = [self.run_suite(name) for name in names]

        self.results = {result.suite: result for result in results}
        return VerifyResponse(
            seed=self.seed,
            trials=self.trials if self.trials is not None else settings.verify_trials,
            suites=[result.to_payload() for result in results],
            success=all(result.success for result in results),
        )

    def run_suite(self, suite: str) -> SuiteResult:
        logger.info("suite started", suite=suite, seed=self.seed)
        result = SuiteResult(suite)
        runner = getattr(self, f"suite_{suite}")
        runner(result, self.rng_for(suite), self.trials_for(suite))
        logger.info(
            "suite finished",
            suite=suite,
            status=result.status,
            passed=result.passed,
            failed=result.failed,
            redraws=result.redraws,
        )
        return result

    def _anchor(self, result: SuiteResult, name: str, check: Callable[[], bool]):
        try:
            result.anchors[name] = bool(check())
        except Exception as exc:
            logger.warning("anchor raised", suite=result.suite, anchor=name, error=str(exc))
            result.anchors[name] = False

    def _generic_trials(
        self,
        result: SuiteResult,
        rng: random.Random,
        trials: int,
        draw: Callable[[random.Random], Any],
        check: Callable[[Any], bool],
    ):
        """Run ``check`` on ``trials`` generic draws, redrawing on vanishing denominators"""
        for trial in range(trials):
            for _ in range(self.max_redraws + 1):
                case = draw(rng)
                try:
                    ok = check(case)
                except NON_GENERIC as exc:
                    result.redraws += 1
                    logger.debug("redraw", suite=result.suite, trial=trial, signal=exc.signal)
                    continue
                result.record(ok, f"trial {trial}: {case}")
                break
            else:
                result.record(False, f"trial {trial}: no generic draw after {self.max_redraws} redraws")

    # -- remainders of sigma_z(A) divided by 1

    def suite_theorem1(self, result: SuiteResult, rng: random.Random, trials: int):
        order = 12

        def check(alphabet: VirtualAlphabet) -> bool:
            trace = divide_iterate(alphabet, EMPTY, 3, order)
            for k in (1, 2, 3):
                closed = remainder_sigma_by_one(alphabet, k, order)
                if not closed.agrees_with(trace.series(k), order - 2 * k):
                    return False
            return trace.reconstructs()

        self._generic_trials(result, rng, trials, lambda r: random_alphabet(r, r.randint(4, 7)), check)
        self._anchor(
            result,
            "f1({1,2})",
            lambda: remainder_sigma_by_one(A12, 1, 3).coeffs == _fractions([1, "15/7", "31/7"]),
        )
        self._anchor(
            result, "f2({1,2})", lambda: remainder_sigma_by_one(A12, 2, 4).coeffs == _fractions([1, 3, 7, 15])
        )
        self._anchor(
            result, "f3({1,2}) vanishes", lambda: _expect_signal(lambda: remainder_sigma_by_one(A12, 3, 4), (4, 4, 4))
        )

    # -- remainders of sigma_z(A) divided by sigma_z(B)

    def suite_eq7(self, result: SuiteResult, rng: random.Random, trials: int):
        order = 12

        def draw(r: random.Random) -> Tuple[VirtualAlphabet, VirtualAlphabet]:
            return random_alphabet(r, r.randint(4, 7)), random_alphabet(r, r.randint(0, 2))

        def check(case: Tuple[VirtualAlphabet, VirtualAlphabet]) -> bool:
            a, b = case
            trace = divide_iterate(a, b, 3, order)
            for k in (1, 2, 3):
                closed = remainder_sigma_by_sigma(a, b, k, order)
                if not closed.agrees_with(trace.series(k), order - 2 * k):
                    return False
            if trace.steps[0].alpha != complete(a - b, 1) or trace.steps[0].beta != complete(a - b, 2):
                return False

            # dividing every equation by sigma_z(B) leaves alpha and beta unchanged
            quotient = divide_series(sigma(a, order) / sigma(b, order), Series.one(order), 3)
            if quotient.alphas != trace.alphas or quotient.betas != trace.betas:
                return False
            return all(
                (quotient.series(k) * sigma(b, order)).agrees_with(trace.series(k)) for k in (1, 2, 3)
            )

        self._generic_trials(result, rng, trials, draw, check)
        a123, b1 = VirtualAlphabet.of([1, 2, 3]), VirtualAlphabet.of([1])
        self._anchor(
            result,
            "f1({1,2,3}/{1})",
            lambda: remainder_sigma_by_sigma(a123, b1, 1, 4).agrees_with(
                divide_iterate(a123, b1, 1, 4).series(1)
            ),
        )
        self._anchor(
            result, "A = B vanishes", lambda: _expect_signal(lambda: remainder_sigma_by_sigma(A12, A12, 1, 4), (2,))
        )

    # -- remainders of 1 divided by sigma_z(A)

    def suite_prop1(self, result: SuiteResult, rng: random.Random, trials: int):
        order = 12

        def check(alphabet: VirtualAlphabet) -> bool:
            trace = divide_iterate(EMPTY, alphabet, 3, order)
            for k in (1, 2, 3):
                closed = remainder_one_by_sigma(alphabet, k, order)
                if not closed.agrees_with(trace.series(k), order - 2 * k):
                    return False
            return alphabet_sequence(alphabet, 3, order, cross_check=True).cross_checked

        self._generic_trials(result, rng, trials, lambda r: random_alphabet(r, r.randint(4, 7)), check)
        self._anchor(
            result,
            "A^1({1,2})",
            lambda: remainder_one_by_sigma(A12, 1, 5).coeffs == _fractions([1, 3, 7, 15, 31]),
        )
        self._anchor(
            result, "A^2({1,2}) vanishes", lambda: _expect_signal(lambda: remainder_one_by_sigma(A12, 2, 5), (2, 2, 2))
        )

    # -- Pade approximants from S(A +- 1/z)

    def suite_pade(self, result: SuiteResult, rng: random.Random, trials: int):
        def check(alphabet: VirtualAlphabet) -> bool:
            for k in (1, 2, 3):
                approximant = pade(alphabet, k)
                if approximant.contact_order < 2 * k:
                    return False
                if approximant.deviation != displayed_gamma(alphabet, k):
                    return False
                if approximant.numerator != displayed_subtrahend(alphabet, k):
                    return False
                if approximant.denominator != displayed_quotient(alphabet, k):
                    return False
                if not pade_structure(alphabet, k).holds:
                    return False
            return True

        def anchor_k2() -> bool:
            approximant = pade(A12, 2)
            raw_ratio = approximant.raw_numerator * DensePoly((7, -15)) == approximant.raw_denominator * DensePoly(
                (7, 6, 4)
            )
            return (
                approximant.numerator == DensePoly(_fractions([1, "6/7", "4/7"]))
                and approximant.denominator == DensePoly(_fractions([1, "-15/7"]))
                and approximant.contact_order == 4
                and approximant.deviation == Fraction(-8, 7)
                and raw_ratio
            )

        self._generic_trials(result, rng, trials, lambda r: random_alphabet(r, r.randint(4, 7)), check)
        self._anchor(result, "pade({1,2}, 2)", anchor_k2)
        self._anchor(
            result,
            "pade({1,2}, 1)",
            lambda: pade(A12, 1).numerator == DensePoly((1, 3)) and pade(A12, 1).contact_order == 2,
        )

    # -- Hankel system for the quotient and subtrahend

    def suite_eq8(self, result: SuiteResult, rng: random.Random, trials: int):
        order = 12

        def check(alphabet: VirtualAlphabet) -> bool:
            for k in (1, 2, 3):
                solution = eq8_solve(alphabet, k, order)
                closed = remainder_sigma_by_one(alphabet, k, order)
                if not solution.implied_remainder().agrees_with(closed, order - 2 * k):
                    return False
                if (
                    solution.quotient_poly != displayed_quotient(alphabet, k)
                    or solution.subtrahend_poly != displayed_subtrahend(alphabet, k)
                    or solution.gamma != displayed_gamma(alphabet, k)
                ):
                    return False
            return True

        def anchor_k2() -> bool:
            solution = eq8_solve(A12, 2, 6)
            return (
                solution.quotient_poly == DensePoly(_fractions([1, "-15/7"]))
                and solution.subtrahend_poly == DensePoly(_fractions([1, "6/7", "4/7"]))
                and solution.gamma == Fraction(-8, 7)
            )

        def anchor_singular() -> bool:
            a1 = VirtualAlphabet.of([1])
            try:
                eq8_solve(a1, 3, 8)
            except SingularSystem:
                return _expect_signal(lambda: displayed_gamma(a1, 3), (3, 3))
            return False

        self._generic_trials(result, rng, trials, lambda r: random_alphabet(r, r.randint(4, 7)), check)
        self._anchor(result, "eq8({1,2}, 2)", anchor_k2)
        self._anchor(
            result,
            "eq8({1,2}, 1)",
            lambda: eq8_solve(A12, 1, 4).subtrahend_poly == DensePoly((1, 3)) and eq8_solve(A12, 1, 4).gamma == 7,
        )
        self._anchor(result, "singular with S_(3,3)", anchor_singular)

    # -- Wronskians of complete functions

    def suite_wronskian(self, result: SuiteResult, rng: random.Random, trials: int):
        queries = [WronskianQuery(K) for n in range(1, 5) for K in _index_grid(n, 6)]

        def check(alphabet: VirtualAlphabet) -> bool:
            sequence = alphabet_sequence(alphabet, 3, 8, cross_check=True)
            if not sequence.cross_checked:
                return False
            _require_rectangles(alphabet, [(n - 1, n) for n in range(1, 5)])
            rectangles = [schur(Partition.rectangle(n - 1, n), alphabet) for n in range(1, 5)]
            normalizers = [row_normalizer(alphabet, n) for n in range(1, 5)]
            family = CompleteFamily(alphabet, 16)
            for query in queries:
                det = bareiss_determinant(wronskian_matrix(query, sequence))
                if det != jacobi_trudi(wronskian_index(query), family) / rectangles[query.n - 1]:
                    return False
                if raw_wronskian(query, alphabet) != det * normalizers[query.n - 1]:
                    return False
            return True

        self._generic_trials(result, rng, trials, lambda r: random_alphabet(r, 5), check)
        self._anchor(result, "W(1,2; {1,2})", lambda: wronskian_det(WronskianQuery((1, 2)), A12) == 2)
        self._anchor(result, "closed(1,2; {1,2})", lambda: wronskian_closed(WronskianQuery((1, 2)), A12) == 2)
        self._anchor(
            result,
            "W(2,2; {1,2})",
            lambda: wronskian_det(WronskianQuery((2, 2)), A12) == 0 == wronskian_closed(WronskianQuery((2, 2)), A12),
        )
        self._anchor(result, "W(3; {1,2})", lambda: wronskian_det(WronskianQuery((3,)), A12) == 15)

    # -- Bazin factorisation of the minor determinant

    def suite_bazin(self, result: SuiteResult, rng: random.Random, trials: int):
        def draw(r: random.Random) -> Tuple[VirtualAlphabet, Tuple[int, ...]]:
            return random_alphabet(r, r.randint(4, 5)), tuple(sorted(r.sample(range(4, 12), 4)))

        for trial in range(trials):
            alphabet, K = draw(rng)
            result.record(bazin_check(alphabet, K).holds, f"trial {trial}: {alphabet} K={list(K)}")

        def anchor_nonzero() -> bool:
            report = bazin_check(VirtualAlphabet.of([1, 2, 3, 4]), (4, 5, 6, 7))
            return report.holds and report.lhs != 0

        self._anchor(result, "bazin({1,2,3,4}, 4567)", anchor_nonzero)
        self._anchor(result, "bazin degenerate 0123", lambda: bazin_check(A12, (0, 1, 2, 3)).holds)

    # -- Continued fraction expansion

    def suite_cfrac(self, result: SuiteResult, rng: random.Random, trials: int):
        order = 12

        def draw(r: random.Random) -> Tuple[VirtualAlphabet, VirtualAlphabet]:
            return random_alphabet(r, 5), random_alphabet(r, r.randint(1, 3))

        def check(case: Tuple[VirtualAlphabet, VirtualAlphabet]) -> bool:
            generic, small = case
            _require_rectangles(generic, [(k, k + 1) for k in range(1, 5)])
            _require_rectangles(small, [(k, k + 1) for k in range(1, len(small.plus))])
            for depth in range(4):
                report = cf_verify(generic, depth, order)
                if report.depth != depth or report.contact_length < 2 * depth + 2:
                    return False
                if not report.division_consistent:
                    return False
            report = cf_verify(small, len(small.plus), order)
            return report.terminates and report.exact and report.division_consistent

        def anchor_terminating() -> bool:
            levels = cf_levels(A12, 3, order)
            expected = [CFLevel(0, Fraction(-3), Fraction(2)), CFLevel(1, Fraction(0), Fraction(0))]
            target = RationalFunction(DensePoly((0, 1)), DensePoly((2, -3, 1)))
            return levels == expected and cf_convergent(levels, 1) == target

        self._generic_trials(result, rng, trials, draw, check)
        self._anchor(result, "cfrac({1,2})", anchor_terminating)
        self._anchor(result, "cfrac(empty)", lambda: cf_verify(EMPTY, 0, 4).exact)
        self._anchor(
            result,
            "cfrac({1,2,3}, 2)",
            lambda: cf_verify(VirtualAlphabet.of([1, 2, 3]), 2, 8).contact_length >= 5,
        )

    # -- Conjugation sign rule

    def suite_signs(self, result: SuiteResult, rng: random.Random, trials: int):
        for trial in range(trials):
            partition = random_partition(rng, 8)
            alphabet = random_alphabet(rng, rng.randint(1, 5), rng.randint(0, 2))
            lhs = schur(partition, alphabet)
            rhs = (-1) ** partition.weight * schur(conjugate(partition), alphabet.negated())
            result.record(lhs == rhs, f"trial {trial}: {partition} over {alphabet}")
        self._anchor(
            result,
            "S_(3,1) = S_(2,1,1)(-A)",
            lambda: schur((3, 1), A12) == schur((2, 1, 1), A12.negated()),
        )

    # -- Termination of the division by 1

    def suite_termination(self, result: SuiteResult, rng: random.Random, trials: int):
        def law_holds(alphabet: VirtualAlphabet) -> Tuple[bool, Optional[Partition]]:
            size = len(alphabet.plus)
            trace = divide_iterate(alphabet, EMPTY, size + 1, 2 * size + 4)
            if trace.terminated is None:
                return False, None
            stop = trace.terminated.k
            witness = Partition.rectangle(stop + 2, stop + 1)
            earlier = [schur(Partition.rectangle(j + 2, j + 1), alphabet) for j in range(stop)]
            return schur(witness, alphabet) == 0 and all(value != 0 for value in earlier), witness

        for trial in range(trials):
            alphabet = random_alphabet(rng, rng.randint(1, 3))
            ok, witness = law_holds(alphabet)
            result.record(ok, f"trial {trial}: {alphabet}")
            if ok:
                result.witnesses.append(f"trial {trial}: {witness}({alphabet}) = 0 at step {witness.length - 1}")

        def anchor() -> bool:
            trace = divide_iterate(A12, EMPTY, 3, 8)
            return trace.terminated is not None and trace.terminated.k == 2

        self._anchor(result, "{1,2} stops at step 2", anchor)

    # -- low-order identities for f_1, f_2, f_3

    def suite_lowk(self, result: SuiteResult, rng: random.Random, trials: int):
        def check(alphabet: VirtualAlphabet) -> bool:
            _require_rectangles(alphabet, [(k + 1, k) for k in (1, 2, 3)])
            return low_k_identities(alphabet, 12).all_pass

        def anchor_short() -> bool:
            report = low_k_identities(A12, 12)
            return report.get(1).passed and report.get(2).passed and report.get(3).vanishing == "S_(4,4,4)"

        def anchor_single() -> bool:
            report = low_k_identities(VirtualAlphabet.of([1]), 10)
            return report.get(1).passed and report.get(2).vanishing == "S_(3,3)"

        self._generic_trials(result, rng, trials, lambda r: random_alphabet(r, r.randint(4, 7)), check)
        a1234 = VirtualAlphabet.of([1, 2, 3, 4])
        self._anchor(result, "identities({1,2,3,4})", lambda: low_k_identities(a1234, 12).all_pass)
        self._anchor(result, "identities({1,2})", anchor_short)
        self._anchor(result, "identities({1})", anchor_single)


def _index_grid(n: int, top: int) -> List[Tuple[int, ...]]:
    grid: List[Tuple[int, ...]] = [()]
    for _ in range(n):
        grid = [prefix + (k,) for prefix in grid for k in range(top + 1)]
    return grid


def _require_rectangles(alphabet: VirtualAlphabet, shapes: Iterable[Tuple[int, int]]):
    for width, height in shapes:
        rectangle = Partition.rectangle(width, height)
        if schur(rectangle, alphabet) == 0:
            raise NonGeneric(rectangle.parts)
