#!/usr/bin/env python3
"""
schur-euclid command line.

Every subcommand prints one payload on stdout (JSON by default) and exits
0 on success, 1 on usage or parse errors and 2 when a vanishing Schur
function or a terminated division stops the computation.
"""
import argparse
import json
import re
import sys
from typing import Callable, Dict, Optional, Sequence, TextIO, Tuple

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from .alphabets import parse_alphabet
from .arith import format_rational
from .closedform import (
    eq8_solve,
    low_k_identities,
    pade,
    remainder_one_by_sigma,
    remainder_sigma_by_one,
    remainder_sigma_by_sigma,
)
from .config import settings
from .contfrac import cf_verify
from .errors import (
    DivisionTerminated,
    NonGeneric,
    SeriesEuclidError,
    SingularSystem,
    UsageError,
)
from .euclid import divide_iterate
from .logger import configure_logging, get_logger
from .schemas import (
    AlphabetPayload,
    BazinResponse,
    CFLevelPayload,
    CFracResponse,
    DivideResponse,
    DivisionStepPayload,
    Eq8Response,
    IdentitiesResponse,
    IdentityPayload,
    PadeResponse,
    RemainderResponse,
    SchurResponse,
    SequenceResponse,
    SeriesPayload,
    SignalResponse,
    VerifyResponse,
    WronskianResponse,
    poly_payload,
    rationals,
)
from .schur import Partition, conjugate, parse_int_vector, schur
from .verify import SUITES, VerificationRunner
from .wronskian import (
    SequenceSource,
    WronskianQuery,
    alphabet_sequence,
    bazin_check,
    wronskian_closed,
    wronskian_det,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SIGNAL = 2

NEGATIVE_VALUE = re.compile(r"^-\d[\d/,;\s-]*$")

Outcome = Tuple[BaseModel, int]


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2

    Values such as "-1,2", "-1/2" or "-1,3" are alphabets and index vectors,
    not options.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = NEGATIVE_VALUE

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}", self.format_usage())


def resolve_order(args: argparse.Namespace, depth: int) -> int:
    order = args.order if args.order is not None else 2 * depth + 6
    if order < 1 or order > settings.max_order:
        raise UsageError(f"order must lie in 1..{settings.max_order}, got {order}")
    return order


def run_divide(args: argparse.Namespace) -> Outcome:
    num = parse_alphabet(args.num)
    den = parse_alphabet(args.den)
    order = resolve_order(args, args.steps)
    trace = divide_iterate(num, den, args.steps, order)

    response = DivideResponse(
        num=AlphabetPayload.from_alphabet(num),
        den=AlphabetPayload.from_alphabet(den),
        order=order,
        f_init=[SeriesPayload.from_series(series) for series in trace.f_init],
        steps=[
            DivisionStepPayload(
                k=step.k,
                alpha=format_rational(step.alpha),
                beta=format_rational(step.beta),
                remainder=SeriesPayload.from_series(step.remainder),
            )
            for step in trace.steps
        ],
        terminated=trace.is_terminated,
    )
    if trace.terminated is not None:
        response.terminated_at = trace.terminated.k
        response.terminated_alpha = format_rational(trace.terminated.alpha)
        response.signal = "Terminated"
        if den.is_zero():
            # dividing by 1 stops exactly where S_((k+2)^(k+1))(num) vanishes
            witness = Partition.rectangle(trace.terminated.k + 2, trace.terminated.k + 1)
            response.witness = str(witness)
            response.witness_value = format_rational(schur(witness, num))
        return response, EXIT_SIGNAL
    return response, EXIT_OK


def run_remainder(args: argparse.Namespace) -> Outcome:
    alphabet = parse_alphabet(args.alphabet)
    order = resolve_order(args, args.k)
    divisor = None
    mode = args.mode or ("sigma-by-sigma" if args.divisor is not None else "sigma-by-one")

    if mode == "sigma-by-one":
        remainder = remainder_sigma_by_one(alphabet, args.k, order)
    elif mode == "sigma-by-sigma":
        divisor = parse_alphabet(args.divisor or "")
        remainder = remainder_sigma_by_sigma(alphabet, divisor, args.k, order)
    else:
        remainder = remainder_one_by_sigma(alphabet, args.k, order)

    response = RemainderResponse(
        mode=mode,
        alphabet=AlphabetPayload.from_alphabet(alphabet),
        divisor=AlphabetPayload.from_alphabet(divisor) if divisor is not None else None,
        k=args.k,
        remainder=SeriesPayload.from_series(remainder),
    )
    return response, EXIT_OK


def run_pade(args: argparse.Namespace) -> Outcome:
    alphabet = parse_alphabet(args.alphabet)
    approximant = pade(alphabet, args.k, resolve_order(args, args.k))
    response = PadeResponse(
        alphabet=AlphabetPayload.from_alphabet(alphabet),
        k=args.k,
        numerator=poly_payload(approximant.numerator),
        denominator=poly_payload(approximant.denominator),
        raw_numerator=poly_payload(approximant.raw_numerator),
        raw_denominator=poly_payload(approximant.raw_denominator),
        contact_order=approximant.contact_order,
        deviation=format_rational(approximant.deviation),
        exact=approximant.exact,
    )
    return response, EXIT_OK


def run_eq8(args: argparse.Namespace) -> Outcome:
    alphabet = parse_alphabet(args.alphabet)
    order = resolve_order(args, args.k)
    solution = eq8_solve(alphabet, args.k, order)
    response = Eq8Response(
        alphabet=AlphabetPayload.from_alphabet(alphabet),
        k=args.k,
        quotient_poly=poly_payload(solution.quotient_poly),
        subtrahend_poly=poly_payload(solution.subtrahend_poly),
        gamma=format_rational(solution.gamma),
    )
    if solution.remainder is not None:
        response.remainder = SeriesPayload.from_series(solution.remainder)
        closed = remainder_sigma_by_one(alphabet, args.k, order)
        response.matches_closed_form = solution.remainder.agrees_with(closed)
    return response, EXIT_OK


def run_wronskian(args: argparse.Namespace) -> Outcome:
    alphabet = parse_alphabet(args.alphabet)
    query = WronskianQuery(parse_int_vector(args.K).entries)
    det = wronskian_det(query, alphabet, args.order)
    closed = wronskian_closed(query, alphabet)
    response = WronskianResponse(det=format_rational(det), closed=format_rational(closed), match=det == closed)
    return response, EXIT_OK


def run_bazin(args: argparse.Namespace) -> Outcome:
    alphabet = parse_alphabet(args.alphabet)
    report = bazin_check(alphabet, parse_int_vector(args.K).entries)
    response = BazinResponse(
        K=list(report.K),
        minors=[rationals(row) for row in report.minors],
        lhs=format_rational(report.lhs),
        factors=rationals(report.factors),
        rhs=format_rational(report.rhs),
        holds=report.holds,
    )
    return response, EXIT_OK


def run_sequence(args: argparse.Namespace) -> Outcome:
    alphabet = parse_alphabet(args.alphabet)
    source = SequenceSource(args.source)
    sequence = alphabet_sequence(alphabet, args.kmax, resolve_order(args, args.kmax), source, args.cross_check)
    response = SequenceResponse(
        alphabet=AlphabetPayload.from_alphabet(alphabet),
        source=sequence.source.value,
        entries=[SeriesPayload.from_series(entry) for entry in sequence.entries],
        cross_checked=sequence.cross_checked,
    )
    return response, EXIT_OK


def run_cfrac(args: argparse.Namespace) -> Outcome:
    alphabet = parse_alphabet(args.alphabet)
    report = cf_verify(alphabet, args.depth, resolve_order(args, args.depth))
    response = CFracResponse(
        alphabet=AlphabetPayload.from_alphabet(alphabet),
        depth=report.depth,
        levels=[
            CFLevelPayload(k=level.k, s1=format_rational(level.s1), s2=format_rational(level.s2))
            for level in report.levels
        ],
        numerator=poly_payload(report.convergent.numerator),
        denominator=poly_payload(report.convergent.denominator),
        contact_length=report.contact_length,
        order=report.order,
        division_consistent=report.division_consistent,
        exact=report.exact,
    )
    return response, EXIT_OK


def run_schur(args: argparse.Namespace) -> Outcome:
    alphabet = parse_alphabet(args.alphabet)
    index = parse_int_vector(args.index)
    response = SchurResponse(index=list(index.entries), label=index.label, value=format_rational(schur(index, alphabet)))
    if args.conjugate:
        try:
            partition = Partition(index.entries)
        except ValueError as exc:
            raise UsageError(f"--conjugate needs a partition: {exc}")
        response.conjugate = list(conjugate(partition).parts)
    return response, EXIT_OK


def run_identities(args: argparse.Namespace) -> Outcome:
    alphabet = parse_alphabet(args.alphabet)
    report = low_k_identities(alphabet, args.order if args.order is not None else 12)
    response = IdentitiesResponse(
        alphabet=AlphabetPayload.from_alphabet(alphabet),
        identities=[
            IdentityPayload(
                k=identity.k,
                polynomial=identity.polynomial,
                factored=identity.factored,
                vanishing=identity.vanishing,
            )
            for identity in report.identities
        ],
        all_pass=report.all_pass,
    )
    return response, EXIT_OK


def run_verify(args: argparse.Namespace) -> Outcome:
    runner = VerificationRunner(seed=args.seed, trials=args.trials)
    response = runner.run([args.suite], parallel=args.parallel)
    return response, EXIT_OK if response.success else EXIT_USAGE


HANDLERS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "divide": run_divide,
    "remainder": run_remainder,
    "pade": run_pade,
    "eq8": run_eq8,
    "wronskian": run_wronskian,
    "bazin": run_bazin,
    "sequence": run_sequence,
    "cfrac": run_cfrac,
    "schur": run_schur,
    "identities": run_identities,
    "verify": run_verify,
}


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="schur-euclid",
        description="Euclidean division of formal series and its Schur-function closed forms",
    )
    parser.add_argument("--format", choices=["json", "text"], default=settings.output_format)
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (logs go to stderr)")
    commands = parser.add_subparsers(dest="command", required=True)

    alphabet_help = "alphabet 'plus;minus', comma-separated rationals, e.g. '1,2;1/2'"
    order_help = "series order; defaults to twice the step count plus 6"

    divide = commands.add_parser("divide", help="iterate the division of sigma_z(num) by sigma_z(den)")
    divide.add_argument("--num", required=True, help=alphabet_help)
    divide.add_argument("--den", required=True, help=alphabet_help)
    divide.add_argument("--steps", type=int, required=True)
    divide.add_argument("--order", type=int, help=order_help)

    remainder = commands.add_parser("remainder", help="closed-form k-th remainder")
    remainder.add_argument("--alphabet", required=True, help=alphabet_help)
    remainder.add_argument("--divisor", help="divide by sigma_z(divisor) instead of 1")
    remainder.add_argument("--mode", choices=["sigma-by-one", "sigma-by-sigma", "one-by-sigma"])
    remainder.add_argument("--k", type=int, required=True)
    remainder.add_argument("--order", type=int, help=order_help)

    pade_parser = commands.add_parser("pade", help="[k, k-1] Pade approximant of sigma_z(A)")
    pade_parser.add_argument("--alphabet", required=True, help=alphabet_help)
    pade_parser.add_argument("--k", type=int, required=True)
    pade_parser.add_argument("--order", type=int, help="expansion order used to measure contact")

    eq8 = commands.add_parser("eq8", help="solve for the quotient and subtrahend polynomials of f_k")
    eq8.add_argument("--alphabet", required=True, help=alphabet_help)
    eq8.add_argument("--k", type=int, required=True)
    eq8.add_argument("--order", type=int, help=order_help)

    wronskian = commands.add_parser("wronskian", help="Wronskian of complete functions against its closed form")
    wronskian.add_argument("--alphabet", required=True, help=alphabet_help)
    wronskian.add_argument("--K", required=True, help="comma-separated nonnegative integers")
    wronskian.add_argument("--order", type=int)

    bazin = commands.add_parser("bazin", help="Bazin minor factorisation for four indices")
    bazin.add_argument("--alphabet", required=True, help=alphabet_help)
    bazin.add_argument("--K", required=True, help="four comma-separated integers")

    sequence = commands.add_parser("sequence", help="sigma_z(A^0) .. sigma_z(A^kmax) from dividing 1 by sigma_z(A)")
    sequence.add_argument("--alphabet", required=True, help=alphabet_help)
    sequence.add_argument("--kmax", type=int, required=True)
    sequence.add_argument("--order", type=int, help=order_help)
    sequence.add_argument("--source", choices=[s.value for s in SequenceSource], default=SequenceSource.CLOSED_FORM.value)
    sequence.add_argument("--cross-check", action="store_true")

    cfrac = commands.add_parser(
        "cfrac",
        help="continued fraction of (1/z) sigma_{1/z}(A); depth d keeps levels 0..d and drops the last s2",
    )
    cfrac.add_argument("--alphabet", required=True, help=alphabet_help)
    cfrac.add_argument("--depth", type=int, required=True)
    cfrac.add_argument("--order", type=int, help=order_help)

    schur_parser = commands.add_parser("schur", help="Jacobi-Trudi Schur function of an integer index")
    schur_parser.add_argument("--alphabet", required=True, help=alphabet_help)
    schur_parser.add_argument("--index", required=True, help="comma-separated integers, e.g. '4,3' or '-1,3'")
    schur_parser.add_argument("--conjugate", action="store_true")

    identities = commands.add_parser("identities", help="closed identities for f_1, f_2 and f_3")
    identities.add_argument("--alphabet", required=True, help=alphabet_help)
    identities.add_argument("--order", type=int, help="series order, at least 10 (default 12)")

    verify = commands.add_parser("verify", help="seeded property suites")
    verify.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    verify.add_argument("--trials", type=int, default=None, help=f"trials per suite (default {settings.verify_trials})")
    verify.add_argument("--seed", type=int, default=settings.verify_seed)
    verify.add_argument("--parallel", action="store_true", help="run suites on a thread pool")

    return parser


def signal_payload(exc: SeriesEuclidError) -> SignalResponse:
    if isinstance(exc, NonGeneric):
        return SignalResponse(signal=exc.signal, vanishing=exc.vanishing)
    if isinstance(exc, DivisionTerminated):
        return SignalResponse(signal=exc.signal, step=exc.step, message=str(exc))
    return SignalResponse(signal=exc.signal, message=str(exc))


def _cell(value) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def render(payload: BaseModel, fmt: str, out: TextIO):
    data = payload.model_dump(exclude_none=True)
    if fmt == "json":
        out.write(json.dumps(data, separators=(",", ":")) + "\n")
        return

    console = Console(file=out, width=120, color_system=None)
    if isinstance(payload, VerifyResponse):
        table = Table("suite", "trials", "passed", "failed", "redraws", "anchors", "status")
        for suite in payload.suites:
            anchors = f"{sum(suite.anchors.values())}/{len(suite.anchors)}"
            table.add_row(
                suite.suite, str(suite.trials), str(suite.passed), str(suite.failed),
                str(suite.redraws), anchors, suite.status,
            )
        console.print(table)
        console.print(f"seed {payload.seed}: {'passed' if payload.success else 'failed'}")
        return

    table = Table("field", "value")
    for key, value in data.items():
        table.add_row(key, _cell(value))
    console.print(table)


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(exc.usage)
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.log_level)
    logger.debug("command", command=args.command)

    try:
        payload, code = HANDLERS[args.command](args)
    except (NonGeneric, DivisionTerminated, SingularSystem) as exc:
        logger.info("computation stopped", signal=exc.signal, detail=str(exc))
        render(signal_payload(exc), args.format, out)
        return EXIT_SIGNAL
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except (SeriesEuclidError, ValueError) as exc:
        logger.error("command failed", command=args.command, error=str(exc))
        sys.stderr.write(f"schur-euclid {args.command}: error: {exc}\n")
        return EXIT_USAGE

    render(payload, args.format, out)
    return code


def main():
    """Main function"""
    sys.exit(run())


if __name__ == "__main__":
    main()
