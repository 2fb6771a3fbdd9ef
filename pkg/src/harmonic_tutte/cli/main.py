"""
Command line interface.

    htutte [OPTIONS] COMMAND [ARGS]...

Every command accepts --format, --seed, --max-n, --max-words, --log-level and
--log-json. Results go to stdout, logs and diagnostics to stderr.
"""
from __future__ import annotations

import functools
from typing import Callable, Optional

import click
from pydantic import ValidationError

from ..codes import (
    LinearCode,
    dual_code,
    enumerator_table,
    harmonic_weight_enumerator,
    weight_enumerator,
    zeta,
)
from ..constants import APP_NAME, APP_VERSION
from ..core.config import get_settings
from ..core.errors import HarmonicTutteError
from ..enums.system import ExitStatus, LogLevel, OutputFormat
from ..enums.verify import ErrorCategory, Identity, VerifyTarget
from ..harmonic.functions import SetFunction, harm_basis
from ..linalg.io import format_matrix
from ..matroid import check_subset_cap, harmonic_tutte, tutte
from ..observability.logging import get_logger, setup_logging
from ..poly import BivariatePoly
from ..services.io_service import function_or_constant, load_code, parse_subset
from ..services.verify_service import run_target
from ..utils.helpers import rational_to_str
from ..verify import VerificationReport, design_check, run_selftest
from .dtos import (
    BasisDTO,
    DesignReportDTO,
    EnumeratorTableDTO,
    GeneratorDTO,
    HarmonicFunctionDTO,
    PolynomialDTO,
    PolynomialRecordDTO,
    RunConfig,
    SelftestSummaryDTO,
    VerificationRecordDTO,
)
from .output import Emitter

logger = get_logger(__name__)

EXIT_BY_CATEGORY = {
    ErrorCategory.VALIDATION: ExitStatus.VALIDATION,
    ErrorCategory.LIMIT: ExitStatus.LIMIT,
    ErrorCategory.CONSISTENCY: ExitStatus.CONSISTENCY,
    ErrorCategory.IO: ExitStatus.IO,
}

INPUT_FILE = click.Path(exists=True, dir_okay=False)

RUN_OPTIONS = (
    click.option(
        "--format",
        "output_format",
        type=click.Choice([f.value for f in OutputFormat]),
        default=None,
        help="Output format (default: human, or HTUTTE_OUTPUT_FORMAT).",
    ),
    click.option("--seed", type=click.IntRange(min=0), default=None, help="Seed for random corpora."),
    click.option("--max-n", type=click.IntRange(min=1), default=None, help="Cap on n for 2^n subset enumeration."),
    click.option("--max-words", type=click.IntRange(min=1), default=None, help="Cap on q^k for codeword enumeration."),
    click.option("--log-level", type=click.Choice([level.value for level in LogLevel]), default=None, help="Log level on stderr."),
    click.option("--log-json/--no-log-json", default=None, help="Emit logs as JSON records."),
)
RUN_OPTION_NAMES = ("output_format", "seed", "max_n", "max_words", "log_level", "log_json")


def with_run_config(func: Callable) -> Callable:
    """Adds the shared options and passes the merged ``RunConfig`` as the first argument."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        overrides = {name: kwargs.pop(name) for name in RUN_OPTION_NAMES}
        try:
            config = RunConfig.from_settings(get_settings(), **overrides)
        except ValidationError as exc:
            raise click.UsageError(f"invalid configuration: {exc.errors()[0]['msg']}") from exc
        setup_logging(config.log_level.to_logging(), json=config.log_json)
        return func(config, *args, **kwargs)

    for option in reversed(RUN_OPTIONS):
        wrapper = option(wrapper)
    return wrapper


class HarmonicTutteGroup(click.Group):
    """Maps library errors to exit statuses."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except HarmonicTutteError as exc:
            logger.debug("command failed", exc_info=True)
            click.echo(f"error [{exc.category.value}]: {exc}", err=True)
            ctx.exit(int(EXIT_BY_CATEGORY[exc.category]))


@click.group(cls=HarmonicTutteGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(APP_VERSION, prog_name=APP_NAME)
def cli() -> None:
    """Tutte polynomials, harmonic weight enumerators and their identities."""


def function_text(f: SetFunction) -> str:
    """``{1} - {3}``, ``2{1,2} + (1/2){3,4}``; ``0`` for the zero function."""
    if f.is_zero():
        return "0"
    parts = []
    for z, v in f.values.items():
        block = "{" + ",".join(map(str, z)) + "}"
        magnitude = abs(v)
        body = block if magnitude == 1 else (f"{magnitude}{block}" if magnitude.denominator == 1 else f"({magnitude}){block}")
        if not parts:
            parts.append(f"-{body}" if v < 0 else body)
        else:
            parts.append(f" - {body}" if v < 0 else f" + {body}")
    return "".join(parts)


def _emit_polynomial(config: RunConfig, quantity: str, code: LinearCode, p: BivariatePoly, d: Optional[int] = None) -> None:
    out = Emitter(config.output_format)
    if out.json:
        out.record(PolynomialRecordDTO(quantity=quantity, q=code.q, n=code.n, k=code.k, d=d, polynomial=PolynomialDTO.from_poly(p)))
    else:
        out.line(str(p))


def _emit_reports(config: RunConfig, reports: list[VerificationReport]) -> bool:
    out = Emitter(config.output_format)
    if out.json:
        for report in reports:
            out.record(VerificationRecordDTO.from_report(report))
    else:
        out.table(
            None,
            ["identity", "instance", "verdict", "lhs", "rhs"],
            [(r.identity.value, r.instance.describe(), r.verdict.value, r.lhs, r.rhs) for r in reports],
        )
        for report in reports:
            if not report.ok:
                out.line(f"{report.identity.value}: lhs - rhs = {report.diff}")
    return all(r.ok for r in reports)


@cli.command("tutte")
@with_run_config
@click.argument("matrix", type=INPUT_FILE)
def tutte_command(config: RunConfig, matrix: str) -> None:
    """Classical Tutte polynomial of the column matroid of MATRIX."""
    code = load_code(matrix)
    _emit_polynomial(config, "tutte", code, tutte(code.matroid, max_n=config.max_n))


@cli.command("harmonic-tutte")
@with_run_config
@click.argument("matrix", type=INPUT_FILE)
@click.argument("function", type=INPUT_FILE)
def harmonic_tutte_command(config: RunConfig, matrix: str, function: str) -> None:
    """Harmonic Tutte polynomial T(M, f) for the function in FUNCTION."""
    code = load_code(matrix)
    f = function_or_constant(function, code.n)
    _emit_polynomial(config, "harmonic-tutte", code, harmonic_tutte(code.matroid, f, max_n=config.max_n), f.d)


@cli.command("weight-enum")
@with_run_config
@click.argument("matrix", type=INPUT_FILE)
def weight_enum_command(config: RunConfig, matrix: str) -> None:
    """Weight enumerator W_C of the code generated by MATRIX."""
    code = load_code(matrix)
    _emit_polynomial(config, "weight-enum", code, weight_enumerator(code, max_words=config.max_words))


@cli.command("harmonic-weight-enum")
@with_run_config
@click.argument("matrix", type=INPUT_FILE)
@click.argument("function", type=INPUT_FILE)
def harmonic_weight_enum_command(config: RunConfig, matrix: str, function: str) -> None:
    """Harmonic weight enumerator W_{C,f}."""
    code = load_code(matrix)
    f = function_or_constant(function, code.n)
    _emit_polynomial(config, "harmonic-weight-enum", code, harmonic_weight_enumerator(code, f, max_words=config.max_words), f.d)


@cli.command("zeta")
@with_run_config
@click.argument("matrix", type=INPUT_FILE)
@click.argument("function", type=INPUT_FILE)
def zeta_command(config: RunConfig, matrix: str, function: str) -> None:
    """Z_{C,f} = W_{C,f} / (xy)^d."""
    code = load_code(matrix)
    f = function_or_constant(function, code.n)
    _emit_polynomial(config, "zeta", code, zeta(code, f, max_words=config.max_words), f.d)


@cli.command("harm-basis")
@with_run_config
@click.argument("n", type=click.IntRange(min=0))
@click.argument("d", type=click.IntRange(min=0), required=False)
@click.option("--degree", type=click.IntRange(min=0), default=None, help="Only this degree (same as D).")
def harm_basis_command(config: RunConfig, n: int, d: Optional[int], degree: Optional[int]) -> None:
    """Canonical basis of Harm_d on N points; all d <= N/2 when no degree is given."""
    if d is not None and degree is not None and d != degree:
        raise click.UsageError(f"degree given twice: {d} and {degree}")
    chosen = d if d is not None else degree
    if chosen is not None and chosen > n:
        raise click.BadParameter(f"degree {chosen} exceeds n={n}", param_hint="D")
    check_subset_cap(n, config.max_n)
    degrees = [chosen] if chosen is not None else list(range(n // 2 + 1))
    out = Emitter(config.output_format)
    for each in degrees:
        basis = harm_basis(n, each)
        if out.json:
            out.record(BasisDTO(n=n, d=each, dimension=len(basis), basis=[HarmonicFunctionDTO.from_function(f) for f in basis]))
            continue
        out.line(f"Harm_{each} on {n} points: dimension {len(basis)}")
        for index, f in enumerate(basis, start=1):
            out.line(f"  f{index} = {function_text(f)}")


@cli.command("dual")
@with_run_config
@click.argument("matrix", type=INPUT_FILE)
def dual_command(config: RunConfig, matrix: str) -> None:
    """Generator of the dual code, in the matrix file format."""
    dual = dual_code(load_code(matrix))
    out = Emitter(config.output_format)
    if out.json:
        out.record(GeneratorDTO(q=dual.q, n=dual.n, k=dual.k, generator=dual.generator.to_rows()))
    else:
        click.echo(format_matrix(dual.generator), nl=False)


@cli.command("b-table")
@with_run_config
@click.argument("matrix", type=INPUT_FILE)
@click.argument("function", type=INPUT_FILE, required=False)
def b_table_command(config: RunConfig, matrix: str, function: Optional[str]) -> None:
    """A_i, A_{i,f} and B_{t,f}; f defaults to the constant function."""
    code = load_code(matrix)
    f = function_or_constant(function, code.n)
    table = enumerator_table(code, f, max_n=config.max_n, max_words=config.max_words)
    out = Emitter(config.output_format)
    if out.json:
        out.record(EnumeratorTableDTO.from_table(table))
        return
    out.table(
        f"n={table.n} d={table.d}",
        ["i", "A_i", "A_i,f", "B_i,f"],
        [
            (i, table.a.get(i, 0), rational_to_str(table.a_f.get(i, 0)), rational_to_str(table.b_f.get(i, 0)))
            for i in range(table.n + 1)
        ],
    )


@cli.command("verify")
@with_run_config
@click.argument("target", type=click.Choice([t.value for t in VerifyTarget]))
@click.argument("matrix", type=INPUT_FILE)
@click.argument("function", type=INPUT_FILE, required=False)
@click.option("--subset", default=None, help="Subset J for lemma-slices, e.g. 1,3 (default: every subset).")
@click.pass_context
def verify_command(
    ctx: click.Context,
    config: RunConfig,
    target: str,
    matrix: str,
    function: Optional[str],
    subset: Optional[str],
) -> None:
    """Checks an identity on MATRIX and FUNCTION (constant function when omitted)."""
    code = load_code(matrix)
    f = function_or_constant(function, code.n)
    members = parse_subset(subset, code.n) if subset is not None else None
    reports = run_target(VerifyTarget(target), code, f, members, config.max_n, config.max_words)
    if not _emit_reports(config, reports):
        ctx.exit(int(ExitStatus.MISMATCH))


@cli.command("design-check")
@with_run_config
@click.argument("matrix", type=INPUT_FILE)
@click.argument("t", type=click.IntRange(min=1))
@click.pass_context
def design_check_command(ctx: click.Context, config: RunConfig, matrix: str, t: int) -> None:
    """Whether the codeword supports of each weight form t-designs."""
    code = load_code(matrix)
    report = design_check(code, t, max_n=config.max_n, max_words=config.max_words)
    out = Emitter(config.output_format)
    if out.json:
        out.record(DesignReportDTO.from_report(report))
    else:
        out.table(
            f"harmonic enumerators, t={t}",
            ["d", "basis", "all zero", "witness f", "W_C,f"],
            [
                (r.d, r.basis_size, r.vanishes, function_text(r.witness) if r.witness else "-", r.witness_enumerator or "-")
                for r in report.degrees
            ],
        )
        out.table(
            "blocks by weight",
            ["weight", "blocks", "harmonic", "counted", "lambda"],
            [(w.weight, w.blocks, w.harmonic, w.oracle, "-" if w.lam is None else w.lam) for w in report.weights],
        )
        verdict = "is" if report.harmonic_design else "is not"
        out.line(f"supports {verdict} a {t}-design for every weight; block count agrees: {report.agree}")
        if report.matroid_vanishes is not None:
            out.line(f"T(M_C, f) = 0 for every basis f: {report.matroid_vanishes}")
    if not report.agree or report.implication_holds is False:
        ctx.exit(int(ExitStatus.MISMATCH))


@cli.command("selftest")
@with_run_config
@click.option("--only", "only", multiple=True, type=click.Choice([i.value for i in Identity]), help="Restrict to these identities.")
@click.option("--corpus-size", type=click.IntRange(min=1), default=None, help="Instances per identity.")
@click.option("--lemma-triples", type=click.IntRange(min=1), default=None, help="Random (f, J) pairs for the slice lemma.")
@click.pass_context
def selftest_command(
    ctx: click.Context,
    config: RunConfig,
    only: tuple[str, ...],
    corpus_size: Optional[int],
    lemma_triples: Optional[int],
) -> None:
    """Runs every identity on the seeded random corpus."""
    if corpus_size is not None:
        config.corpus_size = corpus_size
    if lemma_triples is not None:
        config.lemma_triples = lemma_triples
    identities = {Identity(name) for name in only} or None
    summary = run_selftest(config.seed, config.corpus, identities)
    out = Emitter(config.output_format)
    if out.json:
        out.record(SelftestSummaryDTO.from_summary(summary))
    else:
        out.line(f"seed {summary.seed}")
        out.table(
            None,
            ["identity", "checked", "failed"],
            [(r.identity.value, r.checked, len(r.failures)) for r in summary.results],
        )
        for result in summary.results:
            for report in result.failures:
                out.line(f"{report.identity.value} on {report.instance.describe()}: lhs - rhs = {report.diff}")
        out.line("all identities hold" if summary.ok else "MISMATCH")
    if not summary.ok:
        ctx.exit(int(ExitStatus.MISMATCH))


def main() -> None:
    cli(prog_name="htutte")


__all__ = ["cli", "function_text", "main"]
