"""Typer command-line interface: charpoly, verify, random and bench commands."""

import json
import sys
from pathlib import Path
from typing import NoReturn, Optional

import typer

from . import bench as bench_module
from . import fq_poly
from .charpoly import (
    AlgorithmError,
    CharPolyError,
    CharPolyResult,
    InconsistentSystemError,
    PrecisionError,
    charpoly_endomorphism,
)
from .config import DEFAULT_ALGORITHM, ORACLE_MAX_UNKNOWNS
from .descent import DescentError
from .drinfeld import DrinfeldModule, DrinfeldModuleError
from .ff_tower import FieldError, FieldTower
from .instance_io import (
    InstanceError,
    dump_instance,
    fq_value,
    generate_instance,
    load_report,
    parse_endo,
    parse_instance,
    report_to_result,
    result_to_report,
    write_instance,
)
from .linalg import MatrixShapeError
from .logger import get_logger, log_duration
from .oracle import charpoly_linear_system_oracle, oracle_unknowns, verify_charpoly
from .skew import SkewPoly
from .wk_ring import PrecisionMismatchError

logger = get_logger(__name__)

app = typer.Typer(
    help="Characteristic polynomials of Drinfeld module endomorphisms.",
    add_completion=False,
    no_args_is_help=True,
)

EXIT_ERROR = 1
EXIT_MISMATCH = 2


def _fail(field: str, message: str, code: int = EXIT_ERROR) -> NoReturn:
    typer.echo(f"error: {field}: {message}", err=True)
    raise typer.Exit(code=code)


def _error_field(error: Exception) -> str:
    """Field name reported for a domain error raised below the CLI."""
    if isinstance(error, InstanceError):
        return error.field
    if isinstance(error, PrecisionError):
        return "k"
    if isinstance(error, AlgorithmError):
        return "algorithm"
    if isinstance(error, CharPolyError):
        return "endo"
    return "module"


DOMAIN_ERRORS = (
    InstanceError,
    CharPolyError,
    DescentError,
    DrinfeldModuleError,
    FieldError,
    MatrixShapeError,
    PrecisionMismatchError,
)


def _message(error: Exception) -> str:
    return error.message if isinstance(error, InstanceError) else str(error)


def _read_endo_file(endo: str) -> str:
    """Contents of the file named by --endo, or the argument itself when it names no file."""
    try:
        candidate = Path(endo)
        if candidate.is_file():
            return candidate.read_text(encoding="utf-8")
    except OSError as e:
        logger.debug(f"--endo is not a readable path ({e}); parsing it inline")
    return endo


def _resolve_endo(tower: FieldTower, module: DrinfeldModule, file_endo: Optional[SkewPoly],
                  endo: Optional[str], frobenius: bool) -> SkewPoly:
    """Pick the endomorphism: --frobenius, then --endo, then the instance file."""
    if frobenius and endo is not None:
        raise InstanceError("endo", "--endo and --frobenius are mutually exclusive")
    if frobenius:
        return module.frobenius_endo()
    if endo is not None:
        text = endo if endo.lstrip().startswith(("[", "{")) else _read_endo_file(endo)
        try:
            value = json.loads(text)
        except json.JSONDecodeError:
            value = text.strip()
        return parse_endo(tower, value)
    if file_endo is None:
        raise InstanceError("endo", "no endomorphism given (use --frobenius, --endo or an 'endo' entry)")
    return file_endo


def _verify(module: DrinfeldModule, u: SkewPoly, result: CharPolyResult) -> list[str]:
    """Run the annihilation check and, when small enough, the linear-system oracle."""
    if not verify_charpoly(module, u, result):
        _fail("verify", "u^r + sum phi_{a_i} u^i is not zero", EXIT_MISMATCH)
    notes = ["annihilation ok"]

    unknowns = oracle_unknowns(module, u)
    if unknowns > ORACLE_MAX_UNKNOWNS:
        logger.info(f"Skipping linear-system oracle: {unknowns} unknowns > {ORACLE_MAX_UNKNOWNS}")
        notes.append(f"linear-system oracle skipped ({unknowns} unknowns)")
        return notes
    try:
        expected = charpoly_linear_system_oracle(module, u)
    except InconsistentSystemError as e:
        _fail("verify", str(e), EXIT_MISMATCH)
    if expected is None:
        notes.append("linear-system oracle not unique")
    elif expected != result:
        _fail("verify", "linear-system oracle disagrees", EXIT_MISMATCH)
    else:
        notes.append("linear-system oracle agrees")
    return notes


@app.command("charpoly")
def charpoly_command(
    module_path: Path = typer.Option(..., "--module", help="Instance JSON file"),
    endo: Optional[str] = typer.Option(None, "--endo", help="Endomorphism: JSON list of L elements or a file"),
    frobenius: bool = typer.Option(False, "--frobenius", help="Use the Frobenius endomorphism tau^n"),
    algorithm: str = typer.Option(DEFAULT_ALGORITHM, "--algorithm", help="auto, recurrence, euclidean or bsgs"),
    k: Optional[int] = typer.Option(None, "--k", help="Precision override"),
    verify: bool = typer.Option(False, "--verify", help="Check the result independently"),
    output_format: str = typer.Option("text", "--format", help="text or json"),
) -> None:
    """Compute the characteristic polynomial of an endomorphism."""
    if output_format not in ("text", "json"):
        _fail("format", f"expected 'text' or 'json', got {output_format!r}")
    try:
        tower, module, file_endo = parse_instance(module_path)
        u = _resolve_endo(tower, module, file_endo, endo, frobenius)
        with log_duration(logger, "charpoly"):
            result = charpoly_endomorphism(module, u, algorithm, k)
    except DOMAIN_ERRORS as e:
        _fail(_error_field(e), _message(e))

    notes = _verify(module, u, result) if verify else []

    if output_format == "json":
        report = result_to_report(tower, result, verified=True if verify else None)
        typer.echo(report.model_dump_json(indent=2))
        return

    typer.echo(result.to_text(tower.fq))
    for i, ai in enumerate(result.a):
        coeffs = [fq_value(tower.fq, c) for c in ai]
        typer.echo(f"a_{i} = {fq_poly.to_str(tower.fq, ai, 'x')}  {json.dumps(coeffs)}")
    typer.echo(f"algorithm: {result.algorithm}, k = {result.k}")
    if notes:
        typer.echo(f"verified: {'; '.join(notes)}")


@app.command("verify")
def verify_command(
    module_path: Path = typer.Option(..., "--module", help="Instance JSON file"),
    result_path: Path = typer.Option(..., "--result", help="JSON produced by 'charpoly --format json'"),
    endo: Optional[str] = typer.Option(None, "--endo", help="Endomorphism: JSON list of L elements or a file"),
    frobenius: bool = typer.Option(False, "--frobenius", help="Use the Frobenius endomorphism tau^n"),
) -> None:
    """Check a stored characteristic polynomial against an instance."""
    try:
        tower, module, file_endo = parse_instance(module_path)
        u = _resolve_endo(tower, module, file_endo, endo, frobenius)
        result = report_to_result(tower, load_report(result_path))
    except DOMAIN_ERRORS as e:
        _fail(_error_field(e), _message(e))

    if result.r != module.r:
        _fail("result", f"rank {result.r} does not match the module rank {module.r}", EXIT_MISMATCH)
    notes = _verify(module, u, result)
    typer.echo(f"ok: {'; '.join(notes)}")


@app.command("random")
def random_command(
    seed: int = typer.Option(..., "--seed", help="PRNG seed"),
    q: int = typer.Option(..., "--q", help="Field order q = p^e"),
    n: int = typer.Option(..., "--n", help="Degree of L over F_q"),
    r: int = typer.Option(..., "--r", help="Rank"),
    m: Optional[int] = typer.Option(None, "--m", help="Degree of gamma_x over F_q (divides n)"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write to a file instead of stdout"),
) -> None:
    """Generate a reproducible random instance with the Frobenius endomorphism."""
    try:
        tower, module, endomorphism = generate_instance(seed, q, n, r, m)
        if output is None:
            sys.stdout.write(dump_instance(tower, module, endomorphism))
        else:
            write_instance(output, tower, module, endomorphism)
    except DOMAIN_ERRORS as e:
        _fail(_error_field(e), _message(e))
    except OSError as e:
        _fail("output", f"cannot write {output}: {e.strerror or e}")


@app.command("bench")
def bench_command(
    grid: str = typer.Option(..., "--grid", help="'N1,N2,.../R1,R2,...'"),
    q: int = typer.Option(..., "--q", help="Field order q = p^e"),
    m: Optional[int] = typer.Option(None, "--m", help="Degree of gamma_x over F_q"),
    algorithm: str = typer.Option(DEFAULT_ALGORITHM, "--algorithm", help="auto, recurrence, euclidean or bsgs"),
    seed: int = typer.Option(0, "--seed", help="Base PRNG seed"),
) -> None:
    """Time CharPoly(tau^n) over a grid of (n, r) and print a CSV."""
    try:
        grid_n, grid_r = bench_module.parse_grid(grid)
        rows = bench_module.run_bench(grid_n, grid_r, q, m, algorithm, seed)
    except DOMAIN_ERRORS as e:
        _fail(_error_field(e), _message(e))
    bench_module.write_csv(rows, sys.stdout)
