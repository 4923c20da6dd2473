"""JSON instance files: parsing, writing and seeded generation."""

import json
import logging
import random
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from filelock import FileLock
from pydantic import ValidationError

from . import fq_poly
from .charpoly import CharPolyResult
from .config import FROBENIUS_TOKEN, INSTANCE_VERSION
from .drinfeld import DrinfeldModule, DrinfeldModuleError
from .ff_tower import FieldError, FieldTower, FqField, LElem
from .fq_field import is_prime, prime_power
from .schemas import CharPolyReport, InstanceFile
from .skew import SkewPoly

logger = logging.getLogger(__name__)

Instance = tuple[FieldTower, DrinfeldModule, Optional[SkewPoly]]


class InstanceError(ValueError):
    """Exception for invalid instance data, naming the offending field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


# Decoding

def _fq_code(K: FqField, value: Union[int, Sequence[int]], field: str) -> int:
    if isinstance(value, int):
        return value % K.p if K.e > 1 else value % K.q
    if len(value) > K.e:
        raise InstanceError(field, f"F_q element {list(value)} has more than e = {K.e} digits")
    return K.encode([d % K.p for d in value])


def _l_element(tower: FieldTower, values: Sequence[Any], field: str) -> LElem:
    if len(values) > tower.n:
        raise InstanceError(field, f"element of L has {len(values)} coefficients, at most n = {tower.n} allowed")
    codes = [_fq_code(tower.fq, v, field) for v in values]
    return tuple(codes + [0] * (tower.n - len(codes)))


def parse_endo(tower: FieldTower, value: Union[str, Sequence[Any]], field: str = "endo") -> SkewPoly:
    """Decode 'frobenius' or a list of tau-coefficients into a skew polynomial."""
    if value == FROBENIUS_TOKEN:
        return SkewPoly.from_coeffs([tower.zero] * tower.n + [tower.one])
    if isinstance(value, str):
        raise InstanceError(field, f"expected {FROBENIUS_TOKEN!r} or a list of L elements, got {value!r}")
    return SkewPoly.from_coeffs(_l_element(tower, c, f"{field}[{i}]") for i, c in enumerate(value))


def build_instance(data: InstanceFile) -> Instance:
    """Turn a validated schema object into field, module and endomorphism."""
    if not is_prime(data.p):
        raise InstanceError("p", f"{data.p} is not prime")
    if data.e > 1 and data.f is None:
        raise InstanceError("f", f"required when e = {data.e}")
    try:
        fq = FqField(data.p, data.e, data.f)
    except FieldError as e:
        raise InstanceError("f", str(e))

    try:
        tower = FieldTower(fq, [_fq_code(fq, c, "ell") for c in data.ell])
    except FieldError as e:
        raise InstanceError("ell", str(e))

    gamma_x = _l_element(tower, data.gamma_x, "gamma_x")
    deltas = [_l_element(tower, d, f"delta[{i}]") for i, d in enumerate(data.delta)]
    try:
        module = DrinfeldModule(tower, gamma_x, deltas)
    except DrinfeldModuleError as e:
        raise InstanceError("delta", str(e))

    endo = parse_endo(tower, data.endo) if data.endo is not None else None
    return tower, module, endo


def load_instance_text(text: str) -> Instance:
    """
    Parse instance JSON text.

    Raises:
        InstanceError: On malformed JSON, schema violations or invalid algebraic data
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError("file", f"invalid JSON: {e}")
    try:
        data = InstanceFile.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "file"
        raise InstanceError(field, first["msg"])
    return build_instance(data)


def parse_instance(path: Union[str, Path]) -> Instance:
    """Read and validate an instance file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InstanceError("file", f"cannot read {path}: {e.strerror or e}")
    tower, module, endo = load_instance_text(text)
    logger.info(f"Loaded instance {path}: q={tower.q}, n={tower.n}, r={module.r}")
    return tower, module, endo


# Encoding

def fq_value(K: FqField, code: int) -> Union[int, list[int]]:
    if K.e == 1:
        return code
    return fq_poly.trim(K.digits(code))


def l_value(tower: FieldTower, c: Sequence[int]) -> list[Union[int, list[int]]]:
    return [fq_value(tower.fq, code) for code in fq_poly.trim(c)]


def instance_to_dict(tower: FieldTower, module: DrinfeldModule, endo: Optional[SkewPoly] = None) -> dict:
    data: dict[str, Any] = {"version": INSTANCE_VERSION, "p": tower.p, "e": tower.e}
    if tower.e > 1:
        data["f"] = list(tower.f)
    data["ell"] = [fq_value(tower.fq, c) for c in tower.ell]
    data["gamma_x"] = l_value(tower, module.gamma_x)
    data["delta"] = [l_value(tower, d) for d in module.deltas]
    if endo is not None:
        if endo == module.frobenius_endo():
            data["endo"] = FROBENIUS_TOKEN
        else:
            data["endo"] = [l_value(tower, c) for c in endo.coeffs]
    return data


def dump_instance(tower: FieldTower, module: DrinfeldModule, endo: Optional[SkewPoly] = None) -> str:
    return json.dumps(instance_to_dict(tower, module, endo), indent=2) + "\n"


def write_instance(path: Union[str, Path], tower: FieldTower, module: DrinfeldModule,
                   endo: Optional[SkewPoly] = None) -> None:
    """Write an instance file under a file lock."""
    path = Path(path)
    lock_file = path.with_name(path.name + ".lock")
    with FileLock(str(lock_file)):
        try:
            with open(path, "w", encoding="utf-8") as f:
                f.write(dump_instance(tower, module, endo))
        except Exception as e:
            logger.error(f"Error writing instance {path}: {e}")
            raise
    logger.info(f"Wrote instance {path}")


def result_to_report(tower: FieldTower, result: CharPolyResult, verified: Optional[bool] = None) -> CharPolyReport:
    return CharPolyReport(
        p=tower.p,
        e=tower.e,
        r=result.r,
        d=result.d,
        a=[[fq_value(tower.fq, c) for c in ai] for ai in result.a],
        text=result.to_text(tower.fq),
        algorithm=result.algorithm,
        k=result.k,
        verified=verified,
    )


def report_to_result(tower: FieldTower, report: CharPolyReport) -> CharPolyResult:
    """Decode a report against the field it was computed over."""
    if (report.p, report.e) != (tower.p, tower.e):
        raise InstanceError("result", f"report is over F_{report.p}^{report.e}, instance over F_{tower.p}^{tower.e}")
    a = tuple(tuple(fq_poly.trim([_fq_code(tower.fq, c, "a") for c in ai])) for ai in report.a)
    return CharPolyResult(a=a, r=report.r, d=report.d, algorithm=report.algorithm, k=report.k)


def load_report(path: Union[str, Path]) -> CharPolyReport:
    path = Path(path)
    try:
        return CharPolyReport.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InstanceError("result", f"cannot read {path}: {e.strerror or e}")
    except ValidationError as e:
        first = e.errors()[0]
        raise InstanceError("result", f"{'.'.join(str(p) for p in first['loc'])}: {first['msg']}")


# Generation

def generate_instance(seed: int, q: int, n: int, r: int, m: Optional[int] = None,
                      endo: Optional[str] = FROBENIUS_TOKEN) -> Instance:
    """
    Seeded random instance.

    Args:
        seed: PRNG seed
        q: Field order q = p^e
        n: Degree of L over F_q
        r: Rank
        m: Degree of the minimal polynomial of gamma_x (divides n; default n)
        endo: 'frobenius' or None

    Returns:
        Tuple (tower, module, endomorphism)
    """
    try:
        p, e = prime_power(q)
    except FieldError as err:
        raise InstanceError("q", str(err))
    if n < 1:
        raise InstanceError("n", "must be >= 1")
    if r < 1:
        raise InstanceError("r", "must be >= 1")
    m = n if m is None else m
    if m < 1 or n % m:
        raise InstanceError("m", f"{m} does not divide n = {n}")

    rng = random.Random(seed)
    f = fq_poly.first_irreducible(FqField(p), e) if e > 1 else None
    fq = FqField(p, e, f)
    tower = FieldTower(fq, fq_poly.random_irreducible(fq, n, rng))

    # c^((q^n - 1)/(q^m - 1)) lies in the subfield of degree m
    exponent = (q ** n - 1) // (q ** m - 1)
    while True:
        gamma_x = tower.random_element(rng)
        if m < n:
            gamma_x = tower.pow(gamma_x, exponent)
        if tower.degree_over_fq(gamma_x) == m:
            break

    deltas = [tower.random_element(rng) for _ in range(r - 1)]
    last = tower.zero
    while tower.is_zero(last):
        last = tower.random_element(rng)
    deltas.append(last)

    module = DrinfeldModule(tower, gamma_x, deltas)
    endomorphism = module.frobenius_endo() if endo == FROBENIUS_TOKEN else None
    logger.info(f"Generated instance: seed={seed}, q={q}, n={n}, r={r}, m={m}")
    return tower, module, endomorphism
