"""Independent checks of characteristic polynomials by direct skew-polynomial evaluation."""

import logging
from typing import Optional

from . import fq_linalg, fq_poly
from .charpoly import CharPolyResult, InconsistentSystemError
from .drinfeld import DrinfeldModule
from .skew import SkewPoly, skew_add, skew_mul, skew_one

logger = logging.getLogger(__name__)


def _u_powers(module: DrinfeldModule, u: SkewPoly, upto: int) -> list[SkewPoly]:
    powers = [skew_one(module.tower)]
    for _ in range(upto):
        powers.append(skew_mul(module.tower, powers[-1], u))
    return powers


def verify_charpoly(module: DrinfeldModule, u: SkewPoly, result: CharPolyResult) -> bool:
    """True iff u^r + sum φ_{a_i} u^i is the zero skew polynomial."""
    tower = module.tower
    if result.r != module.r:
        return False
    powers = _u_powers(module, u, module.r)
    total = powers[module.r]
    for i, ai in enumerate(result.a):
        if ai:
            total = skew_add(tower, total, skew_mul(tower, module.phi_eval(ai), powers[i]))
    return total.is_zero


def oracle_unknowns(module: DrinfeldModule, u: SkewPoly) -> int:
    """Number of F_q unknowns a_{i,j} of the linear system."""
    d, r = u.deg, module.r
    return sum(d * (r - i) // r + 1 for i in range(r))


def charpoly_linear_system_oracle(module: DrinfeldModule, u: SkewPoly) -> Optional[CharPolyResult]:
    """
    Solve u^r + sum_{i,j} a_{i,j} φ_{x^j} u^i = 0 for the a_{i,j} in F_q.

    Each τ-coefficient and each t-coordinate gives one equation; the
    degrees of a_i are bounded by d(r - i)/r.

    Returns:
        The result when the solution is unique, None otherwise

    Raises:
        InconsistentSystemError: If the system has no solution
    """
    tower = module.tower
    K = tower.fq
    r = module.r
    d = u.deg
    bounds = [d * (r - i) // r for i in range(r)]
    phi_powers = module.phi_x_powers(max(bounds))
    u_powers = _u_powers(module, u, r)

    columns = []
    for i in range(r):
        for j in range(bounds[i] + 1):
            columns.append(skew_mul(tower, phi_powers[j], u_powers[i]))
    target = u_powers[r]

    length = max([len(target.coeffs)] + [len(col.coeffs) for col in columns])
    rows, rhs = [], []
    for power in range(length):
        for coord in range(tower.n):
            rows.append([col.coefficient(tower, power)[coord] for col in columns])
            rhs.append(K.neg(target.coefficient(tower, power)[coord]))

    logger.info(f"Linear-system oracle: {len(columns)} unknowns, {len(rows)} equations")
    solution = fq_linalg.solve(K, rows, rhs, len(columns))
    if not solution.consistent:
        raise InconsistentSystemError("linear system for the characteristic polynomial has no solution")
    if not solution.unique:
        logger.info("Linear-system oracle: solution not unique (minimal polynomial has lower degree)")
        return None

    a, offset = [], 0
    for i in range(r):
        size = bounds[i] + 1
        a.append(tuple(fq_poly.trim(solution.values[offset:offset + size])))
        offset += size
    return CharPolyResult(a=tuple(a), r=r, d=d, algorithm="linear-system")

