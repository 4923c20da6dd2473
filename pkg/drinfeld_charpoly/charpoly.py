"""
Characteristic polynomials of endomorphisms via the truncated cohomology W_k^r.

Matrices use the descending basis (τ^r, ..., τ): row a holds the
coordinates of τ^(r-a)·u and column b the coefficient of τ^(r-b). With this
order the starting stack [κ_r; ...; κ_1] is the identity, so the matrix of
τ^n is the plain product A_n···A_1 of companion matrices.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import fq_poly
from .config import ALGORITHMS
from .descent import a0_prime_field, chi_k, hensel_lift_root
from .drinfeld import DrinfeldModule
from .ff_tower import FqField
from .linalg import RingMatrix, berkowitz_charpoly, identity, mat_map, mat_mul, product_chain
from .skew import SkewPoly, skew_mul, skew_right_divmod, skew_shift, skew_twist
from .wk_ring import WkElem, WkRing, YPolyRing

logger = logging.getLogger(__name__)

KappaVector = tuple[WkElem, ...]


class CharPolyError(ValueError):
    """Base exception for characteristic polynomial computations."""
    pass


class NotAnEndomorphismError(CharPolyError):
    """The skew polynomial does not commute with φ_x."""
    pass


class AlgorithmError(CharPolyError):
    """Unknown algorithm, or bsgs requested for u other than τ^n."""
    pass


class PrecisionError(CharPolyError):
    """Requested k is below the minimum precision."""
    pass


class InconsistentSystemError(CharPolyError):
    """The linear-system oracle found no solution."""
    pass


@dataclass(frozen=True)
class PrecisionPlan:
    """Truncation order for one computation."""
    k: int
    d: int
    prime_field_frobenius_shortcut: bool
    minimum_k: int


@dataclass(frozen=True)
class CharPolyResult:
    """
    Z^r + sum a_i Z^i with a_i in F_q[x].

    a[i] is the little-endian coefficient tuple of a_i. The algorithm and k
    that produced the result do not take part in equality.
    """
    a: tuple[tuple[int, ...], ...]
    r: int
    d: int
    algorithm: str = field(default="", compare=False)
    k: int = field(default=0, compare=False)

    def degree_bound(self, i: int) -> int:
        """Largest allowed degree of a_i: floor(d(r - i)/r)."""
        return self.d * (self.r - i) // self.r

    def satisfies_degree_bounds(self) -> bool:
        return all(len(ai) - 1 <= self.degree_bound(i) for i, ai in enumerate(self.a))

    def to_text(self, fq: FqField) -> str:
        """Render as e.g. 'Z^4 + x*Z^2 + x*Z + x^3 + x^2 + 1'."""
        terms = ["Z" if self.r == 1 else f"Z^{self.r}"]
        for i in range(self.r - 1, -1, -1):
            ai = self.a[i]
            if not ai:
                continue
            coeff = fq_poly.to_str(fq, ai, "x")
            if i == 0:
                terms.append(coeff)
                continue
            monomial = "Z" if i == 1 else f"Z^{i}"
            if list(ai) == [1]:
                terms.append(monomial)
            else:
                if " " in coeff:
                    coeff = f"({coeff})"
                terms.append(f"{coeff}*{monomial}")
        return " + ".join(terms)


def plan_precision(module: DrinfeldModule, u: SkewPoly, k: Optional[int] = None) -> PrecisionPlan:
    """
    Choose k with k*m >= deg u + 1, or k = 1 for τ^n over the prime field.

    Raises:
        PrecisionError: If an explicit k is below the minimum
    """
    d = u.deg
    required = (d + module.m) // module.m
    shortcut_allowed = module.is_prime_field and u == module.frobenius_endo()
    minimum = 1 if shortcut_allowed else required
    if k is None:
        k = minimum
    elif k < minimum:
        raise PrecisionError(
            f"k = {k} is below the minimum precision {minimum} "
            f"(k*m must exceed deg u = {d} with m = {module.m})"
        )
    shortcut = shortcut_allowed and k < required
    return PrecisionPlan(k=k, d=d, prime_field_frobenius_shortcut=shortcut, minimum_k=minimum)


def base_companion(module: DrinfeldModule, t: int = 0, ypoly: Optional[YPolyRing] = None) -> RingMatrix:
    """
    Companion matrix over L[y] for the twist t; t = 0 gives B.

    First row (Λ_{r-1}^[t], ..., Λ_1^[t], Λ_0^[t] + y/Δ_r^[t]), shifted identity below.
    """
    tower = module.tower
    ypoly = ypoly or YPolyRing(tower)
    r = module.r
    first = [ypoly.const(tower.frobenius(module.lambdas[r - 1 - j], t)) for j in range(r - 1)]
    first.append(ypoly.trim([
        tower.frobenius(module.lambdas[0], t),
        tower.frobenius(module.delta_r_inverse, t),
    ]))
    rows = [first] + [
        [ypoly.one if col == row - 1 else ypoly.zero for col in range(r)] for row in range(1, r)
    ]
    return RingMatrix.from_rows(ypoly, rows)


def companion_matrix(module: DrinfeldModule, t: int, k: int, ring: Optional[WkRing] = None) -> RingMatrix:
    """A_t reduced into W_k."""
    ring = ring or WkRing.for_module(module, k)
    return mat_map(base_companion(module, t, ring.ypoly), ring.reduce, ring)


def kappa_sequence(module: DrinfeldModule, upto: int, k: int, ring: Optional[WkRing] = None) -> list[KappaVector]:
    """
    κ̄_1, ..., κ̄_upto in W_k, each in descending basis order.

    κ_(t+r) = sum_{i=1..r-1} Λ_i^[t] κ_(t+i) + (Λ_0^[t] + y/Δ_r^[t]) κ_t
    """
    tower = module.tower
    r = module.r
    if upto < r:
        raise CharPolyError(f"kappa_sequence needs upto >= r = {r}, got {upto}")
    ring = ring or WkRing.for_module(module, k)

    kappas: list[KappaVector] = [
        tuple(ring.one if b == r - t else ring.zero for b in range(r)) for t in range(1, r + 1)
    ]
    for t in range(1, upto - r + 1):
        lambdas_t = [tower.frobenius(lam, t) for lam in module.lambdas]
        lead = ring.reduce(ring.ypoly.trim([lambdas_t[0], tower.frobenius(module.delta_r_inverse, t)]))
        new = []
        for b in range(r):
            acc = ring.mul(lead, kappas[t - 1][b])
            for i in range(1, r):
                if not tower.is_zero(lambdas_t[i]):
                    acc = ring.add(acc, ring.scale(lambdas_t[i], kappas[t + i - 1][b]))
            new.append(acc)
        kappas.append(tuple(new))
    return kappas


def endo_matrix_recurrence(module: DrinfeldModule, u: SkewPoly, k: int, banded: bool = False,
                           ring: Optional[WkRing] = None) -> RingMatrix:
    """
    Matrix of u on W_k^r from the κ-recurrence.

    Row a is sum_j u_j^[i] κ̄_(i+j) with i = r - a. With banded=True the
    rows are formed as one product of the banded coefficient matrix with
    the stacked κ̄ vectors.
    """
    tower = module.tower
    r = module.r
    ring = ring or WkRing.for_module(module, k)
    d = max(u.deg, 0)
    kappas = kappa_sequence(module, d + r, k, ring)

    if banded:
        width = d + r
        band = []
        for a in range(r):
            i = r - a
            row = [ring.zero] * width
            for j, uj in enumerate(u.coeffs):
                row[width - (i + j)] = ring.const(tower.frobenius(uj, i))
            band.append(row)
        stacked = [kappas[width - 1 - c] for c in range(width)]
        return mat_mul(RingMatrix.from_rows(ring, band), RingMatrix.from_rows(ring, stacked))

    rows = []
    for a in range(r):
        i = r - a
        acc = [ring.zero] * r
        for j, uj in enumerate(u.coeffs):
            if tower.is_zero(uj):
                continue
            c = tower.frobenius(uj, i)
            acc = [ring.add(x, ring.scale(c, y)) for x, y in zip(acc, kappas[i + j - 1])]
        rows.append(acc)
    return RingMatrix.from_rows(ring, rows)


def _phi_x_doublings(module: DrinfeldModule, size: int) -> dict[int, SkewPoly]:
    """φ_x^h for every power of two h < size."""
    powers = {}
    h, current = 1, module.phi_x
    while h < size:
        powers[h] = current
        current = skew_mul(module.tower, current, current)
        h *= 2
    return powers


def decompose_phi_basis(module: DrinfeldModule, f: SkewPoly,
                        doublings: Optional[dict[int, SkewPoly]] = None) -> list[SkewPoly]:
    """
    Write f = sum_s f_s φ_x^s with deg f_s < r.

    The split uses right division by φ_x^(K/2), where K is the least
    power of two with deg f < K*r. Trailing zero parts are dropped.
    """
    r = module.r
    size = 1
    while f.deg >= size * r:
        size *= 2
    if doublings is None or any(h not in doublings for h in _halves(size)):
        doublings = _phi_x_doublings(module, size)

    def split(g: SkewPoly, block: int) -> list[SkewPoly]:
        if block == 1:
            return [g]
        half = block // 2
        quotient, remainder = skew_right_divmod(module.tower, g, doublings[half])
        return split(remainder, half) + split(quotient, half)

    parts = split(f, size)
    while len(parts) > 1 and parts[-1].is_zero:
        parts.pop()
    return parts


def _halves(size: int) -> list[int]:
    out, h = [], 1
    while h < size:
        out.append(h)
        h *= 2
    return out


def endo_matrix_euclidean(module: DrinfeldModule, u: SkewPoly, k: int, ring: Optional[WkRing] = None) -> RingMatrix:
    """
    Matrix of u on W_k^r by division by powers of φ_x.

    τ^i u = τ·g with g = F^[-1] where τ^i u = F·τ; then
    g = sum_s g_s φ_x^s and τ^i u = sum_s y^s * (g_s^[1] τ).
    """
    tower = module.tower
    r = module.r
    ring = ring or WkRing.for_module(module, k)
    doublings = _phi_x_doublings(module, 2 * (max(u.deg, 0) // r + 2))

    rows = []
    for a in range(r):
        i = r - a
        shifted = skew_shift(tower, u, i)
        g = skew_twist(tower, SkewPoly.from_coeffs(shifted.coeffs[1:]), -1)
        parts = decompose_phi_basis(module, g, doublings)
        row = []
        for b in range(r):
            j = r - b
            y_coeffs = [tower.frobenius(part.coefficient(tower, j - 1), 1) for part in parts]
            row.append(ring.reduce(ring.ypoly.trim(y_coeffs)))
        rows.append(row)
    return RingMatrix.from_rows(ring, rows)


def frobenius_matrix_bsgs(module: DrinfeldModule, k: int, ring: Optional[WkRing] = None) -> RingMatrix:
    """
    Matrix of τ^n on W_k^r by baby steps and Frobenius-shifted giant steps.

    With n* = ceil(sqrt(n k)), n = n1 n* + n0:
      C = B^[n0+n*]···B^[n0+1] over L[y],
      C̄0 = A_n0···A_1 in W_k,
      Ā = C̄^[(n1-1)n*]···C̄^[0]·C̄0, each giant from frobenius_shift_reduce.
    """
    tower = module.tower
    r = module.r
    n = tower.n
    ring = ring or WkRing.for_module(module, k)

    n_star = math.isqrt(n * k - 1) + 1
    n1, n0 = divmod(n, n_star)
    logger.info(f"BSGS: n={n}, k={k}, n*={n_star}, n1={n1}, n0={n0}")

    if n0:
        c0 = product_chain([companion_matrix(module, t, k, ring) for t in range(1, n0 + 1)])
    else:
        c0 = identity(ring, r)
    if n1 == 0:
        return c0

    babies = [base_companion(module, n0 + j, ring.ypoly) for j in range(1, n_star + 1)]
    giant = product_chain(babies)

    chain = [c0]
    for i in range(n1):
        shift = i * n_star
        modulus = ring.shifted_modulus(shift)
        chain.append(mat_map(
            giant, lambda f, s=shift, mod=modulus: ring.frobenius_shift_reduce(f, s, mod), ring
        ))
    return product_chain(chain)


def endo_matrix(module: DrinfeldModule, u: SkewPoly, algorithm: str, k: int,
                ring: Optional[WkRing] = None) -> RingMatrix:
    """Dispatch to the matrix construction for a resolved algorithm name."""
    if algorithm == "recurrence":
        return endo_matrix_recurrence(module, u, k, ring=ring)
    if algorithm == "euclidean":
        return endo_matrix_euclidean(module, u, k, ring=ring)
    if algorithm == "bsgs":
        if u != module.frobenius_endo():
            raise AlgorithmError("bsgs only applies to the Frobenius endomorphism τ^n")
        return frobenius_matrix_bsgs(module, k, ring=ring)
    raise AlgorithmError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")


def charpoly_endomorphism(module: DrinfeldModule, u: SkewPoly, algorithm: str = "auto",
                          k: Optional[int] = None, check_endomorphism: bool = True) -> CharPolyResult:
    """
    Characteristic polynomial of an endomorphism u.

    Args:
        module: Drinfeld module
        u: Endomorphism as a skew polynomial, nonzero
        algorithm: auto, recurrence, euclidean or bsgs
        k: Precision override (at least the planned minimum)
        check_endomorphism: Verify that u commutes with φ_x

    Returns:
        CharPolyResult with a_0, ..., a_{r-1}

    Raises:
        CharPolyError: For u = 0, a non-endomorphism, bsgs on u != τ^n
            or k below the minimum
    """
    if algorithm not in ALGORITHMS:
        raise AlgorithmError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    if u.is_zero:
        raise CharPolyError("the endomorphism must be nonzero")
    is_frobenius = u == module.frobenius_endo()
    if algorithm == "auto":
        algorithm = "bsgs" if is_frobenius else "recurrence"
    if algorithm == "bsgs" and not is_frobenius:
        raise AlgorithmError("bsgs only applies to the Frobenius endomorphism τ^n")
    if check_endomorphism and not is_frobenius and not module.is_endomorphism(u):
        raise NotAnEndomorphismError("u does not commute with phi_x")

    plan = plan_precision(module, u, k)
    logger.info(
        f"CharPoly: algorithm={algorithm}, d={plan.d}, k={plan.k}, "
        f"prime_field_shortcut={plan.prime_field_frobenius_shortcut}"
    )

    ring = WkRing.for_module(module, plan.k)
    matrix = endo_matrix(module, u, algorithm, plan.k, ring)
    coefficients = berkowitz_charpoly(matrix)

    xhat = hensel_lift_root(module.decomp, plan.k)
    a = [tuple(chi_k(module, coefficients[i], plan.k, xhat)) for i in range(module.r)]
    if plan.prime_field_frobenius_shortcut:
        a[0] = tuple(a0_prime_field(module))

    result = CharPolyResult(a=tuple(a), r=module.r, d=plan.d, algorithm=algorithm, k=plan.k)
    if not result.satisfies_degree_bounds():
        logger.warning("Characteristic polynomial violates the degree bounds deg a_i <= d(r-i)/r")
    return result


def charpoly_frobenius(module: DrinfeldModule, algorithm: str = "auto", k: Optional[int] = None) -> CharPolyResult:
    return charpoly_endomorphism(module, module.frobenius_endo(), algorithm, k)


def result_from_coefficients(a: Sequence[Sequence[int]], r: int, d: int) -> CharPolyResult:
    return CharPolyResult(a=tuple(tuple(fq_poly.trim(ai)) for ai in a), r=r, d=d)
