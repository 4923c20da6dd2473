"""Descent from W_k to F_q[y]/(𝔭(y)^k): the Hensel root x̂, the map χ_k and the a_0 norm formula."""

import logging
from typing import Optional

from . import fq_poly
from .drinfeld import DrinfeldModule
from .ff_tower import SubfieldDecomposition
from .wk_ring import PrecisionMismatchError, WkElem

logger = logging.getLogger(__name__)


class DescentError(ValueError):
    """Exception for descent steps that do not apply to the given module."""
    pass


def p_power_modulus(decomp: SubfieldDecomposition, k: int) -> fq_poly.PolyModulus:
    """The modulus 𝔭(y)^k."""
    K = decomp.tower.fq
    return fq_poly.PolyModulus(K, fq_poly.power(K, decomp.p_poly, k))


def hensel_lift_root(decomp: SubfieldDecomposition, k: int) -> fq_poly.Poly:
    """
    Root x̂ of 𝔭 in F_q[y]/(𝔭(y)^k) with x̂ ≡ y mod 𝔭(y).

    Newton steps x̂ ← x̂ - 𝔭(x̂)/𝔭'(x̂) double the precision each time.

    Args:
        decomp: Subfield decomposition holding 𝔭
        k: Precision, k >= 1

    Returns:
        x̂ as a polynomial in y of degree < m*k
    """
    if k < 1:
        raise PrecisionMismatchError(f"precision k must be >= 1, got {k}")
    K = decomp.tower.fq
    p_poly = list(decomp.p_poly)
    modulus = p_power_modulus(decomp, k)
    root = fq_poly.trim(modulus.reduce([0, 1]))
    slope_poly = fq_poly.derivative(K, p_poly)

    precision = 1
    while precision < k:
        value = fq_poly.compose_mod(K, p_poly, root, modulus)
        slope = fq_poly.compose_mod(K, slope_poly, root, modulus)
        g, inverse, _ = fq_poly.xgcd(K, slope, modulus.poly)
        if g != [1]:
            raise DescentError("p'(x̂) is not a unit modulo p(y)^k")
        root = fq_poly.trim(modulus.reduce(fq_poly.sub(K, root, modulus.mulmod(value, inverse))))
        precision *= 2
    return root


def chi_k(module: DrinfeldModule, c: WkElem, k: int, xhat: Optional[fq_poly.Poly] = None) -> fq_poly.Poly:
    """
    Map a W_k element to F_q[y]/(𝔭(y)^k).

    Every y-coefficient is rewritten on the basis γ_x^i t^j, x is replaced
    by x̂ and the coefficient of t^0 is kept.

    Args:
        module: Drinfeld module defining W_k
        c: Element of W_k
        k: Precision of c
        xhat: Precomputed hensel_lift_root(module.decomp, k)

    Returns:
        Residue modulo 𝔭(y)^k, trimmed
    """
    if c.k != k:
        raise PrecisionMismatchError(f"chi_k called with k={k} on a W_{c.k} element")
    decomp = module.decomp
    K = decomp.tower.fq
    if xhat is None:
        xhat = hensel_lift_root(decomp, k)
    modulus = p_power_modulus(decomp, k)

    result: fq_poly.Poly = []
    y_power: fq_poly.Poly = [1]
    y = fq_poly.trim(modulus.reduce([0, 1]))
    for cj in c.coeffs:
        if any(cj):
            block = decomp.alpha_grouped(cj)[0]
            value = fq_poly.compose_mod(K, block, xhat, modulus)
            result = fq_poly.add(K, result, modulus.mulmod(value, y_power))
        y_power = fq_poly.trim(modulus.mulmod(y_power, y))
    return fq_poly.trim(modulus.reduce(result))


def a0_prime_field(module: DrinfeldModule) -> fq_poly.Poly:
    """
    Constant coefficient of CharPoly(τ^n) when m = n.

    a_0 = (-1)^(n(r+1)+r) · N_{L/F_q}(Δ_r)^(-1) · 𝔭

    Raises:
        DescentError: If 𝔭 has degree m < n
    """
    tower = module.tower
    if not module.is_prime_field:
        raise DescentError(f"a0 norm formula needs m = n, got m={module.m}, n={tower.n}")
    K = tower.fq
    n, r = tower.n, module.r
    scalar = K.inv(tower.norm(module.deltas[-1]))
    if (n * (r + 1) + r) % 2:
        scalar = K.neg(scalar)
    return fq_poly.scale(K, scalar, module.p_poly)
