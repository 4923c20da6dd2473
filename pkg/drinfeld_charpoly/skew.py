"""Skew polynomials L{τ} with the commutation rule τ·c = c^q·τ."""

import logging
from dataclasses import dataclass
from typing import Iterable

from .ff_tower import FieldTower, LElem

logger = logging.getLogger(__name__)


class SkewDivisionError(ZeroDivisionError):
    """Exception for right division by the zero skew polynomial."""
    pass


@dataclass(frozen=True)
class SkewPoly:
    """
    Element of L{τ}; coeffs[i] is the coefficient of τ^i.

    Trailing zero coefficients are never stored, so the zero polynomial has
    no coefficients and degree -1.
    """
    coeffs: tuple[LElem, ...] = ()

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[LElem]) -> "SkewPoly":
        items = [tuple(c) for c in coeffs]
        while items and not any(items[-1]):
            items.pop()
        return cls(tuple(items))

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, tower: FieldTower, i: int) -> LElem:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return tower.zero


def skew_zero() -> SkewPoly:
    return SkewPoly()


def skew_one(tower: FieldTower) -> SkewPoly:
    return SkewPoly((tower.one,))


def skew_monomial(tower: FieldTower, c: LElem, i: int) -> SkewPoly:
    """c·τ^i."""
    return SkewPoly.from_coeffs([tower.zero] * i + [c])


def skew_add(tower: FieldTower, f: SkewPoly, g: SkewPoly) -> SkewPoly:
    size = max(len(f.coeffs), len(g.coeffs))
    return SkewPoly.from_coeffs(
        tower.add(f.coefficient(tower, i), g.coefficient(tower, i)) for i in range(size)
    )


def skew_neg(tower: FieldTower, f: SkewPoly) -> SkewPoly:
    return SkewPoly(tuple(tower.neg(c) for c in f.coeffs))


def skew_sub(tower: FieldTower, f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return skew_add(tower, f, skew_neg(tower, g))


def skew_scale(tower: FieldTower, c: LElem, f: SkewPoly) -> SkewPoly:
    """Left multiplication by a constant of L."""
    return SkewPoly.from_coeffs(tower.mul(c, fi) for fi in f.coeffs)


def skew_twist(tower: FieldTower, f: SkewPoly, t: int) -> SkewPoly:
    """f^[t]: the Frobenius power t applied to every coefficient."""
    return SkewPoly(tuple(tower.frobenius(c, t) for c in f.coeffs))


def skew_shift(tower: FieldTower, f: SkewPoly, i: int) -> SkewPoly:
    """τ^i·f."""
    if f.is_zero:
        return f
    return SkewPoly((tower.zero,) * i + skew_twist(tower, f, i).coeffs)


def skew_mul(tower: FieldTower, f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """
    Product f·g in L{τ}.

    Args:
        tower: Coefficient field
        f: Left factor
        g: Right factor

    Returns:
        Sum over i, j of f_i·g_j^[i]·τ^(i+j)
    """
    if f.is_zero or g.is_zero:
        return SkewPoly()
    out = [tower.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, fi in enumerate(f.coeffs):
        if tower.is_zero(fi):
            continue
        for j, gj in enumerate(g.coeffs):
            if tower.is_zero(gj):
                continue
            out[i + j] = tower.add(out[i + j], tower.mul(fi, tower.frobenius(gj, i)))
    return SkewPoly.from_coeffs(out)


def skew_right_divmod(tower: FieldTower, f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """
    Right Euclidean division f = quotient·g + remainder, deg remainder < deg g.

    Raises:
        SkewDivisionError: If g is zero
    """
    if g.is_zero:
        raise SkewDivisionError("right division by the zero skew polynomial")
    dg = g.deg
    if f.deg < dg:
        return SkewPoly(), f

    lead_inv = tower.inv(g.coeffs[-1])
    quotient = [tower.zero] * (f.deg - dg + 1)
    remainder = list(f.coeffs)
    for s in range(f.deg - dg, -1, -1):
        top = remainder[s + dg]
        if tower.is_zero(top):
            continue
        # c·τ^s·g has leading coefficient c·g_lead^[s]
        c = tower.mul(top, tower.frobenius(lead_inv, s))
        quotient[s] = c
        for j, gj in enumerate(g.coeffs):
            if not tower.is_zero(gj):
                remainder[s + j] = tower.sub(remainder[s + j], tower.mul(c, tower.frobenius(gj, s)))
    return SkewPoly.from_coeffs(quotient), SkewPoly.from_coeffs(remainder[:dg])


def skew_pow(tower: FieldTower, f: SkewPoly, exponent: int) -> SkewPoly:
    """f^exponent by binary powering; f^0 = 1."""
    if exponent < 0:
        raise ValueError("skew polynomial exponent must be >= 0")
    result = skew_one(tower)
    base = f
    while exponent:
        if exponent & 1:
            result = skew_mul(tower, result, base)
        exponent >>= 1
        if exponent:
            base = skew_mul(tower, base, base)
    return result


def skew_to_str(tower: FieldTower, f: SkewPoly) -> str:
    """Render as e.g. 't^2*τ^5 + (t^2 + 1)*τ + t + 1'."""
    if f.is_zero:
        return "0"
    terms = []
    for i in range(f.deg, -1, -1):
        c = f.coeffs[i]
        if tower.is_zero(c):
            continue
        coeff = tower.to_str(c)
        if i == 0:
            terms.append(coeff)
            continue
        monomial = "τ" if i == 1 else f"τ^{i}"
        if c == tower.one:
            terms.append(monomial)
        else:
            if " " in coeff:
                coeff = f"({coeff})"
            terms.append(f"{coeff}*{monomial}")
    return " + ".join(terms)
