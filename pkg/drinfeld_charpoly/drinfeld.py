"""Drinfeld modules φ: F_q[x] → L{τ} given by φ_x = γ_x + Δ_1 τ + ... + Δ_r τ^r."""

import logging
from typing import Sequence

from . import fq_poly
from .ff_tower import FieldTower, LElem
from .skew import SkewPoly, skew_add, skew_monomial, skew_mul, skew_scale

logger = logging.getLogger(__name__)

PHI_EVAL_METHODS = ("horner", "recurrence")


class DrinfeldModuleError(ValueError):
    """Exception for invalid Drinfeld module data."""
    pass


class DrinfeldModule:
    """
    A rank-r Drinfeld module over L.

    The subfield decomposition of L over F_q(γ_x) is computed eagerly, so
    𝔭, m and g are available as attributes.
    """

    def __init__(self, tower: FieldTower, gamma_x: Sequence[int], deltas: Sequence[Sequence[int]]):
        if not deltas:
            raise DrinfeldModuleError("delta must contain at least one coefficient")
        if not tower.contains(gamma_x):
            raise DrinfeldModuleError(f"gamma_x must be an element of L (length {tower.n})")
        for index, delta in enumerate(deltas, start=1):
            if not tower.contains(delta):
                raise DrinfeldModuleError(f"Delta_{index} must be an element of L (length {tower.n})")
        if tower.is_zero(tuple(deltas[-1])):
            raise DrinfeldModuleError(f"Delta_r must be nonzero (r = {len(deltas)})")

        self.tower = tower
        self.gamma_x: LElem = tuple(gamma_x)
        self.deltas: tuple[LElem, ...] = tuple(tuple(d) for d in deltas)
        self.r = len(self.deltas)
        self.phi_x = SkewPoly.from_coeffs((self.gamma_x,) + self.deltas)

        self.decomp = tower.subfield_decomposition(self.gamma_x)
        self.p_poly = self.decomp.p_poly
        self.m = self.decomp.m

        self.delta_r_inverse = tower.inv(self.deltas[-1])
        # Λ_i = -Δ_i / Δ_r with Δ_0 = γ_x
        self.lambdas: tuple[LElem, ...] = tuple(
            tower.neg(tower.mul(d, self.delta_r_inverse)) for d in (self.gamma_x,) + self.deltas[:-1]
        )
        logger.info(f"Drinfeld module: rank r={self.r}, n={tower.n}, m={self.m}")

    @property
    def rank(self) -> int:
        return self.r

    @property
    def n(self) -> int:
        return self.tower.n

    @property
    def is_prime_field(self) -> bool:
        return self.m == self.tower.n

    def _constant(self, c: int) -> SkewPoly:
        return SkewPoly.from_coeffs([self.tower.from_fq(c)])

    def phi_eval(self, a: Sequence[int], method: str = "horner") -> SkewPoly:
        """
        Evaluate φ_a for a in F_q[x].

        Args:
            a: Little-endian coefficients of a (F_q codes)
            method: "horner" (repeated products by φ_x) or "recurrence"
                (coefficient recurrence for φ_{x^i})

        Returns:
            φ_a as a skew polynomial of τ-degree r·deg a
        """
        a = fq_poly.trim(a)
        if method == "horner":
            result = SkewPoly()
            for c in reversed(a):
                result = skew_mul(self.tower, result, self.phi_x)
                if c:
                    result = skew_add(self.tower, result, self._constant(c))
            return result
        if method == "recurrence":
            result = SkewPoly()
            for i, power in enumerate(self.phi_x_powers(len(a) - 1)):
                if a[i]:
                    term = skew_scale(self.tower, self.tower.from_fq(a[i]), power)
                    result = skew_add(self.tower, result, term)
            return result
        raise DrinfeldModuleError(f"unknown phi_eval method {method!r}; expected one of {PHI_EVAL_METHODS}")

    def phi_x_powers(self, upto: int) -> list[SkewPoly]:
        """
        φ_{x^0}, ..., φ_{x^upto} by the coefficient recurrence.

        f_{i+1,j} = γ_x^[j] f_{i,j} + sum_{s=1..r} Δ_s^[j-s] f_{i,j-s}
        """
        tower = self.tower
        coefficients = (self.gamma_x,) + self.deltas
        current = [tower.one]
        powers = [SkewPoly.from_coeffs(current)]
        for _ in range(upto):
            nxt = []
            for j in range(len(current) + self.r):
                acc = tower.zero
                for s, coeff in enumerate(coefficients):
                    if 0 <= j - s < len(current) and not tower.is_zero(current[j - s]):
                        acc = tower.add(acc, tower.mul(current[j - s], tower.frobenius(coeff, j - s)))
                nxt.append(acc)
            current = nxt
            powers.append(SkewPoly.from_coeffs(current))
        return powers

    def gamma_eval(self, a: Sequence[int]) -> LElem:
        """γ(a) = a(γ_x) in L."""
        tower = self.tower
        acc = tower.zero
        for c in reversed(fq_poly.trim(a)):
            acc = tower.add(tower.mul(acc, self.gamma_x), tower.from_fq(c))
        return acc

    def is_endomorphism(self, u: SkewPoly) -> bool:
        """True iff u commutes with φ_x."""
        return skew_mul(self.tower, u, self.phi_x) == skew_mul(self.tower, self.phi_x, u)

    def frobenius_endo(self) -> SkewPoly:
        """τ^n."""
        return skew_monomial(self.tower, self.tower.one, self.tower.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DrinfeldModule):
            return NotImplemented
        return (self.tower, self.gamma_x, self.deltas) == (other.tower, other.gamma_x, other.deltas)

    def __hash__(self) -> int:
        return hash((self.tower, self.gamma_x, self.deltas))

    def __repr__(self) -> str:
        return f"DrinfeldModule(q={self.tower.q}, n={self.tower.n}, r={self.r}, m={self.m})"


def drinfeld_new(tower: FieldTower, gamma_x: Sequence[int], deltas: Sequence[Sequence[int]]) -> DrinfeldModule:
    return DrinfeldModule(tower, gamma_x, deltas)
