"""
Polynomials L[y] and the truncations W_k = L[y]/(y - γ_x)^k.

W_k elements are kept on the monomial basis 1, y, ..., y^(k-1), where the
Frobenius acts coefficient-wise.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from .drinfeld import DrinfeldModule
from .ff_tower import FieldTower, LElem

logger = logging.getLogger(__name__)

YPoly = tuple[LElem, ...]


class PrecisionMismatchError(ValueError):
    """Exception for mixing W_k elements of different precision."""
    pass


@dataclass(frozen=True, slots=True)
class WkElem:
    """Element of W_k: exactly k coefficients of 1, y, ..., y^(k-1)."""
    k: int
    coeffs: tuple[LElem, ...]


class YPolyRing:
    """L[y] with trimmed coefficient tuples."""

    def __init__(self, tower: FieldTower):
        self.tower = tower
        self.zero: YPoly = ()
        self.one: YPoly = (tower.one,)
        self.y: YPoly = (tower.zero, tower.one)

    def trim(self, f: Sequence[LElem]) -> YPoly:
        items = list(f)
        while items and not any(items[-1]):
            items.pop()
        return tuple(items)

    def const(self, c: LElem) -> YPoly:
        return self.trim([c])

    def add(self, f: YPoly, g: YPoly) -> YPoly:
        tower = self.tower
        if len(f) < len(g):
            f, g = g, f
        return self.trim([tower.add(a, g[i]) if i < len(g) else a for i, a in enumerate(f)])

    def sub(self, f: YPoly, g: YPoly) -> YPoly:
        tower = self.tower
        size = max(len(f), len(g))
        return self.trim([
            tower.sub(f[i] if i < len(f) else tower.zero, g[i] if i < len(g) else tower.zero)
            for i in range(size)
        ])

    def neg(self, f: YPoly) -> YPoly:
        return tuple(self.tower.neg(c) for c in f)

    def scale(self, c: LElem, f: YPoly) -> YPoly:
        return self.trim([self.tower.mul(c, a) for a in f])

    def mul(self, f: YPoly, g: YPoly) -> YPoly:
        if not f or not g:
            return ()
        tower = self.tower
        out = [tower.zero] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if tower.is_zero(a):
                continue
            for j, b in enumerate(g):
                if not tower.is_zero(b):
                    out[i + j] = tower.add(out[i + j], tower.mul(a, b))
        return self.trim(out)

    def twist(self, f: YPoly, t: int) -> YPoly:
        """f^[t]: Frobenius power t on every coefficient."""
        return tuple(self.tower.frobenius(c, t) for c in f)

    def degree(self, f: YPoly) -> int:
        return len(self.trim(f)) - 1

    def rem_monic(self, f: YPoly, modulus: Sequence[LElem]) -> list[LElem]:
        """Remainder of f by a monic modulus of degree k, padded to k coefficients."""
        tower = self.tower
        k = len(modulus) - 1
        rem = list(f)
        for i in range(len(rem) - 1, k - 1, -1):
            c = rem[i]
            if tower.is_zero(c):
                continue
            for j in range(k):
                if not tower.is_zero(modulus[j]):
                    rem[i - k + j] = tower.sub(rem[i - k + j], tower.mul(c, modulus[j]))
        rem = rem[:k]
        return rem + [tower.zero] * (k - len(rem))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YPolyRing):
            return NotImplemented
        return self.tower == other.tower

    def __hash__(self) -> int:
        return hash(("L[y]", self.tower))


class WkRing:
    """
    W_k = L[y]/μ with μ = (y - γ_x)^k.

    Args:
        tower: Field tower of the module
        gamma_x: Image γ_x of x in L
        k: Truncation order, k >= 1
    """

    def __init__(self, tower: FieldTower, gamma_x: LElem, k: int):
        if k < 1:
            raise PrecisionMismatchError(f"precision k must be >= 1, got {k}")
        self.tower = tower
        self.gamma_x = tuple(gamma_x)
        self.k = k
        self.ypoly = YPolyRing(tower)

        mu: YPoly = self.ypoly.one
        linear = (tower.neg(self.gamma_x), tower.one)
        for _ in range(k):
            mu = self.ypoly.mul(mu, linear)
        self.mu: YPoly = mu

        self.zero = WkElem(k, (tower.zero,) * k)
        self.one = self.reduce(self.ypoly.one)

    @classmethod
    def for_module(cls, module: DrinfeldModule, k: int) -> "WkRing":
        return cls(module.tower, module.gamma_x, k)

    def _check(self, *elements: WkElem) -> None:
        for a in elements:
            if a.k != self.k:
                raise PrecisionMismatchError(f"W_{a.k} element used in W_{self.k}")

    def reduce(self, f: YPoly) -> WkElem:
        """f mod μ on the monomial basis."""
        return WkElem(self.k, tuple(self.ypoly.rem_monic(f, self.mu)))

    def lift(self, a: WkElem) -> YPoly:
        self._check(a)
        return self.ypoly.trim(a.coeffs)

    def const(self, c: LElem) -> WkElem:
        return self.reduce((tuple(c),))

    def add(self, a: WkElem, b: WkElem) -> WkElem:
        self._check(a, b)
        tower = self.tower
        return WkElem(self.k, tuple(tower.add(x, y) for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a: WkElem, b: WkElem) -> WkElem:
        self._check(a, b)
        tower = self.tower
        return WkElem(self.k, tuple(tower.sub(x, y) for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: WkElem) -> WkElem:
        self._check(a)
        return WkElem(self.k, tuple(self.tower.neg(x) for x in a.coeffs))

    def mul(self, a: WkElem, b: WkElem) -> WkElem:
        self._check(a, b)
        return self.reduce(self.ypoly.mul(a.coeffs, b.coeffs))

    def scale(self, c: LElem, a: WkElem) -> WkElem:
        self._check(a)
        return WkElem(self.k, tuple(self.tower.mul(c, x) for x in a.coeffs))

    def is_zero(self, a: WkElem) -> bool:
        return not any(any(c) for c in a.coeffs)

    def twist(self, a: WkElem, t: int) -> WkElem:
        """Coefficient-wise Frobenius; maps W_k for γ_x to W_k for γ_x^[t]."""
        return WkElem(self.k, tuple(self.tower.frobenius(c, t) for c in a.coeffs))

    def shifted_modulus(self, t: int) -> YPoly:
        """μ^[-t] = (y - γ_x^[-t])^k."""
        return self.ypoly.twist(self.mu, -t)

    def frobenius_shift_reduce(self, f: YPoly, t: int, modulus: Optional[YPoly] = None) -> WkElem:
        """
        f^[t] mod μ computed as (f mod μ^[-t])^[t].

        Args:
            f: Polynomial in L[y]
            t: Frobenius shift
            modulus: Precomputed shifted_modulus(t), reused across a matrix

        Returns:
            The reduction of f^[t] in W_k
        """
        if modulus is None:
            modulus = self.shifted_modulus(t)
        remainder = self.ypoly.rem_monic(f, modulus)
        return WkElem(self.k, tuple(self.tower.frobenius(c, t) for c in remainder))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WkRing):
            return NotImplemented
        return (self.tower, self.gamma_x, self.k) == (other.tower, other.gamma_x, other.k)

    def __hash__(self) -> int:
        return hash((self.tower, self.gamma_x, self.k))

    def __repr__(self) -> str:
        return f"WkRing(k={self.k}, n={self.tower.n})"


def wk_reduce(module: DrinfeldModule, f: YPoly, k: int) -> WkElem:
    return WkRing.for_module(module, k).reduce(f)


def wk_add(module: DrinfeldModule, a: WkElem, b: WkElem) -> WkElem:
    if a.k != b.k:
        raise PrecisionMismatchError(f"cannot add W_{a.k} and W_{b.k} elements")
    return WkRing.for_module(module, a.k).add(a, b)


def wk_mul(module: DrinfeldModule, a: WkElem, b: WkElem) -> WkElem:
    if a.k != b.k:
        raise PrecisionMismatchError(f"cannot multiply W_{a.k} and W_{b.k} elements")
    return WkRing.for_module(module, a.k).mul(a, b)


def frobenius_shift_reduce(module: DrinfeldModule, f: YPoly, t: int, k: int) -> WkElem:
    return WkRing.for_module(module, k).frobenius_shift_reduce(f, t)
