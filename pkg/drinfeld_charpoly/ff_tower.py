"""
Field tower F_p ⊆ F_q ⊆ L = F_q[t]/(ℓ(t)).

Polynomials are little-endian everywhere in this package: index i holds the
coefficient of t^i (or x^i, y^i, τ^i). An element of L is a tuple of exactly
n F_q codes, always reduced modulo ℓ.
"""

import logging
import random
from typing import Optional, Sequence

from . import fq_linalg, fq_poly
from .fq_field import FieldError, FqField
from .instrumentation import bump_frobenius, bump_l_mul

logger = logging.getLogger(__name__)

LElem = tuple[int, ...]

__all__ = ["FieldError", "FieldTower", "FqField", "LElem", "SubfieldDecomposition", "make_field_tower"]


class FieldTower:
    """
    L = F_q[t]/(ℓ) with Barrett reduction and a precomputed Frobenius table.

    The table holds s_j = t^(q^j) mod ℓ for 0 <= j < n, so c^[j] is the
    composition c(s_j) evaluated by Horner's rule.
    """

    def __init__(self, fq: FqField, ell: Sequence[int]):
        ell = fq_poly.trim([c % fq.q for c in ell])
        if not ell:
            raise FieldError("ell must be nonzero")
        if len(ell) < 2:
            raise FieldError("ell must have degree >= 1")
        if ell[-1] != 1:
            raise FieldError("ell must be monic")
        if not fq_poly.is_irreducible(fq, ell):
            raise FieldError(f"ell = {fq_poly.to_str(fq, ell, 't')} is reducible over F_{fq.q}")

        self.fq = fq
        self.p = fq.p
        self.e = fq.e
        self.q = fq.q
        self.f = fq.modulus
        self.ell: LElem = tuple(ell)
        self.n = len(ell) - 1
        self._modulus = fq_poly.PolyModulus(fq, ell)

        self.zero: LElem = (0,) * self.n
        self.one: LElem = self.element([1])
        self.gen: LElem = self.element([0, 1])

        table = [self.gen]
        for _ in range(1, self.n):
            table.append(self.pow(table[-1], self.q))
        self._frob_table = tuple(table)
        self.frob_image: LElem = self.pow(self.gen, self.q)

        logger.info(f"Built field tower: q={self.q} (p={self.p}, e={self.e}), n={self.n}")

    # Construction and predicates

    def element(self, coeffs: Sequence[int]) -> LElem:
        """Reduce an arbitrary t-polynomial over F_q into L."""
        reduced = self._modulus.reduce([c % self.q for c in coeffs])
        return tuple(reduced)

    def from_fq(self, c: int) -> LElem:
        return (c,) + (0,) * (self.n - 1)

    def is_zero(self, a: LElem) -> bool:
        return not any(a)

    def is_in_fq(self, a: LElem) -> bool:
        return not any(a[1:])

    def contains(self, a: Sequence[int]) -> bool:
        return len(a) == self.n and all(0 <= c < self.q for c in a)

    def random_element(self, rng: Optional[random.Random] = None) -> LElem:
        rng = rng or random.Random()
        return tuple(rng.randrange(self.q) for _ in range(self.n))

    # Ring operations

    def add(self, a: LElem, b: LElem) -> LElem:
        K = self.fq
        return tuple(K.add(x, y) for x, y in zip(a, b))

    def sub(self, a: LElem, b: LElem) -> LElem:
        K = self.fq
        return tuple(K.sub(x, y) for x, y in zip(a, b))

    def neg(self, a: LElem) -> LElem:
        K = self.fq
        return tuple(K.neg(x) for x in a)

    def scale(self, c: int, a: LElem) -> LElem:
        """Multiply by a scalar from F_q."""
        K = self.fq
        return tuple(K.mul(c, x) for x in a)

    def mul(self, a: LElem, b: LElem) -> LElem:
        bump_l_mul()
        if self.n == 1:
            return (self.fq.mul(a[0], b[0]),)
        return tuple(self._modulus.reduce(fq_poly.mul(self.fq, a, b)))

    def inv(self, a: LElem) -> LElem:
        if self.is_zero(a):
            raise FieldError("inverse of zero in L")
        if self.n == 1:
            return (self.fq.inv(a[0]),)
        g, s, _ = fq_poly.xgcd(self.fq, a, self.ell)
        if g != [1]:
            raise FieldError("element is not invertible modulo ell")
        return self.element(s)

    def pow(self, a: LElem, exponent: int) -> LElem:
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        result = self.one
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            exponent >>= 1
            if exponent:
                base = self.mul(base, base)
        return result

    # Frobenius and derived invariants

    def frobenius(self, c: LElem, t: int = 1) -> LElem:
        """
        Compute c^(q^t); negative t is taken modulo n.

        Args:
            c: Element of L
            t: Frobenius exponent

        Returns:
            c^[t]
        """
        t %= self.n
        if t == 0 or self.is_in_fq(c):
            return tuple(c)
        bump_frobenius()
        image = self._frob_table[t]
        K = self.fq
        coeffs = fq_poly.trim(c)
        acc = self.from_fq(coeffs[-1])
        for coeff in reversed(coeffs[:-1]):
            acc = self.mul(acc, image)
            if coeff:
                acc = (K.add(acc[0], coeff),) + acc[1:]
        return acc

    def norm(self, c: LElem) -> int:
        """N_{L/F_q}(c) = c^((q^n - 1)/(q - 1)), as an F_q code."""
        if self.is_zero(c):
            return 0
        value = self.pow(c, (self.q ** self.n - 1) // (self.q - 1))
        return value[0]

    def degree_over_fq(self, c: LElem) -> int:
        """Least d dividing n with c^[d] = c."""
        for d in range(1, self.n + 1):
            if self.n % d == 0 and self.frobenius(c, d) == tuple(c):
                return d
        return self.n

    def minimal_polynomial(self, c: LElem) -> tuple[int, ...]:
        """
        Minimal polynomial of c over F_q from the dependency among 1, c, ..., c^d.

        The degree d is found first with Frobenius powers, so a single
        elimination is needed.

        Returns:
            Monic coefficient tuple, little-endian
        """
        d = self.degree_over_fq(c)
        powers = [self.one]
        for _ in range(d):
            powers.append(self.mul(powers[-1], c))
        dependency = fq_linalg.first_dependency(self.fq, powers)
        if dependency is None or len(dependency) != d:
            raise FieldError(f"no linear dependency among the first {d + 1} powers")
        K = self.fq
        return tuple(K.neg(coef) for coef in dependency) + (1,)

    def subfield_decomposition(self, gamma_x: LElem) -> "SubfieldDecomposition":
        return SubfieldDecomposition(self, gamma_x)

    def to_str(self, a: Sequence[int], var: str = "t") -> str:
        return fq_poly.to_str(self.fq, a, var)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldTower):
            return NotImplemented
        return self.fq == other.fq and self.ell == other.ell

    def __hash__(self) -> int:
        return hash((self.fq, self.ell))

    def __repr__(self) -> str:
        return f"FieldTower(q={self.q}, n={self.n})"


class SubfieldDecomposition:
    """
    L ≃ F_q[x, t]/(𝔭(x), g(x, t)) for the subfield F_q(γ_x) of degree m.

    Coordinates on the basis γ_x^i t^j (0 <= i < m, 0 <= j < n/m) are flat
    tuples indexed by j*m + i; alpha maps an element to them and
    alpha_inverse maps back.
    """

    def __init__(self, tower: FieldTower, gamma_x: LElem):
        self.tower = tower
        self.gamma_x = tuple(gamma_x)
        self.p_poly = tower.minimal_polynomial(self.gamma_x)
        self.m = len(self.p_poly) - 1
        if tower.n % self.m:
            raise FieldError(f"deg p = {self.m} does not divide n = {tower.n}")
        self.n_over_m = tower.n // self.m

        gamma_powers = [tower.one]
        for _ in range(1, self.m):
            gamma_powers.append(tower.mul(gamma_powers[-1], self.gamma_x))
        t_powers = [tower.one]
        for _ in range(1, self.n_over_m):
            t_powers.append(tower.mul(t_powers[-1], tower.gen))
        basis = [tower.mul(t_powers[j], gamma_powers[i]) for j in range(self.n_over_m) for i in range(self.m)]

        n = tower.n
        self.basis_matrix = [[basis[col][row] for col in range(n)] for row in range(n)]
        self.inverse_matrix = fq_linalg.invert(tower.fq, self.basis_matrix)

        top = tower.mul(t_powers[-1], tower.gen)
        grouped = self.alpha_grouped(top)
        K = tower.fq
        self.g = tuple(tuple(K.neg(c) for c in block) for block in grouped) + ((1,) + (0,) * (self.m - 1),)

        logger.info(f"Subfield decomposition: m={self.m}, n/m={self.n_over_m}")

    def alpha(self, c: LElem) -> tuple[int, ...]:
        """Coordinates of c on the basis γ_x^i t^j."""
        return tuple(fq_linalg.mat_vec(self.tower.fq, self.inverse_matrix, c))

    def alpha_grouped(self, c: LElem) -> list[tuple[int, ...]]:
        """Coordinates of c as n/m polynomials in x of degree < m, one per power of t."""
        flat = self.alpha(c)
        m = self.m
        return [flat[j * m:(j + 1) * m] for j in range(self.n_over_m)]

    def alpha_inverse(self, coords: Sequence[int]) -> LElem:
        return tuple(fq_linalg.mat_vec(self.tower.fq, self.basis_matrix, coords))


def make_field_tower(p: int, e: int = 1, f: Optional[Sequence[int]] = None,
                     ell: Sequence[int] = ()) -> FieldTower:
    """
    Build and validate F_p ⊆ F_q ⊆ L.

    Args:
        p: Prime characteristic
        e: Degree of F_q over F_p
        f: Monic irreducible degree-e polynomial over F_p (omitted when e = 1)
        ell: Monic irreducible polynomial over F_q, coefficients as F_q codes

    Returns:
        Validated FieldTower

    Raises:
        FieldError: On a non-prime p or a reducible, non-monic or zero modulus
    """
    return FieldTower(FqField(p, e, f), ell)
