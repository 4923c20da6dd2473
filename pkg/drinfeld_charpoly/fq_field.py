"""Arithmetic in the finite field F_q, elements encoded as integers."""

import logging
from typing import Optional, Sequence

from . import fq_poly
from .config import MAX_TABLE_FIELD

logger = logging.getLogger(__name__)


class FieldError(ValueError):
    """Exception for invalid field data or undefined field operations."""
    pass


def is_prime(value: int) -> bool:
    """Trial-division primality test (moduli here are small)."""
    if value < 2:
        return False
    if value < 4:
        return True
    if value % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """
    Split a field order into characteristic and degree.

    Args:
        q: Field order

    Returns:
        Tuple (p, e) with q = p^e

    Raises:
        FieldError: If q is not a prime power
    """
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, e


class FqField:
    """
    The field F_q with q = p^e.

    For e = 1 an element is its residue in [0, p). For e > 1 the element
    d_0 + d_1 z + ... + d_{e-1} z^{e-1} of F_p[z]/(f) is encoded as
    sum d_j p^j; multiplication goes through log/exp tables and addition
    through a q x q table.
    """

    def __init__(self, p: int, e: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")

        self.p = p
        self.e = e
        self.q = p ** e
        self.is_prime_field = e == 1
        self.modulus: Optional[tuple[int, ...]] = None

        if e == 1:
            if modulus is not None:
                trimmed = fq_poly.trim([c % p for c in modulus])
                if len(trimmed) != 2 or trimmed[-1] != 1:
                    raise FieldError("f must be monic of degree 1 (or absent) when e = 1")
            return

        if modulus is None:
            raise FieldError(f"f is required when e = {e}")
        f = fq_poly.trim([c % p for c in modulus])
        if len(f) != e + 1:
            raise FieldError(f"f must have degree {e}, got degree {len(f) - 1}")
        if f[-1] != 1:
            raise FieldError("f must be monic")
        if self.q > MAX_TABLE_FIELD:
            raise FieldError(
                f"q = {self.q} exceeds DRINFELD_MAX_TABLE_FIELD = {MAX_TABLE_FIELD} for e > 1"
            )
        if not fq_poly.is_irreducible(FqField(p), f):
            raise FieldError(f"f = {fq_poly.to_str(FqField(p), f, 'z')} is reducible over F_{p}")
        self.modulus = tuple(f)
        self._build_tables()
        logger.debug(f"Built tables for F_{self.q} = F_{p}[z]/({fq_poly.to_str(FqField(p), f, 'z')})")

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        f = self.modulus
        self._place = [p ** j for j in range(e)]
        self._digits = [tuple((code // p ** j) % p for j in range(e)) for code in range(q)]

        # z^j mod f for j < 2e - 1: enough to fold any product of two elements
        zpow = []
        current = [1] + [0] * (e - 1)
        for _ in range(2 * e - 1):
            zpow.append(tuple(current))
            top = current[-1]
            current = [0] + current[:-1]
            if top:
                current = [(c - top * fc) % p for c, fc in zip(current, f[:e])]
        self._zpow = zpow

        digits = self._digits
        self._add_table = [
            [self.encode([(x + y) % p for x, y in zip(dx, dy)]) for dy in digits] for dx in digits
        ]
        self._neg_table = [self.encode([(-x) % p for x in dx]) for dx in digits]

        order = q - 1
        powers = [1]
        for candidate in range(2, q):
            powers = [1]
            value = candidate
            while value != 1:
                powers.append(value)
                value = self._table_free_mul(value, candidate)
            if len(powers) == order:
                break
        self._exp = powers + powers
        self._log = [0] * q
        for index, value in enumerate(powers):
            self._log[value] = index

    def _table_free_mul(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        product = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    product[i + j] += x * y
        return self.reduce_z_digits(product)

    # Encoding

    def encode(self, digits: Sequence[int]) -> int:
        """Code of the element with the given F_p digits (at most e of them)."""
        if self.e == 1:
            return digits[0] % self.p if digits else 0
        if len(digits) > self.e:
            return self.reduce_z_digits(digits)
        return sum((d % self.p) * place for d, place in zip(digits, self._place))

    def digits(self, code: int) -> tuple[int, ...]:
        """F_p digits of an element, length e."""
        if self.e == 1:
            return (code,)
        return self._digits[code]

    def reduce_z_digits(self, digits: Sequence[int]) -> int:
        """Reduce a z-polynomial of degree < 2e - 1 (integer coefficients) modulo f."""
        p, e = self.p, self.e
        if e == 1:
            return digits[0] % p if digits else 0
        acc = [0] * e
        for d, row in zip(digits, self._zpow):
            if d:
                for i in range(e):
                    acc[i] += d * row[i]
        return sum((a % p) * place for a, place in zip(acc, self._place))

    def from_int(self, value: int) -> int:
        """Image of an integer in the prime field."""
        return value % self.p

    # Arithmetic

    def add(self, a: int, b: int) -> int:
        if self.is_prime_field:
            return (a + b) % self.p
        return self._add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        if self.is_prime_field:
            return (a - b) % self.p
        return self._add_table[a][self._neg_table[b]]

    def neg(self, a: int) -> int:
        if self.is_prime_field:
            return (-a) % self.p
        return self._neg_table[a]

    def mul(self, a: int, b: int) -> int:
        if self.is_prime_field:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero in F_q")
        if self.is_prime_field:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, exponent: int) -> int:
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        if self.is_prime_field:
            return pow(a, exponent, self.p)
        if a == 0:
            return 1 if exponent == 0 else 0
        return self._exp[(self._log[a] * exponent) % (self.q - 1)]

    def to_str(self, a: int) -> str:
        if self.is_prime_field:
            return str(a)
        return fq_poly.to_str(FqField(self.p), list(self._digits[a]), "z")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FqField):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.is_prime_field:
            return f"FqField(p={self.p})"
        return f"FqField(p={self.p}, e={self.e}, f={list(self.modulus)})"
