"""Dense univariate polynomials over F_q.

Polynomials are little-endian lists of F_q codes. Every function takes the
coefficient field first and returns a trimmed list (no trailing zeros)
unless documented otherwise.
"""

import logging
import random
from typing import TYPE_CHECKING, Optional, Sequence

from . import fq_field
from .config import KRONECKER_THRESHOLD

if TYPE_CHECKING:
    from .fq_field import FqField

logger = logging.getLogger(__name__)

Poly = list[int]


def trim(a: Sequence[int]) -> Poly:
    out = list(a)
    while out and not out[-1]:
        out.pop()
    return out


def degree(a: Sequence[int]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(trim(a)) - 1


def pad(a: Sequence[int], length: int) -> Poly:
    out = list(a)
    return out + [0] * (length - len(out))


def add(K: "FqField", a: Sequence[int], b: Sequence[int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = K.add(out[i], y)
    return trim(out)


def sub(K: "FqField", a: Sequence[int], b: Sequence[int]) -> Poly:
    out = pad(a, max(len(a), len(b)))
    for i, y in enumerate(b):
        out[i] = K.sub(out[i], y)
    return trim(out)


def neg(K: "FqField", a: Sequence[int]) -> Poly:
    return trim([K.neg(x) for x in a])


def scale(K: "FqField", c: int, a: Sequence[int]) -> Poly:
    if not c:
        return []
    return trim([K.mul(c, x) for x in a])


def _pack(values: Sequence[int], width: int) -> int:
    buf = bytearray(len(values) * width)
    for i, v in enumerate(values):
        if v:
            buf[i * width:(i + 1) * width] = v.to_bytes(width, "little")
    return int.from_bytes(buf, "little")


def _unpack(number: int, width: int, count: int) -> list[int]:
    raw = number.to_bytes(count * width, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(count)]


def _kronecker_mul(K: "FqField", a: Sequence[int], b: Sequence[int]) -> Poly:
    """
    Multiply by packing both operands into big integers.

    Each slot holds one integer coefficient of the product before reduction,
    bounded by min(len a, len b) * e * (p - 1)^2. For e > 1 every F_q
    coefficient is spread over 2e - 1 slots of z-digits.
    """
    la, lb = len(a), len(b)
    bound = min(la, lb) * K.e * (K.p - 1) ** 2
    width = max(1, (bound.bit_length() + 7) // 8)
    if K.is_prime_field:
        product = _pack(a, width) * _pack(b, width)
        return [c % K.p for c in _unpack(product, width, la + lb - 1)]

    e = K.e
    stride = 2 * e - 1

    def spread(poly: Sequence[int]) -> list[int]:
        flat = [0] * (len(poly) * stride)
        for i, c in enumerate(poly):
            if c:
                flat[i * stride:i * stride + e] = K.digits(c)
        return flat

    product = _pack(spread(a), width) * _pack(spread(b), width)
    raw = _unpack(product, width, (la + lb - 1) * stride)
    return [K.reduce_z_digits(raw[i * stride:(i + 1) * stride]) for i in range(la + lb - 1)]


def _schoolbook_mul(K: "FqField", a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    if K.is_prime_field:
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % K.p for c in out]
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = K.add(out[i + j], K.mul(x, y))
    return out


def mul(K: "FqField", a: Sequence[int], b: Sequence[int]) -> Poly:
    """Product of two polynomials; Kronecker substitution above KRONECKER_THRESHOLD."""
    if not a or not b:
        return []
    if min(len(a), len(b)) >= KRONECKER_THRESHOLD:
        return trim(_kronecker_mul(K, a, b))
    return trim(_schoolbook_mul(K, a, b))


def power(K: "FqField", a: Sequence[int], exponent: int) -> Poly:
    result: Poly = [1]
    for _ in range(exponent):
        result = mul(K, result, a)
    return result


def compose_mod(K: "FqField", a: Sequence[int], b: Sequence[int], modulus: "PolyModulus") -> Poly:
    """a(b) modulo the given modulus, by Horner's rule."""
    acc: Poly = []
    for c in reversed(trim(a)):
        acc = add(K, modulus.mulmod(acc, b) if acc else [], [c])
    return trim(modulus.reduce(acc))


def divmod_poly(K: "FqField", a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    """
    Euclidean division a = quot * b + rem with deg rem < deg b.

    Raises:
        FieldError: If b is zero
    """
    b = trim(b)
    if not b:
        raise fq_field.FieldError("polynomial division by zero")
    a = trim(a)
    db = len(b) - 1
    if len(a) <= db:
        return [], a
    lead_inv = K.inv(b[-1])
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = K.mul(c, lead_inv)
            quot[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = K.sub(a[i - db + j], K.mul(c, b[j]))
    return trim(quot), trim(a[:db])


def mod(K: "FqField", a: Sequence[int], b: Sequence[int]) -> Poly:
    return divmod_poly(K, a, b)[1]


def monic(K: "FqField", a: Sequence[int]) -> Poly:
    a = trim(a)
    if not a:
        return []
    return scale(K, K.inv(a[-1]), a)


def gcd(K: "FqField", a: Sequence[int], b: Sequence[int]) -> Poly:
    """Monic gcd (zero when both inputs are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(K, a, b)
    return monic(K, a)


def xgcd(K: "FqField", a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly, Poly]:
    """
    Extended gcd.

    Returns:
        Tuple (g, s, t) with g monic and s*a + t*b = g
    """
    r0, r1 = trim(a), trim(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quot, rem = divmod_poly(K, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(K, s0, mul(K, quot, s1))
        t0, t1 = t1, sub(K, t0, mul(K, quot, t1))
    if not r0:
        return [], [], []
    lead_inv = K.inv(r0[-1])
    return scale(K, lead_inv, r0), scale(K, lead_inv, s0), scale(K, lead_inv, t0)


def derivative(K: "FqField", a: Sequence[int]) -> Poly:
    return trim([K.mul(K.from_int(i), c) for i, c in enumerate(a)][1:])


class PolyModulus:
    """
    A fixed monic modulus m of degree n with Barrett reduction.

    The inverse of the reversed modulus is precomputed to precision n - 1,
    which reduces any input of degree <= 2n - 2 with two products.
    """

    def __init__(self, K: "FqField", modulus: Sequence[int]):
        m = trim(modulus)
        if len(m) < 2 or m[-1] != 1:
            raise fq_field.FieldError("modulus must be monic of degree >= 1")
        self.field = K
        self.poly = m
        self.degree = n = len(m) - 1

        rev = m[::-1]
        inverse = [1] + [0] * (n - 2) if n >= 2 else []
        for i in range(1, n - 1):
            acc = 0
            for j in range(1, min(i, n) + 1):
                acc = K.add(acc, K.mul(rev[j], inverse[i - j]))
            inverse[i] = K.neg(acc)
        self._rev_inverse = inverse

    def reduce(self, a: Sequence[int]) -> Poly:
        """Remainder modulo m, padded to exactly n coefficients."""
        K, n = self.field, self.degree
        a = trim(a)
        if len(a) <= n:
            return pad(a, n)
        if len(a) > 2 * n - 1:
            return pad(mod(K, a, self.poly), n)

        quot_len = len(a) - n
        top = a[:n - 1:-1]
        rev_quot = mul(K, top, self._rev_inverse[:quot_len])[:quot_len]
        quot = pad(rev_quot, quot_len)[::-1]
        qm = pad(mul(K, quot, self.poly)[:n], n)
        return [K.sub(x, y) for x, y in zip(a[:n], qm)]

    def mulmod(self, a: Sequence[int], b: Sequence[int]) -> Poly:
        return self.reduce(mul(self.field, a, b))

    def powmod(self, a: Sequence[int], exponent: int) -> Poly:
        result = pad([1], self.degree) if self.degree else []
        base = self.reduce(a)
        while exponent:
            if exponent & 1:
                result = self.mulmod(result, base)
            exponent >>= 1
            if exponent:
                base = self.mulmod(base, base)
        return result


def is_irreducible(K: "FqField", f: Sequence[int]) -> bool:
    """Ben-Or test: gcd(x^(q^i) - x, f) = 1 for every i <= deg f / 2."""
    f = monic(K, f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    modulus = PolyModulus(K, f)
    x = [0, 1]
    power = x
    for _ in range(1, n // 2 + 1):
        power = modulus.powmod(power, K.q)
        if len(gcd(K, sub(K, power, x), f)) > 1:
            return False
    return True


def first_irreducible(K: "FqField", deg: int) -> Poly:
    """Lexicographically first monic irreducible polynomial of the given degree."""
    q = K.q
    for index in range(q ** deg):
        coeffs = [(index // q ** i) % q for i in range(deg)]
        candidate = coeffs + [1]
        if is_irreducible(K, candidate):
            return candidate
    raise fq_field.FieldError(f"no irreducible polynomial of degree {deg} over F_{q}")


def random_irreducible(K: "FqField", deg: int, rng: Optional[random.Random] = None) -> Poly:
    rng = rng or random.Random()
    while True:
        candidate = [rng.randrange(K.q) for _ in range(deg)] + [1]
        if is_irreducible(K, candidate):
            return candidate


def to_str(K: "FqField", a: Sequence[int], var: str = "x") -> str:
    """Render in descending powers, e.g. 'x^3 + 4*x^2 + x'."""
    a = trim(a)
    if not a:
        return "0"
    terms = []
    for power in range(len(a) - 1, -1, -1):
        c = a[power]
        if not c:
            continue
        coeff = K.to_str(c)
        if power == 0:
            terms.append(coeff)
            continue
        monomial = var if power == 1 else f"{var}^{power}"
        if c == 1:
            terms.append(monomial)
        else:
            if " " in coeff:
                coeff = f"({coeff})"
            terms.append(f"{coeff}*{monomial}")
    return " + ".join(terms)
