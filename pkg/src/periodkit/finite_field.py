"""Exact arithmetic in prime fields F_p.

Elements are immutable residues with an attached odd prime modulus in the
machine-word range (p < 2**31).  Primality is checked deterministically at
construction, the canonical generator of F_p^x is the smallest primitive
root, and the p = 1 mod 4 case carries the explicit Gaussian-integer
presentation of F_p as a quotient of Z[i].
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import BadCongruence, DivisionByZero, MismatchedModulus

MAX_PRIME = 2**31

# Miller-Rabin with these witnesses is exact for all n < 3_215_031_751,
# which covers the whole supported range.
_MR_WITNESSES = (2, 3, 5, 7)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**31."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7):
        if n == small:
            return True
        if n % small == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or p >= MAX_PRIME or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime below 2**31, got {p}")


class PrimeFieldElem:
    """A residue in F_p, p an odd prime.

    Invariant: 0 <= value < p; the modulus is validated once at construction.
    Instances are immutable and hashable; arithmetic between elements with
    different moduli raises MismatchedModulus.
    """

    __slots__ = ("p", "value")

    def __init__(self, p: int, value: int):
        _check_odd_prime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElem is immutable")

    def _coerce(self, other) -> "PrimeFieldElem":
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise MismatchedModulus(f"moduli differ: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return PrimeFieldElem(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return PrimeFieldElem(self.p, -self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElem(self.p, pow(self.value, exponent, self.p))

    def inverse(self) -> "PrimeFieldElem":
        """Multiplicative inverse; raises DivisionByZero on the zero residue."""
        if self.value == 0:
            raise DivisionByZero(f"0 mod {self.p} is not invertible")
        return PrimeFieldElem(self.p, pow(self.value, self.p - 2, self.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"PrimeFieldElem({self.p}, {self.value})"


@functools.lru_cache(maxsize=None)
def _smallest_primitive_root(p: int) -> int:
    _check_odd_prime(p)
    n = p - 1
    # Trial-division factorization of p-1 is cheap at desk scale.
    factors = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in factors):
            return g
    raise AssertionError(f"no primitive root found for {p}")  # unreachable for prime p


def find_primitive_root(p: int) -> PrimeFieldElem:
    """Smallest generator of F_p^x; fixed once so downstream encodings are reproducible."""
    return PrimeFieldElem(p, _smallest_primitive_root(p))


def legendre_symbol(a: PrimeFieldElem) -> int:
    """Quadratic symbol of a residue: 0 for zero, +1 for squares, -1 otherwise."""
    if a.value == 0:
        return 0
    s = pow(a.value, (a.p - 1) // 2, a.p)
    return 1 if s == 1 else -1


@dataclass(frozen=True)
class GaussianSplit:
    """Presentation of F_p (p = 1 mod 4) as Z[i] modulo a Gaussian prime a + b*i.

    u is the image of i under the quotient map, so u**2 = -1 in F_p, and
    a**2 + b**2 = p exactly with a >= b >= 1.
    """

    u: PrimeFieldElem
    a: int
    b: int


def iso_gaussian_residue(p: int) -> GaussianSplit:
    """Square root of -1 in F_p together with the two-square splitting of p.

    u is computed as g**((p-1)/4) for the canonical primitive root g; the
    Gaussian factor comes from Cornacchia's Euclidean descent seeded at u.
    """
    _check_odd_prime(p)
    if p % 4 != 1:
        raise BadCongruence(f"p = {p} is {p % 4} mod 4; need p = 1 mod 4")
    g = _smallest_primitive_root(p)
    u = pow(g, (p - 1) // 4, p)
    # Euclidean descent: the first remainder below sqrt(p) is one leg of the split.
    r0, r1 = p, max(u, p - u)
    bound = math.isqrt(p)
    while r1 > bound:
        r0, r1 = r1, r0 % r1
    a = r1
    b = math.isqrt(p - a * a)
    assert a * a + b * b == p
    if a < b:
        a, b = b, a
    return GaussianSplit(u=PrimeFieldElem(p, u), a=a, b=b)
