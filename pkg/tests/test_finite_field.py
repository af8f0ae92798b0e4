"""Prime field arithmetic against brute-force oracles."""

import pytest

from periodkit.errors import BadCongruence, DivisionByZero, MismatchedModulus
from periodkit.finite_field import (
    PrimeFieldElem,
    find_primitive_root,
    is_prime,
    iso_gaussian_residue,
    legendre_symbol,
)

PRIMES_TO_97 = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                71, 73, 79, 83, 89, 97]


def trial_division_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_is_prime_matches_trial_division():
    for n in range(2000):
        assert is_prime(n) == trial_division_prime(n), n


def test_arithmetic_examples():
    assert PrimeFieldElem(7, 3) + PrimeFieldElem(7, 5) == PrimeFieldElem(7, 1)
    assert PrimeFieldElem(13, 1).inverse() == PrimeFieldElem(13, 1)
    assert PrimeFieldElem(7, 3) ** 6 == PrimeFieldElem(7, 1)
    assert PrimeFieldElem(7, 3) * PrimeFieldElem(7, 5) == PrimeFieldElem(7, 1)
    assert -PrimeFieldElem(5, 2) == PrimeFieldElem(5, 3)
    assert PrimeFieldElem(5, 2) - 3 == PrimeFieldElem(5, 4)
    assert PrimeFieldElem(5, 3) / PrimeFieldElem(5, 2) == PrimeFieldElem(5, 4)


def test_inverse_sweeps():
    for p in (5, 7, 31):
        for a in range(1, p):
            x = PrimeFieldElem(p, a)
            assert x * x.inverse() == PrimeFieldElem(p, 1)
        assert PrimeFieldElem(p, 1) ** -1 == PrimeFieldElem(p, 1)


def test_errors():
    with pytest.raises(MismatchedModulus):
        PrimeFieldElem(5, 1) + PrimeFieldElem(7, 1)
    with pytest.raises(DivisionByZero):
        PrimeFieldElem(5, 0).inverse()
    with pytest.raises(ValueError):
        PrimeFieldElem(4, 1)
    with pytest.raises(ValueError):
        PrimeFieldElem(2, 1)  # odd primes only
    with pytest.raises(ValueError):
        PrimeFieldElem(2**31 + 11, 1)


def test_construction_reduces():
    assert PrimeFieldElem(7, 23).value == 2
    assert PrimeFieldElem(7, -1).value == 6


def test_primitive_root_examples():
    assert find_primitive_root(5).value == 2
    assert find_primitive_root(7).value == 3
    assert find_primitive_root(3).value == 2


def test_primitive_root_has_full_order():
    # Exhaustive power enumeration: the orbit of g must hit every unit once.
    for p in PRIMES_TO_97:
        g = find_primitive_root(p).value
        seen = set()
        acc = 1
        for _ in range(p - 1):
            seen.add(acc)
            acc = acc * g % p
        assert len(seen) == p - 1, p


def test_primitive_root_is_smallest():
    for p in (5, 7, 11, 13, 41):
        g = find_primitive_root(p).value
        for cand in range(2, g):
            orbit = {pow(cand, j, p) for j in range(1, p)}
            assert len(orbit) < p - 1, (p, cand)


def test_legendre_examples():
    assert legendre_symbol(PrimeFieldElem(7, 0)) == 0
    assert legendre_symbol(PrimeFieldElem(7, 2)) == 1  # 3^2 = 2 mod 7
    assert legendre_symbol(PrimeFieldElem(7, 3)) == -1


def test_legendre_against_square_enumeration():
    for p in PRIMES_TO_97[:10]:
        squares = {y * y % p for y in range(1, p)}
        for a in range(1, p):
            expected = 1 if a in squares else -1
            assert legendre_symbol(PrimeFieldElem(p, a)) == expected, (p, a)


def test_legendre_square_count():
    for p in PRIMES_TO_97:
        plus = sum(1 for a in range(1, p) if legendre_symbol(PrimeFieldElem(p, a)) == 1)
        assert plus == (p - 1) // 2, p


def test_gaussian_split_examples():
    s5 = iso_gaussian_residue(5)
    assert s5.u.value in (2, 3) and (s5.u.value ** 2 + 1) % 5 == 0
    assert (s5.a, s5.b) == (2, 1)
    s13 = iso_gaussian_residue(13)
    assert {s13.a, s13.b} == {2, 3}
    with pytest.raises(BadCongruence):
        iso_gaussian_residue(7)


def test_gaussian_split_properties():
    for p in [q for q in PRIMES_TO_97 if q % 4 == 1]:
        s = iso_gaussian_residue(p)
        assert (s.u.value ** 2 + 1) % p == 0
        assert s.a * s.a + s.b * s.b == p
        assert s.a >= s.b >= 1
