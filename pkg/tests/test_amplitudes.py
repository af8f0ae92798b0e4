"""Gamma/Beta, the four-point amplitude, residues, and the two-column report."""

import math

import pytest
from scipy import integrate

from periodkit.amplitudes import (
    MandelstamInput,
    beta_fn,
    correspondence_table,
    gamma_fn,
    pole_scan,
    veneziano,
)
from periodkit.errors import PoleAtNonpositiveInteger


def beta_quadrature(alpha, beta):
    # Independent oracle: Int_0^1 t^(a-1) (1-t)^(b-1) dt, endpoint
    # singularities removed by t = u^2 and 1 - t = v^2 around the split.
    def lower(u):
        return 2.0 * u ** (2 * alpha - 1) * (1 - u * u) ** (beta - 1)

    def upper(v):
        return 2.0 * v ** (2 * beta - 1) * (1 - v * v) ** (alpha - 1)

    lo, _ = integrate.quad(lower, 0, math.sqrt(0.5), epsabs=1e-12, epsrel=1e-12)
    hi, _ = integrate.quad(upper, 0, math.sqrt(0.5), epsabs=1e-12, epsrel=1e-12)
    return lo + hi


def residue_closed_form(n, beta):
    acc = (-1.0) ** n / math.factorial(n)
    for j in range(1, n + 1):
        acc *= beta - j
    return acc


def test_gamma_examples():
    assert abs(gamma_fn(1.0) - 1.0) < 1e-12
    assert abs(gamma_fn(0.5) - math.sqrt(math.pi)) < 1e-12
    assert abs(gamma_fn(5.0) - 24.0) < 1e-10  # absolute slack for a value of 24


def test_gamma_relative_error_on_principal_range():
    x = 0.5
    while x <= 20.0:
        rel = abs(gamma_fn(x) - math.gamma(x)) / math.gamma(x)
        assert rel < 1e-12, x
        x += 0.0078125


def test_gamma_reflection_region():
    for x in (-0.5, -1.5, -2.25, -6.75, 0.1, 0.3):
        rel = abs(gamma_fn(x) - math.gamma(x)) / abs(math.gamma(x))
        assert rel < 1e-12, x


def test_gamma_poles():
    for x in (0.0, -1.0, -2.0, -17.0):
        with pytest.raises(PoleAtNonpositiveInteger):
            gamma_fn(x)


def test_beta_examples():
    assert abs(beta_fn(1, 1) - 1.0) < 1e-13
    assert abs(beta_fn(0.5, 0.5) - math.pi) < 1e-10
    assert abs(beta_fn(2, 3) - 1.0 / 12.0) < 1e-14


def test_beta_rejects_poles():
    with pytest.raises(PoleAtNonpositiveInteger):
        beta_fn(0.0, 1.5)
    with pytest.raises(PoleAtNonpositiveInteger):
        beta_fn(1.5, -2.0)
    with pytest.raises(PoleAtNonpositiveInteger):
        beta_fn(0.25, -0.25)  # alpha + beta = 0


def test_beta_against_quadrature():
    for alpha in (0.5, 1.0, 2.5):
        for beta in (0.5, 1.0, 2.5):
            assert abs(beta_fn(alpha, beta) - beta_quadrature(alpha, beta)) < 1e-8


def test_beta_symmetry_grid():
    values = [0.1 + 0.49 * i for i in range(11)]  # spans (0.1, 5]
    for a in values:
        for b in values:
            assert abs(beta_fn(a, b) - beta_fn(b, a)) < 1e-12


def test_beta_functional_identity():
    values = [0.1 + 0.49 * i for i in range(11)]
    for a in values:
        for b in values:
            lhs = beta_fn(a + 1, b)
            rhs = beta_fn(a, b) * a / (a + b)
            assert abs(lhs - rhs) < 1e-10, (a, b)


def test_veneziano_examples():
    flat = veneziano(MandelstamInput(2.0, 2.0))
    assert not flat.at_pole and abs(flat.value - 1.0) < 1e-12
    pole = veneziano(MandelstamInput(1.0, 2.5))
    assert pole.at_pole and pole.pole_index == 0
    assert math.isinf(pole.value)


def test_veneziano_symmetry():
    a = veneziano(MandelstamInput(2.3, 3.7))
    b = veneziano(MandelstamInput(3.7, 2.3))
    assert abs(a.value - b.value) < 1e-12


def test_veneziano_pole_ladder():
    for n in range(0, 6):
        amp = veneziano(MandelstamInput(1.0 - n, 2.5))
        assert amp.at_pole and amp.pole_index == n, n


def test_veneziano_cancelling_poles_are_finite():
    # alpha = -2, beta = 1: Gamma(alpha + beta) blows up too and the ratio
    # converges to -1/2.
    amp = veneziano(MandelstamInput(-1.0, 2.0))
    assert not amp.at_pole and abs(amp.value + 0.5) < 1e-12
    # Non-pole numerator over a Gamma pole vanishes.
    zero = veneziano(MandelstamInput(0.5, 0.5))
    assert not zero.at_pole and zero.value == 0.0


def test_pole_scan_matches_closed_form():
    for beta in (1.5, 2.5, 3.5):
        for n, residue in pole_scan(beta, 5):
            assert abs(residue - residue_closed_form(n, beta)) < 1e-6, (n, beta)


def test_pole_scan_examples():
    scan = dict(pole_scan(2.5, 2))
    assert abs(scan[0] - 1.0) < 1e-6
    assert abs(scan[1] + 1.5) < 1e-6
    assert abs(scan[2] - 0.375) < 1e-6


def test_pole_scan_input_validation():
    with pytest.raises(ValueError):
        pole_scan(2.0, 3)
    with pytest.raises(ValueError):
        pole_scan(2.5, 13)


def test_correspondence_local_norms():
    report = correspondence_table(5, [2.0])
    assert len(report.local_rows) == 6
    assert all(row.norm_ok for row in report.local_rows)
    assert report.a_p == -2


def test_correspondence_ap_matches_enumeration():
    def naive(p):
        n = 1
        for x in range(p):
            fx = (x * x * x - x) % p
            for y in range(p):
                if y * y % p == fx:
                    n += 1
        return p + 1 - n

    report = correspondence_table(13, [2.0])
    assert report.a_p == naive(13)
    report7 = correspondence_table(7, [])
    assert report7.a_p is None


def test_correspondence_global_rows():
    report = correspondence_table(5, [1.0, 2.0])
    assert len(report.global_rows) == 4  # Cartesian square of the grid
    for row in report.global_rows:
        if row.at_pole:
            assert isinstance(row.pole_index, int) and row.pole_index >= 0
    assert any(row.at_pole for row in report.global_rows)  # s = 1 gives alpha = 0


def test_correspondence_empty_grid():
    report = correspondence_table(5, [])
    assert report.global_rows == ()
    assert len(report.dictionary) == 3


def test_correspondence_bounds():
    with pytest.raises(ValueError):
        correspondence_table(101, [])
    with pytest.raises(ValueError):
        correspondence_table(5, [0.0] * 101)
