"""Period lattices, tau reduction, the family period map, and the catalog."""

import math
import random
from fractions import Fraction

import pytest

from periodkit.complex_periods import (
    EllipticCurveQ,
    PeriodLattice,
    agm,
    apply_transform,
    curve_tau,
    invert_transform,
    legendre_curve,
    numeric_periods_catalog,
    period_map_legendre,
    periods_agm,
    periods_quadrature,
    real_roots,
    tau_normalize,
)
from periodkit.errors import (
    ComplexRoots,
    DegenerateFamilyMember,
    DegenerateLattice,
    SingularCurve,
)


def random_three_real_curves(rng, count):
    out = []
    while len(out) < count:
        a = rng.randint(-20, -1)
        b = rng.randint(-20, 20)
        if -4 * a**3 - 27 * b**2 > 0:
            out.append(EllipticCurveQ(a, b))
    return out


def test_real_roots_examples():
    assert [round(r, 12) for r in real_roots(EllipticCurveQ(-1, 0))] == [1.0, 0.0, -1.0]
    assert [round(r, 12) for r in real_roots(EllipticCurveQ(-4, 0))] == [2.0, 0.0, -2.0]
    single = real_roots(EllipticCurveQ(0, 1))
    assert len(single) == 1 and abs(single[0] + 1.0) < 1e-13


def test_real_roots_are_actual_roots():
    rng = random.Random(11)
    for curve in random_three_real_curves(rng, 15):
        a, b = float(curve.a), float(curve.b)
        roots = real_roots(curve)
        assert roots[0] > roots[1] > roots[2]
        for r in roots:
            assert abs(r**3 + a * r + b) < 1e-9 * max(1.0, abs(r) ** 3)


def test_singular_curve_rejected():
    with pytest.raises(SingularCurve):
        EllipticCurveQ(-3, 2)  # (x-1)^2 (x+2)
    with pytest.raises(TypeError):
        EllipticCurveQ(0.5, 1.0)  # floats are ambiguous; demand exact rationals


def test_tau_is_i_for_lemniscatic_curve():
    for method in ("agm", "quadrature"):
        point = curve_tau(EllipticCurveQ(-1, 0), method=method)
        assert abs(point.tau - 1j) < 1e-9, method


def test_scaled_curve_period_ratio():
    base = periods_quadrature(EllipticCurveQ(-1, 0))
    scaled = periods_quadrature(EllipticCurveQ(-4, 0))
    assert abs(scaled.omega1 - base.omega1 / math.sqrt(2)) < 1e-9


def test_agm_fixed_point():
    c = math.sqrt(2)
    assert agm(c, c) == c
    with pytest.raises(ValueError):
        agm(-1.0, 2.0)


def test_agm_agrees_with_quadrature_on_random_curves():
    rng = random.Random(2024)
    for curve in random_three_real_curves(rng, 20):
        q = periods_quadrature(curve)
        fast = periods_agm(curve)
        assert abs(q.omega1 - fast.omega1) < 1e-9, curve
        assert abs(q.omega2 - fast.omega2) < 1e-9, curve


def test_lattice_orientation():
    rng = random.Random(31)
    for curve in random_three_real_curves(rng, 10):
        lattice = periods_agm(curve)
        assert (lattice.omega2 / lattice.omega1).imag > 0
        assert lattice.omega1.real > 0


def test_complex_root_curve_rejected():
    with pytest.raises(ComplexRoots):
        periods_agm(EllipticCurveQ(0, 1))
    with pytest.raises(ComplexRoots):
        periods_quadrature(EllipticCurveQ(1, 1))


def test_tau_normalize_examples():
    reduced = tau_normalize(PeriodLattice(1 + 0j, 1j, "agm"))
    assert reduced.tau == 1j and reduced.transform == ((1, 0), (0, 1))

    shifted = tau_normalize(PeriodLattice(1 + 0j, 7 + 1j, "agm"))
    assert abs(shifted.tau - 1j) < 1e-12
    assert shifted.transform == ((1, -7), (0, 1))

    deep = tau_normalize(PeriodLattice(1 + 0j, 0.1 + 0.1j, "agm"))
    assert abs(deep.tau) >= 1 - 1e-12 and abs(deep.tau.real) <= 0.5 + 1e-12
    back = apply_transform(invert_transform(deep.transform), deep.tau)
    assert abs(back - (0.1 + 0.1j)) < 1e-10


def test_tau_normalize_roundtrip_random():
    rng = random.Random(17)
    for _ in range(50):
        tau0 = complex(rng.uniform(-5, 5), rng.uniform(0.01, 5))
        point = tau_normalize(PeriodLattice(1 + 0j, tau0, "agm"))
        det = (
            point.transform[0][0] * point.transform[1][1]
            - point.transform[0][1] * point.transform[1][0]
        )
        assert det == 1
        assert point.tau.imag > 0
        assert abs(point.tau) >= 1 - 1e-9 and abs(point.tau.real) <= 0.5 + 1e-9
        back = apply_transform(invert_transform(point.transform), point.tau)
        assert abs(back - tau0) < 1e-9 * max(1.0, abs(tau0))


def test_tau_normalize_boundary_ties():
    # Re = -1/2 is shifted to +1/2; unit-circle points end with Re >= 0.
    half = tau_normalize(PeriodLattice(1 + 0j, complex(-0.5, 2.0), "agm"))
    assert abs(half.tau.real - 0.5) < 1e-12
    circle = tau_normalize(PeriodLattice(1 + 0j, complex(-math.cos(math.pi / 3), math.sin(math.pi / 3)), "agm"))
    assert circle.tau.real >= -1e-12


def test_tau_normalize_conjugates_lower_half_plane():
    point = tau_normalize(PeriodLattice(1 + 0j, 0.3 - 1.7j, "agm"))
    assert point.tau.imag > 0


def test_degenerate_lattice():
    with pytest.raises(DegenerateLattice):
        tau_normalize(PeriodLattice(1 + 0j, 2.0 + 1e-15j, "agm"))


def test_scaling_covariance():
    rng = random.Random(4)
    for curve in random_three_real_curves(rng, 5):
        base = curve_tau(curve).tau
        for lam in (2, 3):
            scaled = EllipticCurveQ(curve.a * lam**4, curve.b * lam**6)
            assert abs(curve_tau(scaled).tau - base) < 1e-10, (curve, lam)


def test_legendre_curve_shift_is_exact():
    curve = legendre_curve(Fraction(1, 2))
    assert curve.a == Fraction(-1, 4) and curve.b == 0


def test_period_map_examples():
    rows = period_map_legendre([Fraction(3, 4), Fraction(1, 2), Fraction(1, 4)])
    assert [t for t, _ in rows] == [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    by_t = dict(rows)
    assert abs(by_t[Fraction(1, 2)].tau - 1j) < 1e-9
    assert abs(by_t[Fraction(1, 4)].tau - by_t[Fraction(3, 4)].tau) < 1e-9


def test_period_map_symmetry_t_vs_one_minus_t():
    for t in (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2)):
        a = curve_tau(legendre_curve(t)).tau
        b = curve_tau(legendre_curve(1 - t)).tau
        assert abs(a - b) < 1e-9, t


def test_period_map_edge_cases():
    assert period_map_legendre([]) == []
    with pytest.raises(DegenerateFamilyMember):
        period_map_legendre([Fraction(0)])
    with pytest.raises(DegenerateFamilyMember):
        legendre_curve(Fraction(1))


def test_catalog_row_count_and_values():
    rows = numeric_periods_catalog(2)
    assert [r.name for r in rows] == ["pi", "2*pi", "log 2"]
    assert abs(rows[0].value - math.pi) < 1e-10
    assert abs(rows[1].value - 2 * math.pi) < 1e-10
    assert all(r.error_estimate < 1e-10 for r in rows)


def test_catalog_log_against_series_oracle():
    # Alternating harmonic series, accelerated by iterated averaging of the
    # partial sums (exact rational arithmetic, error ~ 2^-60).
    partials = []
    acc = Fraction(0)
    for k in range(1, 61):
        acc += Fraction((-1) ** (k + 1), k)
        partials.append(acc)
    while len(partials) > 1:
        partials = [(partials[i] + partials[i + 1]) / 2 for i in range(len(partials) - 1)]
    oracle = float(partials[0])
    rows = numeric_periods_catalog(2)
    assert abs(rows[2].value - oracle) < 1e-10


def test_catalog_log_entries_cap():
    rows = numeric_periods_catalog(10**6)
    assert len(rows) == 22  # pi, 2*pi, and twenty logarithms
    assert rows[-1].name == "log 21"
    for row in rows[2:]:
        n = int(row.name.split()[1])
        assert abs(row.value - math.log(n)) < 1e-10


def test_catalog_bounds():
    with pytest.raises(ValueError):
        numeric_periods_catalog(1)
    with pytest.raises(ValueError):
        numeric_periods_catalog(10**6 + 1)
