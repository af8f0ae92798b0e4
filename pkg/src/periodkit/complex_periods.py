"""Period lattices of rational elliptic curves, tau-invariants, the Legendre
family period map, and the catalog of elementary numeric periods.

Two independent evaluations of the lattice generators are provided: adaptive
quadrature of the defining integrals (the reference definition) and the
arithmetic-geometric mean (the fast path).  For y^2 = f(x) with three real
roots e1 > e2 > e3 and f monic:

    omega1 = 2 * Int_{e1}^{inf} dx / sqrt(f(x))        (real, positive)
    omega2 = 2i * Int_{e2}^{e1} dx / sqrt(-f(x))       (purely imaginary)

Endpoint singularities are removed exactly by the substitution
x = endpoint +/- u^2 before any quadrature runs.  Only the 3-real-root case
is supported; the complex-root AGM branch choice is out of scope.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from scipy import integrate

from .errors import (
    ComplexRoots,
    DegenerateFamilyMember,
    DegenerateLattice,
    QuadratureNoConvergence,
    SingularCurve,
)

QUAD_TARGET = 1e-11
_TAU_CAP = 10_000

Matrix = tuple[tuple[int, int], tuple[int, int]]

_IDENTITY: Matrix = ((1, 0), (0, 1))


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("curve coefficients must be exact rationals, not floats")
    return Fraction(x)


class EllipticCurveQ:
    """y^2 = x^3 + a*x + b with exact rational a, b; 4a^3 + 27b^2 != 0."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = _as_fraction(a)
        b = _as_fraction(b)
        if 4 * a**3 + 27 * b**2 == 0:
            raise SingularCurve(f"4a^3 + 27b^2 = 0 for (a, b) = ({a}, {b})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("EllipticCurveQ is immutable")

    @property
    def discriminant(self) -> Fraction:
        """Cubic discriminant -4a^3 - 27b^2; its exact sign decides the root split."""
        return -4 * self.a**3 - 27 * self.b**2

    def __repr__(self):
        return f"EllipticCurveQ(a={self.a}, b={self.b})"


@dataclass(frozen=True)
class PeriodLattice:
    """Generators with omega1 real > 0 and Im(omega2/omega1) > 0."""

    omega1: complex
    omega2: complex
    method: str


@dataclass(frozen=True)
class TauPoint:
    """Reduced tau in the closed fundamental domain, plus the SL2(Z) word.

    transform = ((a, b), (c, d)) with det 1 satisfies
    tau = (a*tau0 + b) / (c*tau0 + d) for the starting ratio tau0.
    """

    tau: complex
    transform: Matrix


def _newton_polish(x: float, a: float, b: float) -> float:
    for _ in range(60):
        f = (x * x + a) * x + b
        df = 3 * x * x + a
        if df == 0:
            break
        step = f / df
        x -= step
        if abs(step) <= 1e-15 * max(abs(x), 1.0):
            break
    return x


def real_roots(curve: EllipticCurveQ) -> list[float]:
    """Real roots of x^3 + a*x + b, closed form plus Newton polish.

    Returns [e1, e2, e3] sorted descending when the exact discriminant is
    positive, else the single real root as a one-element list.
    """
    a = float(curve.a)
    b = float(curve.b)
    if curve.discriminant > 0:
        # Three distinct real roots force a < 0; trigonometric form.
        m = 2.0 * math.sqrt(-a / 3.0)
        arg = 3.0 * b / (a * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg)
        roots = [m * math.cos((theta + 2.0 * math.pi * k) / 3.0) for k in range(3)]
        roots = sorted((_newton_polish(r, a, b) for r in roots), reverse=True)
        return roots
    # One real root: Cardano with stable cube roots.
    half_q = b / 2.0
    inner = math.sqrt(half_q * half_q + (a / 3.0) ** 3)
    u = math.copysign(abs(-half_q + inner) ** (1.0 / 3.0), -half_q + inner)
    v = math.copysign(abs(-half_q - inner) ** (1.0 / 3.0), -half_q - inner)
    return [_newton_polish(u + v, a, b)]


def _quad(f: Callable[[float], float], lo: float, hi: float) -> tuple[float, float]:
    """scipy adaptive Gauss-Kronrod run with a hard failure on non-convergence."""
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, err = integrate.quad(f, lo, hi, epsabs=QUAD_TARGET / 10, epsrel=1e-13, limit=200)
        except integrate.IntegrationWarning as exc:
            raise QuadratureNoConvergence(str(exc)) from exc
    if err > QUAD_TARGET:
        raise QuadratureNoConvergence(f"error estimate {err:.3e} above target {QUAD_TARGET:.1e}")
    return value, err


def _require_three_real(curve: EllipticCurveQ) -> tuple[float, float, float]:
    roots = real_roots(curve)
    if len(roots) != 3:
        raise ComplexRoots(f"{curve!r} has one real root; period support needs three")
    return roots[0], roots[1], roots[2]


def periods_quadrature(curve: EllipticCurveQ) -> PeriodLattice:
    """Lattice generators straight from the defining integrals (the oracle)."""
    e1, e2, e3 = _require_three_real(curve)

    # x = e1 + u^2 turns 2*Int_{e1}^inf dx/sqrt(f) into a smooth integrand.
    def on_real_cycle(u: float) -> float:
        return 2.0 / math.sqrt((u * u + e1 - e2) * (u * u + e1 - e3))

    omega1, _ = _quad(on_real_cycle, 0.0, math.inf)

    # On (e2, e1) split at the midpoint; x = e2 + u^2 and x = e1 - u^2.
    mid = 0.5 * (e1 + e2)

    def above_e2(u: float) -> float:
        return 2.0 / math.sqrt((e1 - e2 - u * u) * (u * u + e2 - e3))

    def below_e1(u: float) -> float:
        return 2.0 / math.sqrt((e1 - e2 - u * u) * (e1 - e3 - u * u))

    lower, _ = _quad(above_e2, 0.0, math.sqrt(mid - e2))
    upper, _ = _quad(below_e1, 0.0, math.sqrt(e1 - mid))
    return PeriodLattice(
        omega1=complex(2.0 * omega1, 0.0),
        omega2=complex(0.0, 2.0 * (lower + upper)),
        method="quadrature",
    )


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of positive reals, iterated to fixed point."""
    if a <= 0 or b <= 0:
        raise ValueError("agm needs positive arguments")
    for _ in range(64):
        if abs(a - b) <= 1e-17 * abs(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def periods_agm(curve: EllipticCurveQ) -> PeriodLattice:
    """Same generators through the AGM; agrees with quadrature within 1e-9."""
    e1, e2, e3 = _require_three_real(curve)
    s13 = math.sqrt(e1 - e3)
    omega1 = 2.0 * math.pi / agm(s13, math.sqrt(e1 - e2))
    omega2 = 2.0 * math.pi / agm(s13, math.sqrt(e2 - e3))
    return PeriodLattice(omega1=complex(omega1, 0.0), omega2=complex(0.0, omega2), method="agm")


def _matmul(m: Matrix, n: Matrix) -> Matrix:
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def apply_transform(m: Matrix, tau: complex) -> complex:
    (a, b), (c, d) = m
    return (a * tau + b) / (c * tau + d)


def invert_transform(m: Matrix) -> Matrix:
    (a, b), (c, d) = m
    return ((d, -b), (-c, a))  # det 1


def tau_normalize(lattice: PeriodLattice) -> TauPoint:
    """SL2(Z) reduction of omega2/omega1 into the standard fundamental domain.

    Ties on the boundary are broken to Re(tau) in [0, 1/2], and to
    Re(tau) >= 0 on the unit circle.
    """
    if lattice.omega1 == 0:
        raise DegenerateLattice("omega1 vanishes")
    tau = lattice.omega2 / lattice.omega1
    if abs(tau.imag) < 1e-13:
        raise DegenerateLattice(f"Im(omega2/omega1) = {tau.imag:.3e} is numerically zero")
    if tau.imag < 0:
        tau = tau.conjugate()
    transform: Matrix = _IDENTITY
    for _ in range(_TAU_CAP):
        shift = math.floor(tau.real + 0.5)
        if shift != 0:
            tau -= shift
            transform = _matmul(((1, -shift), (0, 1)), transform)
        if abs(tau) < 1.0 - 1e-15:
            tau = -1.0 / tau
            transform = _matmul(((0, -1), (1, 0)), transform)
        else:
            break
    else:
        raise DegenerateLattice(f"reduction did not terminate within {_TAU_CAP} steps")
    # Boundary conventions.
    if abs(tau.real + 0.5) < 1e-12:
        tau += 1.0
        transform = _matmul(((1, 1), (0, 1)), transform)
    if abs(abs(tau) - 1.0) < 1e-12 and tau.real < -1e-12:
        tau = -1.0 / tau
        transform = _matmul(((0, -1), (1, 0)), transform)
    return TauPoint(tau=tau, transform=transform)


def curve_tau(curve: EllipticCurveQ, method: str = "agm") -> TauPoint:
    lattice = periods_agm(curve) if method == "agm" else periods_quadrature(curve)
    return tau_normalize(lattice)


def legendre_curve(t: Fraction) -> EllipticCurveQ:
    """y^2 = x(x-1)(x-t) brought to depressed form by the exact shift x -> x + (1+t)/3."""
    t = _as_fraction(t)
    if t == 0 or t == 1:
        raise DegenerateFamilyMember(f"t = {t} is a nodal member of the family")
    # x(x-1)(x-t) = x^3 - (1+t)x^2 + tx; shifting by s = (1+t)/3 kills the x^2 term.
    s = (1 + t) / 3
    a = 3 * s * s - 2 * (1 + t) * s + t
    b = s**3 - (1 + t) * s * s + t * s
    return EllipticCurveQ(a, b)


def period_map_legendre(t_values: Iterable[Fraction]) -> list[tuple[Fraction, TauPoint]]:
    """Reduced tau(t) for the Legendre family members, sorted by t."""
    ts = sorted(_as_fraction(t) for t in t_values)
    return [(t, curve_tau(legendre_curve(t))) for t in ts]


@dataclass(frozen=True)
class CatalogEntry:
    """One elementary numeric period with its defining quadruple spelled out."""

    name: str
    value: float
    error_estimate: float
    variety: str
    divisor: str
    form: str
    domain: str


def numeric_periods_catalog(n_max: int) -> list[CatalogEntry]:
    """pi, the circle residue modulus 2*pi, and log n for n = 2..n_max (<= 20 rows).

    Every value comes out of a quadrature run, never a math-library constant,
    so the catalog doubles as an end-to-end check of the integration path.
    """
    if not 2 <= n_max <= 10**6:
        raise ValueError(f"n_max must be in [2, 10^6], got {n_max}")
    entries = []

    # Int_{-1}^{1} dx/sqrt(1-x^2): fold to [0, 1] and substitute x = 1 - u^2.
    half_circle, err = _quad(lambda u: 2.0 / math.sqrt(2.0 - u * u), 0.0, 1.0)
    entries.append(
        CatalogEntry(
            name="pi",
            value=2.0 * half_circle,
            error_estimate=2.0 * err,
            variety="unit circle x^2 + y^2 = 1",
            divisor="(none)",
            form="dx/y",
            domain="arc y >= 0 traversed from x = -1 to x = 1, both halves",
        )
    )

    # |dz/z| along z(theta) = cos(theta) + i sin(theta).
    def speed(theta: float) -> float:
        z = complex(math.cos(theta), math.sin(theta))
        dz = complex(-math.sin(theta), math.cos(theta))
        return abs(dz / z)

    residue, err = _quad(speed, 0.0, 2.0 * math.pi)
    entries.append(
        CatalogEntry(
            name="2*pi",
            value=residue,
            error_estimate=err,
            variety="punctured affine line, coordinate z != 0",
            divisor="(none)",
            form="dz/z (residue period 2*pi*i; modulus tabulated)",
            domain="unit circle, counterclockwise",
        )
    )

    for n in range(2, n_max + 1):
        if len(entries) >= 22:  # pi + 2*pi + 20 logarithm rows
            break
        value, err = _quad(lambda x: 1.0 / x, 1.0, float(n))
        entries.append(
            CatalogEntry(
                name=f"log {n}",
                value=value,
                error_estimate=err,
                variety="punctured affine line, coordinate x != 0",
                divisor=f"{{1, {n}}}",
                form="dx/x",
                domain=f"segment [1, {n}]",
            )
        )
    return entries
