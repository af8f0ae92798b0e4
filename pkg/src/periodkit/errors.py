"""Exception types shared across the toolkit.

Every domain error raised by the library derives from PeriodkitError, so
callers (in particular the CLI) can distinguish domain failures from
programming errors with a single except clause.
"""


class PeriodkitError(Exception):
    """Base class for all domain errors raised by periodkit."""


class MismatchedModulus(PeriodkitError):
    """Operands live over different prime fields."""


class DivisionByZero(PeriodkitError):
    """Inversion of the zero residue."""


class BadCongruence(PeriodkitError):
    """The prime fails a congruence precondition (e.g. p != 1 mod 4)."""


class TrivialCharacter(PeriodkitError):
    """A character identity was requested where one of the characters is trivial."""


class SingularCurve(PeriodkitError):
    """The Weierstrass cubic has a vanishing discriminant."""


class UnsupportedDegree(PeriodkitError):
    """Point counts are only implemented over the base field and its quadratic extension."""


class ComplexRoots(PeriodkitError):
    """Period computation requires all three cubic roots to be real."""


class QuadratureNoConvergence(PeriodkitError):
    """Adaptive quadrature failed to reach the requested absolute error."""


class DegenerateLattice(PeriodkitError):
    """The two alleged lattice generators are real-linearly dependent."""


class DegenerateFamilyMember(PeriodkitError):
    """Family parameter lands on a nodal member (t in {0, 1})."""


class PoleAtNonpositiveInteger(PeriodkitError):
    """Gamma (or Beta) was evaluated at a nonpositive-integer pole."""


class NonUnit(PeriodkitError):
    """A p-adic inversion or Teichmueller lift was requested for a non-unit."""


class MismatchedStructure(PeriodkitError):
    """p-adic operands disagree in prime or precision."""


class InsufficientPrecision(PeriodkitError):
    """The operation needs at least two p-adic digits."""
