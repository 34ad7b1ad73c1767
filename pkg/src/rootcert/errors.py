"""Exception hierarchy shared across the package."""


class RootCertError(Exception):
    """Base class for all errors raised by rootcert."""


class LeadingCoefficientZero(RootCertError):
    """The leading coefficient of a polynomial is zero."""


class DegreeMismatch(RootCertError):
    """Vector length does not match the polynomial degree."""


class NonDistinctComponents(RootCertError):
    """An approximation vector has two (exactly) equal components."""


class BadExponent(RootCertError):
    """p-norm exponent outside [1, inf]."""


class EvaluationPointCollision(RootCertError):
    """A sigma-type sum was requested at a point equal to some x_j."""


class OutsideDomain(RootCertError):
    """An Ehrlich denominator vanishes: x lies outside the iteration domain."""


class NotCertified(RootCertError):
    """A bound was requested without a valid certificate at that point."""


class UnsupportedCombination(RootCertError):
    """The requested (method, p) combination is not covered by the theory."""


class SingularJacobian(RootCertError):
    """The finite-difference Jacobian of the Viete system is singular."""
