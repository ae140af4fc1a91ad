"""Exception types shared across the library.

Several of these are "informative outcomes" rather than failures: hitting a
Gamma pole ladder or a 0/0 point is exactly what the pole-skip machinery
looks for, so callers routinely catch them and record the hit.
"""


class PoleSkipError(Exception):
    """Base class for all library errors."""


class PoleAtNonpositiveInteger(PoleSkipError):
    """Gamma evaluated at (or within tolerance of) a nonpositive integer.

    Carries the integer ``n`` such that z is close to -n.  For S-matrix
    quotients this signals a pole/zero ladder hit.
    """

    def __init__(self, z, n):
        self.z = complex(z)
        self.n = int(n)
        super().__init__(f"gamma pole: z={self.z} within tolerance of -{self.n}")


class PoleHit(PoleSkipError):
    """An S-matrix (or ratio) evaluation landed on a pole, one-sided.

    ``hits`` lists (argument, n) pairs for the Gamma arguments that reached
    a nonpositive integer -n.
    """

    def __init__(self, msg="pole of S", hits=()):
        self.hits = tuple(hits)
        super().__init__(msg)


class IndeterminateRatio(PoleSkipError):
    """0/0: pole and zero coincide.  The pole-skipping signal.

    ``numerator_hits`` / ``denominator_hits`` list (argument, n) pairs of
    Gamma arguments that reached nonpositive integers on each side.
    """

    def __init__(self, msg="indeterminate 0/0 ratio", numerator_hits=(), denominator_hits=()):
        self.numerator_hits = tuple(numerator_hits)
        self.denominator_hits = tuple(denominator_hits)
        super().__init__(msg)


class IllDefinedC(PoleSkipError):
    """2F1 called with c equal to a nonpositive integer."""


class ConnectionDegenerate(PoleSkipError):
    """The z -> 1-z connection formula degenerated beyond repair.

    Integer c-a-b is normally handled internally by an epsilon perturbation;
    this is raised only if that fallback produces inconsistent values.
    """


class IllDefinedOrder(PoleSkipError):
    """Whittaker M with 2*nu a negative integer."""

    def __init__(self, two_nu):
        self.two_nu = complex(two_nu)
        super().__init__(f"whittaker_m ill-defined: 2*nu={self.two_nu} is a negative integer")


class BranchPointAtZeroK(PoleSkipError):
    """Coulomb Jost function requested at k=0 (branch point)."""


class Breakdown(PoleSkipError):
    """Frobenius recursion hit m(m+2nu)=0 with an inconsistent right side.

    ``order`` is the series order m, ``residual`` the nonzero right side.
    """

    def __init__(self, order, residual):
        self.order = int(order)
        self.residual = residual
        super().__init__(f"series recursion breaks down at order {order}, residual {residual}")


class NoRootInWindow(PoleSkipError):
    """Determinant root scan found no root inside the requested window."""


class StiffnessFailure(PoleSkipError):
    """ODE integration failed to meet its tolerance."""


class OriginSingularityTooStrong(PoleSkipError):
    """Potential is not centrifugal-plus-bounded at the origin."""


class TailNotReached(PoleSkipError):
    """Potential has not decayed below the tail threshold within the x budget."""


class WronskianDrift(PoleSkipError):
    """Jost Wronskian changed beyond tolerance between matching points."""

    def __init__(self, drift, tol):
        self.drift = float(drift)
        self.tol = float(tol)
        super().__init__(f"Wronskian drift {drift:.3e} exceeds {tol:.3e}")


class NoConvergence(PoleSkipError):
    """Newton iteration did not converge within the iteration budget."""


class DegenerateDoubleZero(PoleSkipError):
    """Pole or zero of multiplicity >= 2 at the located point; skip cancels."""


class FitDegenerate(PoleSkipError):
    """Mobius slope fit residual too large or rank-deficient: not a skip."""


class AmbiguousWinding(PoleSkipError):
    """|F| dipped below threshold on the winding contour."""


class SymmetryViolation(PoleSkipError):
    """Mirrored pole-skip point not found where S(k)S(-k)=1 requires it."""


class HorizonDegeneracy(PoleSkipError):
    """Metric function has F'(horizon)=0 (extremal); outside supported scope."""
