"""Closed-form Jost functions, S-matrices, ladders and pole-skip catalogs.

Four potentials:

* one-pole model        S = -(k+ic)/(k-ic)
* Coulomb               V = (nu^2-1/4)/x^2 + e^2/x        (kappa = e^2/2k)
* 1/sinh^2 (PT1)        V = (nu^2-1/4)/sinh^2 x
* 1/cosh^2 (PT2)        V = -kappa(kappa-1)/cosh^2 x

Conventions: the regular solution is normalized by phi ~ x^{1/2+nu} at the
origin; f+/f- are the outgoing/incoming Jost solutions (e^{+-ikx} up to the
Coulomb log phase); F+- = W[f+-, phi] and S = F-/F+.  Complex powers of
(2 e^{-+ i pi/2} k) use arg = arg(k) -+ pi/2 with principal arg(k), which
keeps arg(2ikx) inside (-pi/2, 3pi/2) for x > 0.

Hitting a Gamma pole ladder raises PoleHit; hitting a pole and zero ladder
simultaneously raises IndeterminateRatio -- the pole-skipping signal.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import BranchPointAtZeroK, IndeterminateRatio, PoleHit
from .locator import PoleSkipPoint
from .specfun import gamma_ratio, hyp2f1, log_gamma, nonpositive_integer_distance

__all__ = [
    "OnePole",
    "Coulomb",
    "SinhSq",
    "CoshSq",
    "JostPair",
    "JostConvention",
    "LadderSpec",
    "phase_power",
    "one_pole_s",
    "coulomb_jost_plus",
    "coulomb_s",
    "coulomb_s_nu_kappa",
    "coulomb_phi_series",
    "pt1_jost_plus",
    "pt1_s",
    "pt1_phi",
    "pt1_f_minus_series",
    "pt1_f_minus",
    "pt1_f_minus_tail_coeff",
    "pt1_jost_solutions",
    "pt2_jost_plus",
    "pt2_s",
    "pt2_f_minus",
    "pt2_f_minus_u_coeff",
    "pt2_jost_solutions",
    "ladders",
    "pole_skip_catalog",
]

_TOL = 1e-12


def phase_power(k: complex, w: complex, sign: int) -> complex:
    """(2 e^{sign i pi/2} k)^w with arg fixed to arg(k) + sign*pi/2.

    sign=-1 gives the (2 e^{-i pi/2} k)^w of the Coulomb Jost function,
    sign=+1 its mirror; principal arg(k) keeps the zeta = 2ikx phase inside
    the (-pi/2, 3pi/2) sector used for the Whittaker asymptotics.
    """
    k = complex(k)
    if k == 0:
        raise BranchPointAtZeroK("complex power of 2k undefined at k=0")
    logval = math.log(2.0 * abs(k)) + 1j * (cmath.phase(k) + sign * math.pi / 2.0)
    return cmath.exp(complex(w) * logval)


# ---------------------------------------------------------------------------
# model parameter records


@dataclass(frozen=True)
class OnePole:
    """One-pole S-matrix model; c sets the pole position k = ic."""

    c: complex = 0.0

    tag = "onepole"


@dataclass(frozen=True)
class Coulomb:
    """Coulomb coupling e^2 with angular momentum nu = l + 1/2."""

    e2: complex = 1.0
    nu: complex = 0.5

    tag = "coulomb"


@dataclass(frozen=True)
class SinhSq:
    """PT1: (nu^2-1/4)/sinh^2 x, nu stored on the branch with phi ~ x^{1/2+nu}."""

    nu: complex = 1.0

    tag = "pt1"
    decay_rate = 2.0

    def sampler(self) -> Callable[[float], complex]:
        strength = complex(self.nu) ** 2 - 0.25
        return lambda x: strength / math.sinh(x) ** 2


@dataclass(frozen=True)
class CoshSq:
    """PT2: -kappa(kappa-1)/cosh^2 x, canonicalized to Re kappa >= 1/2.

    The potential is invariant under kappa -> 1-kappa, so the stored value
    is the representative with Re kappa >= 1/2.
    """

    kappa: complex = 1.0

    tag = "pt2"
    decay_rate = 2.0

    def __post_init__(self):
        if complex(self.kappa).real < 0.5:
            object.__setattr__(self, "kappa", 1.0 - complex(self.kappa))

    def sampler(self) -> Callable[[float], complex]:
        strength = -complex(self.kappa) * (complex(self.kappa) - 1.0)
        return lambda x: strength / math.cosh(x) ** 2


@dataclass(frozen=True)
class JostConvention:
    phi_normalization: str = "x^(1/2+nu)"
    asymptotic_phase: str = "plane-wave"
    coulomb_log_phase: bool = False


@dataclass
class JostPair:
    """(F+, F-) with the convention metadata; S = F-/F+ when F+ != 0."""

    f_plus: complex
    f_minus: complex
    convention: JostConvention = field(default_factory=JostConvention)

    @property
    def s(self) -> complex:
        if self.f_plus == 0:
            raise PoleHit("S undefined: F+ = 0")
        return self.f_minus / self.f_plus


# ---------------------------------------------------------------------------
# one-pole model


def one_pole_s(k: complex, c: complex) -> complex:
    """S = -(k+ic)/(k-ic).  The k->0 and c->0 limits do not commute."""
    k, c = complex(k), complex(c)
    num = k + 1j * c
    den = k - 1j * c
    if den == 0:
        if num == 0:
            raise IndeterminateRatio("one-pole S is 0/0 at k=c=0")
        raise PoleHit(f"one-pole S pole at k=ic={k}")
    return -num / den


# ---------------------------------------------------------------------------
# Coulomb


def coulomb_jost_plus(k: complex, nu: complex, e2: complex) -> complex:
    """F+ = (2 e^{-i pi/2} k)^{1/2-nu+i kappa} Gamma(2nu+1)/Gamma(nu+1/2+i kappa).

    Returns exactly 0 when the denominator Gamma sits on a pole (the Regge
    zero ladder of F+).  Raises BranchPointAtZeroK at k=0.
    """
    k, nu, e2 = complex(k), complex(nu), complex(e2)
    if k == 0:
        raise BranchPointAtZeroK("Coulomb Jost function has a branch point at k=0")
    kappa = e2 / (2.0 * k)
    pref = phase_power(k, 0.5 - nu + 1j * kappa, -1)
    return pref * gamma_ratio([2.0 * nu + 1.0], [nu + 0.5 + 1j * kappa])


def coulomb_s_nu_kappa(nu: complex, kappa: complex, k: complex = 1.0) -> complex:
    """S in the (nu, kappa) plane; k only enters the regular prefactor.

    S = e^{-i pi (nu-1/2)} (2k)^{-2 i kappa} G(nu+1/2+i kappa)/G(nu+1/2-i kappa).
    """
    nu, kappa, k = complex(nu), complex(kappa), complex(k)
    if k == 0:
        raise BranchPointAtZeroK("Coulomb S has a branch point at k=0")
    ratio = gamma_ratio([nu + 0.5 + 1j * kappa], [nu + 0.5 - 1j * kappa])
    pref = cmath.exp(-1j * math.pi * (nu - 0.5)) * cmath.exp(-2j * kappa * cmath.log(2.0 * k))
    return pref * ratio


def coulomb_s(k: complex, nu: complex, e2: complex) -> complex:
    """Coulomb S-matrix at physical coupling: kappa = e^2/(2k) is derived."""
    k = complex(k)
    if k == 0:
        raise BranchPointAtZeroK("Coulomb S has a branch point at k=0")
    return coulomb_s_nu_kappa(nu, complex(e2) / (2.0 * k), k)


def coulomb_phi_series(k: complex, nu: complex, e2: complex, order: int = 2) -> list[complex]:
    """Leading x=0 series coefficients of phi/x^{nu+1/2}: [1, psi_1, psi_2].

    psi_1 = 2 k kappa/(1+2nu), psi_2 = -k^2 (1+2nu-4 kappa^2)/(4(1+2nu)(1+nu)).
    Raises IndeterminateRatio when a coefficient takes the 0/0 form.
    """
    k, nu, e2 = complex(k), complex(nu), complex(e2)
    kappa = e2 / (2.0 * k)
    out = [1.0 + 0.0j]
    if order >= 1:
        den = 1.0 + 2.0 * nu
        num = 2.0 * k * kappa
        if abs(den) < _TOL:
            if abs(num) < _TOL:
                raise IndeterminateRatio("psi_1 is 0/0")
            raise PoleHit("psi_1 diverges: 1+2nu = 0")
        out.append(num / den)
    if order >= 2:
        den = 4.0 * (1.0 + 2.0 * nu) * (1.0 + nu)
        num = -k * k * (1.0 + 2.0 * nu - 4.0 * kappa**2)
        if abs(den) < _TOL:
            if abs(num) < _TOL:
                raise IndeterminateRatio("psi_2 is 0/0")
            raise PoleHit("psi_2 diverges")
        out.append(num / den)
    return out


# ---------------------------------------------------------------------------
# PT1: (nu^2 - 1/4)/sinh^2 x


def pt1_jost_plus(k: complex, nu: complex) -> complex:
    """F+ = 2^{nu+1/2}/sqrt(pi) * G(1+nu) G(1-ik) / G(nu+1/2-ik)."""
    k, nu = complex(k), complex(nu)
    pref = cmath.exp((nu + 0.5) * math.log(2.0)) / math.sqrt(math.pi)
    return pref * gamma_ratio([1.0 + nu, 1.0 - 1j * k], [nu + 0.5 - 1j * k])


def pt1_s(k: complex, nu: complex) -> complex:
    """S = - G(nu+1/2-ik) G(ik) / (G(nu+1/2+ik) G(-ik))."""
    k, nu = complex(k), complex(nu)
    return -gamma_ratio([nu + 0.5 - 1j * k, 1j * k], [nu + 0.5 + 1j * k, -1j * k])


def pt1_phi(k: complex, nu: complex, x: float) -> tuple[complex, complex]:
    """Regular solution (phi, phi') from the hypergeometric representation.

    phi = (1-u^2)^{-ik/2} u^{nu+1/2} 2F1(a, b; 1+nu; u^2), u = tanh x, with
    a = 1/4 - ik/2 + nu/2 and b = a + 1/2.
    """
    k, nu = complex(k), complex(nu)
    u = math.tanh(x)
    z = u * u
    a = 0.25 - 0.5j * k + 0.5 * nu
    b = 0.75 - 0.5j * k + 0.5 * nu
    c = 1.0 + nu
    F = hyp2f1(a, b, c, z)
    dF = (a * b / c) * hyp2f1(a + 1, b + 1, c + 1, z)
    sech2 = 1.0 - z
    pw = sech2 ** (-0.5j * k)
    up = u ** (nu + 0.5) if u != 0 else (0.0 if (nu + 0.5).real > 0 else math.inf)
    phi = pw * up * F
    # d/dx: u' = 1-u^2;  d(1-u^2)^q = -2qu(1-u^2)^q dx;  dz = 2u(1-u^2) dx
    dphi = pw * up * (
        (-2.0 * (-0.5j * k) * u) * F
        + ((nu + 0.5) * (1.0 - z) / u) * F
        + 2.0 * u * (1.0 - z) * dF
    )
    return phi, dphi


def pt1_f_minus(k: complex, nu: complex, x: float) -> tuple[complex, complex]:
    """Incoming Jost solution (f-, f-') for PT1, valid for x > 0.

    f- = (1-w)^{1/2-nu} e^{-ikx} 2F1(1/2-nu, 1/2-nu+ik; 1+ik; w), w = e^{-2x}.
    """
    k, nu = complex(k), complex(nu)
    if x <= 0:
        raise ValueError("f- series representation requires x > 0")
    w = math.exp(-2.0 * x)
    a = 0.5 - nu
    b = 0.5 - nu + 1j * k
    c = 1.0 + 1j * k
    F = hyp2f1(a, b, c, w)
    dF = (a * b / c) * hyp2f1(a + 1, b + 1, c + 1, w)
    pw = (1.0 - w) ** (0.5 - nu)
    ex = cmath.exp(-1j * k * x)
    f = pw * ex * F
    # dw/dx = -2w;  d(1-w)^p/dx = p (1-w)^{p-1} * 2w
    df = ex * (
        (0.5 - nu) * pw / (1.0 - w) * 2.0 * w * F
        - 1j * k * pw * F
        + pw * dF * (-2.0 * w)
    )
    return f, df


def pt1_f_minus_series(k: complex, nu: complex, x: float) -> complex:
    """f-(x) alone; see pt1_f_minus."""
    return pt1_f_minus(k, nu, x)[0]


def pt1_f_minus_tail_coeff(k: complex, nu: complex) -> complex:
    """O(e^{-2x}) coefficient of f- e^{ikx}:  -i(4 nu^2 - 1)/(4(k - i)).

    Raises IndeterminateRatio at its 0/0 points (k, nu) = (i, +-1/2).
    """
    k, nu = complex(k), complex(nu)
    num = -1j * (4.0 * nu * nu - 1.0)
    den = 4.0 * (k - 1j)
    if abs(den) < _TOL:
        if abs(num) < _TOL:
            raise IndeterminateRatio("f- tail coefficient is 0/0 at (k,nu)=(i,+-1/2)")
        raise PoleHit("f- tail coefficient diverges at k=i")
    return num / den


def pt1_jost_solutions(k: complex, nu: complex):
    """(f_plus_at, f_minus_at): callables x -> (value, derivative).

    f+ is f- continued k -> -k (both are defined by their e^{+-ikx}
    asymptotics for the same potential).
    """
    k, nu = complex(k), complex(nu)

    def f_plus_at(x: float):
        return pt1_f_minus(-k, nu, x)

    def f_minus_at(x: float):
        return pt1_f_minus(k, nu, x)

    return f_plus_at, f_minus_at


# ---------------------------------------------------------------------------
# PT2: -kappa(kappa-1)/cosh^2 x


def pt2_jost_plus(k: complex, kappa: complex) -> complex:
    """F+ = lim_{x->0} f+ = 2^{ik} sqrt(pi) G(1-ik) / (G((2-ik-kappa)/2) G((1-ik+kappa)/2))."""
    k, kappa = complex(k), complex(kappa)
    pref = cmath.exp(1j * k * math.log(2.0)) * math.sqrt(math.pi)
    return pref * gamma_ratio(
        [1.0 - 1j * k],
        [(2.0 - 1j * k - kappa) / 2.0, (1.0 - 1j * k + kappa) / 2.0],
    )


def pt2_s(k: complex, kappa: complex) -> complex:
    """S = 2^{-2ik} G((2-ik-k)/2) G((1-ik+k)/2) G(1+ik) / (mirror with k -> -k)."""
    k, kappa = complex(k), complex(kappa)
    pref = cmath.exp(-2j * k * math.log(2.0))
    return pref * gamma_ratio(
        [(2.0 - 1j * k - kappa) / 2.0, (1.0 - 1j * k + kappa) / 2.0, 1.0 + 1j * k],
        [(2.0 + 1j * k - kappa) / 2.0, (1.0 + 1j * k + kappa) / 2.0, 1.0 - 1j * k],
    )


def pt2_f_minus(k: complex, kappa: complex, x: float) -> tuple[complex, complex]:
    """Incoming Jost solution (f-, f-') for PT2.

    f- = u^{ik/2} (1-u)^{-ik/2} 2F1(kappa, 1-kappa; 1+ik; u), u = (1-tanh x)/2.
    """
    k, kappa = complex(k), complex(kappa)
    u = 0.5 * (1.0 - math.tanh(x))
    a, b, c = kappa, 1.0 - kappa, 1.0 + 1j * k
    F = hyp2f1(a, b, c, u)
    dF = (a * b / c) * hyp2f1(a + 1, b + 1, c + 1, u)
    pw = u ** (0.5j * k) * (1.0 - u) ** (-0.5j * k)
    f = pw * F
    # du/dx = -2u(1-u)
    dlog_pw = (0.5j * k) * (-2.0 * (1.0 - u)) + (-0.5j * k) * (2.0 * u)
    df = pw * (dlog_pw * F + dF * (-2.0 * u * (1.0 - u)))
    return f, df


def pt2_f_minus_u_coeff(k: complex, kappa: complex) -> complex:
    """O(u) coefficient of f- u^{-ik/2}:  [k(ik+1) + 2i kappa(kappa-1)]/(2(k-i)).

    Raises IndeterminateRatio at the 0/0 point (k, kappa) = (i, 1).
    """
    k, kappa = complex(k), complex(kappa)
    num = k * (1j * k + 1.0) + 2j * kappa * (kappa - 1.0)
    den = 2.0 * (k - 1j)
    if abs(den) < _TOL:
        if abs(num) < _TOL:
            raise IndeterminateRatio("f- u-coefficient is 0/0 at (k,kappa)=(i,1)")
        raise PoleHit("f- u-coefficient diverges at k=i")
    return num / den


def pt2_jost_solutions(k: complex, kappa: complex):
    """(f_plus_at, f_minus_at) callables x -> (value, derivative); f+ = f-(k -> -k)."""
    k, kappa = complex(k), complex(kappa)

    def f_plus_at(x: float):
        return pt2_f_minus(-k, kappa, x)

    def f_minus_at(x: float):
        return pt2_f_minus(k, kappa, x)

    return f_plus_at, f_minus_at


# ---------------------------------------------------------------------------
# ladders and catalogs


@dataclass(frozen=True)
class LadderSpec:
    """One pole or zero ladder: affine generator plus its Gamma argument.

    ``generator(n, param)`` returns the second coordinate (k, or kappa for
    Coulomb) at ladder index n given the model parameter (nu or kappa).
    ``gamma_arg(param, second)`` is the Gamma-function argument whose
    nonpositive integers define the ladder.
    """

    label: str
    kind: str  # 'pole' | 'zero'
    redundant: bool
    axis: str  # what generator returns: 'k' or 'kappa'
    generator: Callable[[int, complex], complex]
    gamma_arg: Callable[[complex, complex], complex]


def ladders(model) -> list[LadderSpec]:
    """Pole/zero ladder specs for Coulomb, SinhSq or CoshSq."""
    if isinstance(model, Coulomb):
        return [
            LadderSpec("Pole", "pole", False, "kappa",
                       lambda n, nu: 1j * (nu + 0.5 + n),
                       lambda nu, kap: nu + 0.5 + 1j * kap),
            LadderSpec("Zero", "zero", False, "kappa",
                       lambda n, nu: -1j * (nu + 0.5 + n),
                       lambda nu, kap: nu + 0.5 - 1j * kap),
        ]
    if isinstance(model, SinhSq):
        return [
            LadderSpec("Pole1", "pole", False, "k",
                       lambda n, nu: -1j * (n + nu + 0.5),
                       lambda nu, k: nu + 0.5 - 1j * k),
            LadderSpec("Pole2", "pole", True, "k",
                       lambda n, nu: 1j * (n + 1.0),
                       lambda nu, k: 1j * k),
            LadderSpec("Zero1", "zero", False, "k",
                       lambda n, nu: 1j * (n + nu + 0.5),
                       lambda nu, k: nu + 0.5 + 1j * k),
            LadderSpec("Zero2", "zero", True, "k",
                       lambda n, nu: -1j * (n + 1.0),
                       lambda nu, k: -1j * k),
        ]
    if isinstance(model, CoshSq):
        return [
            LadderSpec("Pole1", "pole", False, "k",
                       lambda n, kap: 1j * (kap - 2.0 - 2.0 * n),
                       lambda kap, k: (2.0 - 1j * k - kap) / 2.0),
            LadderSpec("Pole2", "pole", False, "k",
                       lambda n, kap: -1j * (kap + 1.0 + 2.0 * n),
                       lambda kap, k: (1.0 - 1j * k + kap) / 2.0),
            LadderSpec("Pole3", "pole", True, "k",
                       lambda n, kap: 1j * (n + 1.0),
                       lambda kap, k: 1.0 + 1j * k),
            LadderSpec("Zero1", "zero", False, "k",
                       lambda n, kap: -1j * (kap - 2.0 - 2.0 * n),
                       lambda kap, k: (2.0 + 1j * k - kap) / 2.0),
            LadderSpec("Zero2", "zero", False, "k",
                       lambda n, kap: 1j * (kap + 1.0 + 2.0 * n),
                       lambda kap, k: (1.0 + 1j * k + kap) / 2.0),
            LadderSpec("Zero3", "zero", True, "k",
                       lambda n, kap: -1j * (n + 1.0),
                       lambda kap, k: 1.0 - 1j * k),
        ]
    raise ValueError(f"no ladder catalog for model {model!r}")


def _sort_catalog(points: list[PoleSkipPoint]) -> list[PoleSkipPoint]:
    # deterministic CLI ordering: ascending n, then Im k, then Re/Im param
    return sorted(points, key=lambda p: (
        p.n if p.n is not None else -1,
        round(p.point[1].imag, 12),
        round(p.point[0].real, 12),
        round(p.point[0].imag, 12),
        round(p.point[1].real, 12),
    ))


def pole_skip_catalog(model, n_max: int = 3) -> list[PoleSkipPoint]:
    """Upper-half-plane pole-skipping points with the coincidence exclusions.

    ``n_max`` bounds the generation index of each ladder family (n_max
    generations per family); each point's ``n`` records its series-criterion
    order where defined.  The exclusion rules: SinhSq Pole1-Zero1 intersections
    with n_p + n_z even collapse to k=0 (otherwise they coincide with Pole2);
    CoshSq Pole1-Zero2 and Pole2-Zero1 can never coincide, CoshSq Pole1-Zero1
    survives only at n_p = n_z (else Pole3 doubles the pole), and Pole2-Zero2
    would need kappa < 0.  Points at k=0 are tagged series_invisible.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    pts: list[PoleSkipPoint] = []
    if isinstance(model, OnePole):
        return [PoleSkipPoint(axes=("c", "k"), point=(0j, 0j), n=0,
                              pole_family="pole", zero_family="zero",
                              pole_kind="threshold", redundant=False)]
    if isinstance(model, Coulomb):
        for n in range(1, n_max + 1):
            for n_p in range(n):
                n_z = n - 1 - n_p
                nu = complex(-n / 2.0)
                kap = -0.5j * (n_z - n_p)
                pts.append(PoleSkipPoint(
                    axes=("nu", "kappa"), point=(nu, kap), n=n,
                    pole_family=f"Pole(n_p={n_p})", zero_family=f"Zero(n_z={n_z})",
                    pole_kind="regge", redundant=False))
        return _sort_catalog(pts)
    if isinstance(model, SinhSq):
        # (i) Pole1-Zero1, n_p+n_z = 2n+1 odd (even coincides with Pole2 unless k=0)
        for n in range(n_max):
            nu = complex(-(n + 1.0))
            for n_p in range(n + 1):
                k = 1j * (n - n_p + 0.5)
                pts.append(PoleSkipPoint(
                    axes=("nu", "k"), point=(nu, k), n=2 * (n + 1),
                    pole_family="Pole1", zero_family="Zero1",
                    pole_kind="bound", redundant=False))
        # (i) special case n_p = n_z: k = 0
        for n_p in range(n_max):
            pts.append(PoleSkipPoint(
                axes=("nu", "k"), point=(complex(-(n_p + 0.5)), 0j), n=2 * n_p + 1,
                pole_family="Pole1", zero_family="Zero1",
                pole_kind="threshold", redundant=False, series_invisible=True))
        # (ii) Pole2-Zero1: k = i(n_p'+1), nu = n-1/2, -n_p' <= n <= n_p'+1
        for n_p in range(n_max):
            k = 1j * (n_p + 1.0)
            for n in range(-n_p, n_p + 2):
                pts.append(PoleSkipPoint(
                    axes=("nu", "k"), point=(complex(n - 0.5), k), n=n_p + 1,
                    pole_family="Pole2", zero_family="Zero1",
                    pole_kind="redundant", redundant=True))
        return _sort_catalog(pts)
    if isinstance(model, CoshSq):
        # (i) Pole1-Zero1 survives only n_p = n_z: k=0, kappa = 2 n_p + 2
        for n_p in range(n_max):
            pts.append(PoleSkipPoint(
                axes=("kappa", "k"), point=(complex(2.0 * n_p + 2.0), 0j), n=n_p + 1,
                pole_family="Pole1", zero_family="Zero1",
                pole_kind="threshold", redundant=False, series_invisible=True))
        # (iii)+(iv) merged: k = ni, kappa = 1..n (kappa >= 1/2 filter built in)
        for n in range(1, n_max + 1):
            for m in range(1, n + 1):
                zero_family = "Zero1" if (n - m) % 2 == 0 else "Zero2"
                pts.append(PoleSkipPoint(
                    axes=("kappa", "k"), point=(complex(m), 1j * n), n=n,
                    pole_family="Pole3", zero_family=zero_family,
                    pole_kind="redundant", redundant=True))
        return _sort_catalog(pts)
    raise ValueError(f"no pole-skip catalog for model {model!r}")
