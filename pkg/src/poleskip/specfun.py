"""Complex special functions for closed-form Jost functions and S-matrices.

Everything here is double precision.  Accuracy contracts (checked in the
test suite against arbitrary-precision oracles):

* ``gamma``        relative error <= 1e-12 on |z| <= 50
* ``gamma_ratio``  log-Gamma differences, overflow-free for |z| <= 1e3
* ``hyp2f1``       relative error <= 1e-10 on the |z| <= 1 region of use
* ``whittaker_m``  relative error <= 1e-10 for moderate |zeta|
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    ConnectionDegenerate,
    IllDefinedC,
    IllDefinedOrder,
    IndeterminateRatio,
    PoleAtNonpositiveInteger,
    PoleHit,
)

__all__ = [
    "BranchConvention",
    "gamma",
    "log_gamma",
    "gamma_ratio",
    "hyp2f1",
    "whittaker_m",
    "nonpositive_integer_distance",
]

_POLE_TOL = 1e-12

# Lanczos rational approximation, g = 607/128, 15 coefficients (Godfrey's
# set).  Worst relative error measured against a 40-digit oracle on
# |z| <= 50 is ~4e-14, comfortably inside the 1e-12 contract.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_P = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


@dataclass(frozen=True)
class BranchConvention:
    """Phase convention used for the Coulomb-type complex powers.

    ``arg_zeta_range`` is the sector of arg(zeta), zeta = 2ikx, inside which
    the Whittaker asymptotics are quoted.  With principal arg(k) in
    (-pi, pi] and x > 0 this is exactly (-pi/2, 3pi/2).
    """

    principal_log: bool = True
    arg_zeta_range: tuple[float, float] = (-math.pi / 2, 3 * math.pi / 2)

    def arg_zeta(self, k: complex, x: float = 1.0) -> float:
        return cmath.phase(k) + math.pi / 2 + (0.0 if x > 0 else math.nan)


def nonpositive_integer_distance(z) -> tuple[float, int]:
    """Distance from z to the nearest nonpositive integer, and that integer's n.

    Returns (distance, n) with the convention z ~ -n, n >= 0.
    """
    z = complex(z)
    n = -int(round(z.real))
    if n < 0:
        n = 0
    return abs(z + n), n


def _near_pole(z) -> int | None:
    d, n = nonpositive_integer_distance(z)
    return n if d < _POLE_TOL else None


def _lanczos_sum(z: complex) -> complex:
    # z is the shifted argument (gamma argument minus 1), Re z >= -0.5
    s = _LANCZOS_P[0]
    for i in range(1, len(_LANCZOS_P)):
        s += _LANCZOS_P[i] / (z + i)
    return s


def gamma(z) -> complex:
    """Gamma function for complex z.

    Raises PoleAtNonpositiveInteger when z is within 1e-12 of 0, -1, -2, ...
    (an S-matrix ladder hit, for the callers in this package).
    """
    z = complex(z)
    n = _near_pole(z)
    if n is not None:
        raise PoleAtNonpositiveInteger(z, n)
    if z.real < 0.5:
        # reflection; sin(pi z) is safe here since gamma is used for |z|<~1e2
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    w = z - 1.0
    t = w + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (w + 0.5) * cmath.exp(-t) * _lanczos_sum(w)


def _log_sin_pi(z: complex) -> complex:
    # log(sin(pi z)) up to a multiple of 2*pi*i; stable for large |Im z|.
    if z.imag >= 0.0:
        # sin(pi z) = e^{-i pi z} (i/2) (1 - e^{2 i pi z})
        return -1j * math.pi * z + cmath.log(0.5j) + cmath.log(1.0 - cmath.exp(2j * math.pi * z))
    return 1j * math.pi * z + cmath.log(-0.5j) + cmath.log(1.0 - cmath.exp(-2j * math.pi * z))


def log_gamma(z) -> complex:
    """log(Gamma(z)) up to a multiple of 2*pi*i.

    The branch is NOT the principal one in general; it is only guaranteed
    that exp(log_gamma(z)) == gamma(z).  That is all ``gamma_ratio`` needs,
    and it keeps the reflection path overflow-free for |z| <= 1e3.
    """
    z = complex(z)
    n = _near_pole(z)
    if n is not None:
        raise PoleAtNonpositiveInteger(z, n)
    if z.real < 0.5:
        return _LOG_PI - _log_sin_pi(z) - log_gamma(1.0 - z)
    w = z - 1.0
    t = w + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (w + 0.5) * cmath.log(t) - t + cmath.log(_lanczos_sum(w))


def gamma_ratio(num, den, pole_tol: float = _POLE_TOL) -> complex:
    """prod Gamma(num[i]) / prod Gamma(den[j]) via log-Gamma differences.

    Pole triage:

    * a Gamma pole in ``den`` only  -> the ratio vanishes; returns 0.0
    * a Gamma pole in ``num`` only  -> raises PoleHit
    * poles on both sides           -> raises IndeterminateRatio (the 0/0
      pole-skipping signal; reported, never silently resolved)
    """
    num = [complex(z) for z in num]
    den = [complex(z) for z in den]
    num_hits = []
    den_hits = []
    for z in num:
        d, n = nonpositive_integer_distance(z)
        if d < pole_tol:
            num_hits.append((z, n))
    for z in den:
        d, n = nonpositive_integer_distance(z)
        if d < pole_tol:
            den_hits.append((z, n))
    if num_hits and den_hits:
        raise IndeterminateRatio(
            f"0/0 gamma ratio: numerator poles {num_hits}, denominator poles {den_hits}",
            numerator_hits=num_hits,
            denominator_hits=den_hits,
        )
    if num_hits:
        raise PoleHit(f"gamma ratio pole: numerator hits {num_hits}", hits=num_hits)
    if den_hits:
        return 0.0 + 0.0j
    acc = 0.0 + 0.0j
    for z in num:
        acc += log_gamma(z)
    for z in den:
        acc -= log_gamma(z)
    return cmath.exp(acc)


def _hyp2f1_series(a, b, c, z, tol=1e-17, max_terms=800) -> complex:
    s = 1.0 + 0.0j
    t = 1.0 + 0.0j
    for n in range(max_terms):
        t *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        s += t
        if abs(t) <= tol * max(1.0, abs(s)):
            return s
    raise ConnectionDegenerate(f"2F1 series did not converge at z={z}")


def _hyp2f1_via_connection(a, b, c, z) -> complex:
    # Map to 1-z:  F(a,b,c;z) =
    #   G(c)G(c-a-b)/(G(c-a)G(c-b)) * F(a,b,a+b-c+1;1-z)
    # + G(c)G(a+b-c)/(G(a)G(b)) * (1-z)^{c-a-b} * F(c-a,c-b,c-a-b+1;1-z)
    w = 1.0 - z
    cab = c - a - b
    g1 = gamma_ratio([c, cab], [c - a, c - b])
    g2 = gamma_ratio([c, -cab], [a, b])
    t1 = g1 * _hyp2f1_series(a, b, 1.0 - cab, w)
    t2 = g2 * w**cab * _hyp2f1_series(c - a, c - b, 1.0 + cab, w)
    return t1 + t2


def hyp2f1(a, b, c, z) -> complex:
    """Gauss hypergeometric 2F1(a, b; c; z) on the |z| <= 1 region of use.

    Maclaurin series for |z| <= 0.6; the 1-z connection formula otherwise.
    Integer c-a-b (degenerate connection) is handled by an eps=1e-6
    perturbation of c with two-point averaging, which cancels the O(eps)
    error.  Raises IllDefinedC for c within 1e-12 of 0, -1, -2, ...
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    d, _ = nonpositive_integer_distance(c)
    if d < _POLE_TOL:
        raise IllDefinedC(f"2F1 ill-defined: c={c} is a nonpositive integer")
    if z == 0:
        return 1.0 + 0.0j
    if abs(z) <= 0.6:
        return _hyp2f1_series(a, b, c, z)
    if abs(z) > 1.0 + 1e-12:
        raise ValueError(f"hyp2f1: |z|={abs(z):.3g} outside the |z| <= 1 region of use")
    if abs(z - 1.0) < 1e-14:
        # Gauss summation at z=1 (requires Re(c-a-b) > 0)
        if (c - a - b).real <= 0:
            raise ValueError("hyp2f1 at z=1 requires Re(c-a-b) > 0")
        return gamma_ratio([c, c - a - b], [c - a, c - b])
    cab = c - a - b
    is_degenerate = abs(cab.imag) < 1e-10 and abs(cab.real - round(cab.real)) < 1e-10
    if not is_degenerate:
        return _hyp2f1_via_connection(a, b, c, z)
    # integer c-a-b: perturb c by +-eps and +-2eps and Richardson-extrapolate
    # the even error series; eps = 1e-3 balances the O(eps^4) residual against
    # the 1/eps^2-amplified Gamma roundoff (measured ~3e-12)
    eps = 1e-3

    def averaged(e: float) -> complex:
        return 0.5 * (_hyp2f1_via_connection(a, b, c + e, z)
                      + _hyp2f1_via_connection(a, b, c - e, z))

    a1 = averaged(eps)
    a2 = averaged(2.0 * eps)
    val = (4.0 * a1 - a2) / 3.0
    if abs(a1 - a2) > 1e-2 * max(1.0, abs(val)):
        raise ConnectionDegenerate(
            f"epsilon-perturbed connection inconsistent at (a,b,c,z)=({a},{b},{c},{z})"
        )
    return val


def whittaker_m(kappa, nu, zeta) -> complex:
    """Whittaker M_{kappa,nu}(zeta) from the confluent (Kummer) series.

    M = zeta^{1/2+nu} e^{-zeta/2} 1F1(1/2+nu-kappa; 1+2nu; zeta), principal
    branch of zeta^{1/2+nu}, normalized so M ~ zeta^{1/2+nu} as zeta -> 0.
    Intended for moderate |zeta| (cancellation grows like e^{|zeta|/2}).
    Raises IllDefinedOrder when 2*nu is within 1e-12 of a negative integer.
    """
    kappa, nu, zeta = complex(kappa), complex(nu), complex(zeta)
    two_nu = 2.0 * nu
    if abs(two_nu.imag) < _POLE_TOL:
        r = round(two_nu.real)
        if r <= -1 and abs(two_nu.real - r) < _POLE_TOL:
            raise IllDefinedOrder(two_nu)
    if zeta == 0:
        if (0.5 + nu).real > 0:
            return 0.0 + 0.0j
        raise ValueError("whittaker_m singular at zeta=0 for Re(1/2+nu) <= 0")
    a = 0.5 + nu - kappa
    c = 1.0 + two_nu
    s = 1.0 + 0.0j
    t = 1.0 + 0.0j
    for n in range(600):
        t *= (a + n) / ((c + n) * (n + 1)) * zeta
        s += t
        if abs(t) <= 1e-17 * max(1.0, abs(s)) and n > 4:
            break
    else:
        raise ValueError(f"whittaker_m series did not converge at zeta={zeta}")
    return zeta ** (0.5 + nu) * cmath.exp(-0.5 * zeta) * s
