"""Numerical half-line scattering: regular/Jost solutions and cutoffs.

The regular solution phi is integrated out of the origin from a two-term
Frobenius seed at x0 = 1e-6(1+|nu|); the Jost solutions f+- are integrated
backward from the far tail with a first-order-WKB-corrected plane-wave
seed.  Jost functions come from Wronskians, F+- = W[f+-, phi], evaluated at
a matching point and re-checked at 1.5x the matching point.

Backward integration keeps the seeded solution dominant only in one
half-plane at a time, so f+ and f- are integrated in separate sweeps and
|Im k| is capped (1.0 by default).

The cutoff deformations: an IR cutoff truncates V at x = R (the Jost sweep
then starts at R with an exact plane-wave seed); a UV cutoff replaces V by
the constant V(a) below x = a, which turns the regular solution into
sin(k0 x)/k0 with k0^2 = k^2 - V(a), and F+^r = W[f+(a), phi^r(a)].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

from .errors import (
    OriginSingularityTooStrong,
    StiffnessFailure,
    TailNotReached,
    WronskianDrift,
)
from .models import JostConvention, JostPair

__all__ = [
    "NumericalPotential",
    "CutoffSpec",
    "integrate_regular",
    "integrate_jost",
    "jost_functions",
    "uv_cutoff_jost",
    "uv_cutoff_s",
    "ir_cutoff_jost",
    "ir_cutoff_s",
]

_EPS_TAIL = 1e-12
_X_BUDGET = 40.0


@dataclass
class NumericalPotential:
    """A sampled potential V(x) with its origin and tail metadata.

    ``sampler`` must be side-effect-free (grid sweeps may parallelize).
    ``nu`` is the origin index: V ~ (nu^2-1/4)/x^2 + O(1/x) as x -> 0 (use
    nu = 0.5 for potentials regular at the origin).  ``decay_rate`` is the
    exponential tail rate s in V ~ e^{-s x}.
    """

    sampler: Callable[[float], complex]
    nu: complex = 0.5
    decay_rate: float = 1.0
    range_estimate: float | None = None
    origin_vm1: complex | None = None  # residue of the 1/x tail beyond centrifugal

    @classmethod
    def from_model(cls, model) -> "NumericalPotential":
        """Build from SinhSq/CoshSq; Coulomb is analytic-only (long-range)."""
        tag = getattr(model, "tag", None)
        if tag == "pt1":
            return cls(sampler=model.sampler(), nu=complex(model.nu), decay_rate=2.0,
                       origin_vm1=0.0)
        if tag == "pt2":
            return cls(sampler=model.sampler(), nu=0.5, decay_rate=2.0, origin_vm1=0.0)
        raise ValueError(f"no numerical potential for model {model!r} "
                         "(the Coulomb log phase has no plane-wave Jost limit)")


@dataclass
class CutoffSpec:
    """IR truncation radius R and/or UV flattening radius a (0 < a < R)."""

    ir_radius: float | None = None
    uv_radius: float | None = None

    def __post_init__(self):
        if self.ir_radius is not None and self.ir_radius <= 0:
            raise ValueError("ir_radius must be positive")
        if self.uv_radius is not None and self.uv_radius <= 0:
            raise ValueError("uv_radius must be positive")
        if self.ir_radius is not None and self.uv_radius is not None:
            if not self.uv_radius < self.ir_radius:
                raise ValueError("need uv_radius < ir_radius")


def _rhs(pot_sampler, k2):
    def rhs(x, y):
        v = pot_sampler(float(x))
        return [y[1], (v - k2) * y[0]]

    return rhs


def _integrate(pot_sampler, k, y0, x_from, x_to, rtol, atol, t_eval=None):
    sol = solve_ivp(_rhs(pot_sampler, k * k), (x_from, x_to),
                    np.asarray(y0, dtype=complex), method="DOP853",
                    rtol=rtol, atol=atol, t_eval=t_eval, dense_output=False)
    if not sol.success:
        raise StiffnessFailure(f"integration failed on [{x_from}, {x_to}]: {sol.message}")
    return sol


def integrate_regular(pot: NumericalPotential, k: complex, nu: complex, x_match: float,
                      rtol: float = 1e-12, atol: float = 1e-14) -> tuple[complex, complex]:
    """(phi, phi') at x_match for the regular solution phi ~ x^{1/2+nu}.

    Initial data is the two-term series x^{1/2+nu}(1 + psi_1 x) at
    x0 = 1e-6 (1+|nu|), psi_1 = v_{-1}/(1+2 nu) from the recursion.
    """
    k, nu = complex(k), complex(nu)
    x0 = 1e-6 * (1.0 + abs(nu))
    cent = (nu * nu - 0.25)

    def rest(x):
        c = cent / (x * x) if cent != 0 else 0.0
        return pot.sampler(x) - c

    # origin sanity: the non-centrifugal remainder must be o(1/x^2)
    probe = abs(rest(2.0 * x0)) * (2.0 * x0) ** 2
    if probe > 0.1 * max(1.0, abs(cent)):
        raise OriginSingularityTooStrong(
            f"x^2 (V - centrifugal) = {probe:.3g} at x = {2 * x0:.3g}")
    if pot.origin_vm1 is not None:
        vm1 = complex(pot.origin_vm1)
    else:
        vm1 = complex(rest(1e-4) * 1e-4)  # residue of a possible 1/x term
        if abs(vm1) < 1e-8:
            vm1 = 0.0
    psi1 = vm1 / (1.0 + 2.0 * nu)
    phi0 = x0 ** (0.5 + nu) * (1.0 + psi1 * x0)
    dphi0 = x0 ** (nu - 0.5) * ((0.5 + nu) + (1.5 + nu) * psi1 * x0)
    if x_match <= x0:
        raise ValueError("x_match must exceed the origin start point")
    sol = _integrate(pot.sampler, k, [phi0, dphi0], x0, x_match, rtol, atol)
    return complex(sol.y[0][-1]), complex(sol.y[1][-1])


def _tail_radius(pot: NumericalPotential, eps_tail: float) -> float:
    budget = _X_BUDGET / max(pot.decay_rate, 0.1)
    if pot.range_estimate is not None:
        budget = min(budget, pot.range_estimate)
    x = 1.0
    while x < budget and abs(pot.sampler(x)) > eps_tail:
        x *= 1.25
    x = min(x, budget)
    if abs(pot.sampler(x)) > 1e3 * eps_tail:
        raise TailNotReached(
            f"|V({x:.2f})| = {abs(pot.sampler(x)):.2e} above tail threshold {eps_tail:.1e}")
    return x


def _jost_seed(pot: NumericalPotential, k: complex, x_max: float, sign: int):
    """Plane-wave seed with first-order WKB tail correction at x_max.

    sign=+1 seeds f+ ~ e^{+ikx}, sign=-1 seeds f- ~ e^{-ikx}.  The residual
    tail integral is modeled as V(x_max)/s for an e^{-sx} tail.
    """
    v = complex(pot.sampler(x_max))
    tail_integral = v / pot.decay_rate
    # f+ = e^{ikx} h,   h' / h = +V/(2ik);   f- = e^{-ikx} g,  g'/g = -V/(2ik)
    corr = cmath.exp(-sign * tail_integral / (2j * k))
    dcorr = corr * sign * v / (2j * k)
    e = cmath.exp(sign * 1j * k * x_max)
    return e * corr, e * (sign * 1j * k * corr + dcorr)


def integrate_jost(pot: NumericalPotential, k: complex, x_match: float,
                   rtol: float = 1e-12, atol: float = 1e-13,
                   k_im_max: float = 1.0, x_max: float | None = None,
                   checkpoints: int = 0, exact_seed: bool = False):
    """(f+, f+', f-, f-') at x_match by separate backward sweeps from the tail.

    With ``checkpoints`` > 0 also returns (xs, f+ values, f- values,
    derivatives) on a shared grid for Wronskian-conservation checks.  Set
    ``exact_seed`` when V vanishes identically beyond x_max (IR cutoff), in
    which case the plane-wave seed is exact.
    """
    k = complex(k)
    if abs(k.imag) > k_im_max:
        raise ValueError(f"|Im k| = {abs(k.imag):.3g} outside stability window {k_im_max}")
    if x_max is None:
        x_max = _tail_radius(pot, _EPS_TAIL)
    if x_match >= x_max:
        raise ValueError("x_match must lie below the tail start x_max")
    t_eval = None
    if checkpoints:
        t_eval = list(np.linspace(x_max, x_match, checkpoints))
    out = []
    for sign in (+1, -1):
        if exact_seed:
            e = cmath.exp(sign * 1j * k * x_max)
            y0 = [e, sign * 1j * k * e]
        else:
            y0 = _jost_seed(pot, k, x_max, sign)
        sol = _integrate(pot.sampler, k, y0, x_max, x_match, rtol, atol, t_eval=t_eval)
        out.append(sol)
    fp, fm = out
    result = (complex(fp.y[0][-1]), complex(fp.y[1][-1]),
              complex(fm.y[0][-1]), complex(fm.y[1][-1]))
    if checkpoints:
        return result, (np.array(fp.t), fp.y, fm.y)
    return result


def _wronskian(f, df, g, dg) -> complex:
    return f * dg - df * g


def jost_functions(pot: NumericalPotential, k: complex, nu: complex | None = None,
                   x_match: float | None = None, rtol: float = 1e-12,
                   recheck: bool = True, drift_tol: float = 1e-6,
                   cutoff: CutoffSpec | None = None) -> JostPair:
    """JostPair (F+, F-) from F+- = W[f+-, phi] at a matching point.

    ``nu`` defaults to the potential's origin index.  With ``recheck`` the
    Wronskians are recomputed at 1.5 x_match and WronskianDrift is raised if
    F+ moves by more than ``drift_tol`` (relative).
    """
    k = complex(k)
    nu = complex(pot.nu if nu is None else nu)
    ir = cutoff.ir_radius if cutoff is not None else None
    if ir is not None:
        pot = _truncated(pot, ir)
        x_max = ir
        exact_seed = True
    else:
        x_max = _tail_radius(pot, _EPS_TAIL)
        exact_seed = False
    if x_match is None:
        x_match = min(4.0, 0.45 * x_max)

    def one(xm: float) -> JostPair:
        fp, dfp, fm, dfm = integrate_jost(pot, k, xm, rtol=rtol, x_max=x_max,
                                          exact_seed=exact_seed)
        phi, dphi = integrate_regular(pot, k, nu, xm, rtol=rtol)
        return JostPair(f_plus=_wronskian(fp, dfp, phi, dphi),
                        f_minus=_wronskian(fm, dfm, phi, dphi),
                        convention=JostConvention())

    pair = one(x_match)
    if recheck:
        again = one(min(1.5 * x_match, 0.9 * x_max))
        drift = abs(again.f_plus - pair.f_plus) / max(abs(pair.f_plus), 1e-300)
        if drift > drift_tol:
            raise WronskianDrift(drift, drift_tol)
    return pair


# ---------------------------------------------------------------------------
# cutoff deformations


def _phi_uv(k: complex, v0: complex, a: float) -> tuple[complex, complex]:
    """Regular solution of the flattened region: sin(k0 x)/k0 at x = a."""
    k0 = cmath.sqrt(k * k - v0)
    if abs(k0) < 1e-12:
        return complex(a), 1.0 + 0.0j
    return cmath.sin(k0 * a) / k0, cmath.cos(k0 * a)


def uv_cutoff_jost(pot: NumericalPotential, cutoff: CutoffSpec, k: complex,
                   nu: complex | None = None, rtol: float = 1e-12,
                   f_plus_at: Callable[[float], tuple[complex, complex]] | None = None) -> complex:
    """Renormalized Jost function F+^r = W[f+(a), phi^r(a)] for a UV cutoff.

    phi^r = sin(k0 x)/k0 with k0^2 = k^2 - V(a) solves the flattened region
    with phi(0)=0, phi'(0)=1; continuity at a lets f+^r be replaced by the
    uncut f+.  ``f_plus_at`` may supply an analytic (f+, f+') evaluator; by
    default f+ is integrated backward from the tail down to x = a.
    """
    a = cutoff.uv_radius
    if a is None:
        raise ValueError("uv_cutoff_jost needs cutoff.uv_radius")
    k = complex(k)
    v0 = complex(pot.sampler(a))
    phir, dphir = _phi_uv(k, v0, a)
    if f_plus_at is not None:
        fp, dfp = f_plus_at(a)
    else:
        fp, dfp, _, _ = integrate_jost(pot, k, a, rtol=rtol)
    return _wronskian(fp, dfp, phir, dphir)


def uv_cutoff_s(pot: NumericalPotential, cutoff: CutoffSpec, k: complex,
                rtol: float = 1e-12,
                f_plus_at=None, f_minus_at=None) -> complex:
    """S-matrix of the UV-flattened potential: W[f-, phi^r]/W[f+, phi^r] at a."""
    a = cutoff.uv_radius
    if a is None:
        raise ValueError("uv_cutoff_s needs cutoff.uv_radius")
    k = complex(k)
    v0 = complex(pot.sampler(a))
    phir, dphir = _phi_uv(k, v0, a)
    if f_plus_at is not None and f_minus_at is not None:
        fp, dfp = f_plus_at(a)
        fm, dfm = f_minus_at(a)
    else:
        fp, dfp, fm, dfm = integrate_jost(pot, k, a, rtol=rtol)
    fplus_r = _wronskian(fp, dfp, phir, dphir)
    fminus_r = _wronskian(fm, dfm, phir, dphir)
    return fminus_r / fplus_r


def _truncated(pot: NumericalPotential, R: float) -> NumericalPotential:
    base = pot.sampler
    return NumericalPotential(
        sampler=lambda x: base(x) if x < R else 0.0,
        nu=pot.nu, decay_rate=pot.decay_rate, range_estimate=R,
        origin_vm1=pot.origin_vm1)


def ir_cutoff_jost(pot: NumericalPotential, cutoff: CutoffSpec, k: complex,
                   nu: complex | None = None, rtol: float = 1e-12,
                   x_match: float | None = None) -> JostPair:
    """Jost pair of the IR-truncated potential V_r = V [x < R].

    The Jost sweep starts exactly at R where the plane-wave seed is exact;
    no redundant poles survive the truncation (F-^r is entire in k).
    """
    R = cutoff.ir_radius
    if R is None:
        raise ValueError("ir_cutoff_jost needs cutoff.ir_radius")
    k = complex(k)
    nu = complex(pot.nu if nu is None else nu)
    if x_match is None:
        x_match = min(4.0, 0.45 * R)
    fp, dfp, fm, dfm = integrate_jost(_truncated(pot, R), k, x_match, rtol=rtol,
                                      x_max=R, exact_seed=True)
    phi, dphi = integrate_regular(pot, k, nu, x_match, rtol=rtol)
    return JostPair(f_plus=_wronskian(fp, dfp, phi, dphi),
                    f_minus=_wronskian(fm, dfm, phi, dphi))


def ir_cutoff_s(pot: NumericalPotential, cutoff: CutoffSpec, k: complex,
                nu: complex | None = None, rtol: float = 1e-12) -> complex:
    """S-matrix of the IR-truncated potential."""
    return ir_cutoff_jost(pot, cutoff, k, nu=nu, rtol=rtol).s
