"""Locate pole-skipping points, classify them, and fit the slope dependence.

A pole-skipping point is the intersection of an S-matrix pole curve and
zero curve in the (parameter, k) plane.  At it S takes the form 0/0 and its
value depends on the approach direction; the local model is the Mobius form

    S ~ (a d1 + b d2) / (c d1 + d d2)

over displacements (d1, d2) along the two axes.  Since S*(1/S)=1, Newton on
(1/S, S) directly is singular; the locator instead traces the two curves
(zeros of 1/S and of S in k) and Newton-iterates the parameter until they
cross.  When functionally independent proxies are available (the two Gamma
arguments of an analytic model, or F+ and 1/F- from the numeric solver) a
plain 2D Newton on the proxy pair is used instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    AmbiguousWinding,
    DegenerateDoubleZero,
    FitDegenerate,
    NoConvergence,
    PoleSkipError,
    SymmetryViolation,
)

__all__ = [
    "PoleSkipPoint",
    "MobiusFit",
    "Classification",
    "find_skip",
    "slope_probe",
    "classify",
    "pair_check",
    "winding_number",
]


@dataclass
class PoleSkipPoint:
    """A located (or cataloged) point where a pole and a zero of S coincide.

    ``axes`` names the two coordinates of ``point`` (e.g. ('nu','k') for the
    Poschl-Teller models, ('nu','kappa') for the Coulomb catalog, ('c','k')
    for the one-pole model).  ``n`` is the series/det-criterion order when
    one applies.  ``pole_kind`` is 'bound', 'antibound', 'redundant' or
    'threshold' (k=0); ``redundant`` is True when the participating pole is
    a redundant (false) pole.  ``series_invisible`` marks catalog entries
    the power-series det criterion cannot see (k=0 entries).
    """

    axes: tuple[str, str]
    point: tuple[complex, complex]
    n: int | None = None
    pole_family: str | None = None
    zero_family: str | None = None
    pole_kind: str | None = None
    redundant: bool = False
    series_invisible: bool = False
    source: str = "catalog"
    mobius: tuple[complex, complex, complex, complex] | None = None

    @property
    def param(self) -> complex:
        return self.point[0]

    @property
    def k(self) -> complex:
        return self.point[1]


@dataclass
class MobiusFit:
    """Least-squares Mobius coefficients (a, b; c, d), scale-normalized.

    Only the ratios are meaningful; ``ratios`` holds b/a, c/a, d/a (None
    where a ~ 0).  ``residual`` is the worst relative misfit of the model
    against the sampled S values.
    """

    a: complex
    b: complex
    c: complex
    d: complex
    residual: float
    radius: float

    @property
    def ratios(self) -> dict[str, complex | None]:
        if abs(self.a) < 1e-300:
            return {"b/a": None, "c/a": None, "d/a": None}
        return {"b/a": self.b / self.a, "c/a": self.c / self.a, "d/a": self.d / self.a}

    def evaluate(self, d1: complex, d2: complex) -> complex:
        return (self.a * d1 + self.b * d2) / (self.c * d1 + self.d * d2)


@dataclass
class Classification:
    """Which Jost mechanism makes the pole and the zero at a point.

    winding_plus / winding_minus are the winding numbers of F+ and F- in k
    on a small circle; positive = zeros inside, negative = poles inside.
    """

    pole_source: str | None  # 'fplus_zero' | 'fminus_pole'
    zero_source: str | None  # 'fminus_zero' | 'fplus_pole'
    pole_kind: str | None  # 'bound' | 'antibound' | 'redundant' | 'threshold'
    winding_plus: int
    winding_minus: int


def _eval_guarded(f, *args):
    """Evaluate f; a ladder/0-0 exception counts as 'on the curve' (returns None)."""
    try:
        return f(*args)
    except PoleSkipError:
        return None


def _newton_k(g: Callable[[complex], complex], k0: complex, tol: float, max_iter: int = 60) -> complex:
    """1D complex Newton for g(k)=0 with finite-difference derivative.

    Library exceptions during evaluation are treated as landing exactly on
    the curve (gamma-pole guards trip within ~1e-12 of it).
    """
    k = k0
    for _ in range(max_iter):
        gk = _eval_guarded(g, k)
        if gk is None:
            return k
        h = 1e-7 * (1.0 + abs(k))
        gp = _eval_guarded(g, k + h)
        gm = _eval_guarded(g, k - h)
        if gp is None or gm is None:
            return k
        d = (gp - gm) / (2.0 * h)
        if d == 0:
            raise NoConvergence("curve trace: zero derivative")
        step = gk / d
        k = k - step
        if abs(step) < tol:
            return k
    raise NoConvergence(f"curve trace did not converge from {k0}")


def _newton_2d(u, v, seed, tol, max_iter=50):
    """2D complex Newton for (u, v) = (0, 0) over (param, k)."""
    p, k = complex(seed[0]), complex(seed[1])
    for _ in range(max_iter):
        fu = _eval_guarded(u, p, k)
        fv = _eval_guarded(v, p, k)
        if fu is None or fv is None:
            return p, k
        hp = 1e-7 * (1.0 + abs(p))
        hk = 1e-7 * (1.0 + abs(k))
        vals = {}
        for name, (pp, kk) in {
            "up": (p + hp, k), "um": (p - hp, k), "uk": (p, k + hk), "ukm": (p, k - hk),
        }.items():
            vals[name] = (_eval_guarded(u, pp, kk), _eval_guarded(v, pp, kk))
        if any(x is None for pair in vals.values() for x in pair):
            return p, k
        J = np.array([
            [(vals["up"][0] - vals["um"][0]) / (2 * hp), (vals["uk"][0] - vals["ukm"][0]) / (2 * hk)],
            [(vals["up"][1] - vals["um"][1]) / (2 * hp), (vals["uk"][1] - vals["ukm"][1]) / (2 * hk)],
        ], dtype=complex)
        rhs = np.array([fu, fv], dtype=complex)
        try:
            step = np.linalg.solve(J, rhs)
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(f"singular Jacobian in proxy Newton: {exc}") from exc
        p -= step[0]
        k -= step[1]
        if max(abs(step[0]), abs(step[1])) < tol:
            return p, k
    raise NoConvergence(f"proxy Newton did not converge from {seed}")


def find_skip(
    s_func: Callable[[complex, complex], complex],
    seed: tuple[complex, complex],
    tol: float = 1e-12,
    max_iter: int = 50,
    proxies: tuple[Callable, Callable] | None = None,
    axes: tuple[str, str] = ("nu", "k"),
) -> PoleSkipPoint:
    """Locate the pole-skip point of ``s_func(param, k)`` nearest the seed.

    With ``proxies=(pole_proxy, zero_proxy)`` -- two functionally
    independent analytic functions of (param, k) vanishing on the pole and
    zero curves -- a 2D Newton is used.  Otherwise the pole curve (zeros of
    1/S in k) and zero curve (zeros of S in k) are traced separately and the
    parameter is Newton-iterated until they intersect.  The seed must be
    within the basin (|seed - true| of order 0.3 works for the catalogs).
    """
    p0, k0 = complex(seed[0]), complex(seed[1])
    if proxies is not None:
        u, v = proxies
        p, k = _newton_2d(u, v, (p0, k0), tol, max_iter)
        point = PoleSkipPoint(axes=axes, point=(p, k), source="located")
        return point

    inv = lambda p, k: 1.0 / s_func(p, k)

    def curves(p: complex, k_guess: complex) -> complex:
        kp = _newton_k(lambda k: inv(p, k), k_guess, tol)
        kz = _newton_k(lambda k: s_func(p, k), k_guess, tol)
        return kp - kz, kp, kz

    p = p0
    k_guess = k0
    for _ in range(max_iter):
        h, kp, kz = curves(p, k_guess)
        k_guess = 0.5 * (kp + kz)
        if abs(h) < tol:
            return PoleSkipPoint(axes=axes, point=(p, k_guess), source="located")
        hp = 1e-6 * (1.0 + abs(p))
        h1, _, _ = curves(p + hp, k_guess)
        h2, _, _ = curves(p - hp, k_guess)
        d = (h1 - h2) / (2.0 * hp)
        if d == 0:
            raise NoConvergence("parameter Newton: zero derivative")
        p = p - h / d
    raise NoConvergence(f"find_skip did not converge from seed {seed}")


def slope_probe(
    s_local: Callable[[complex, complex], complex],
    radius: float = 1e-3,
    n_angles: int = 16,
    residual_tol: float = 1e-2,
    consistency: bool = True,
) -> MobiusFit:
    """Fit S ~ (a d1 + b d2)/(c d1 + d d2) around a located skip.

    ``s_local(d1, d2)`` evaluates S at displacement (d1, d2) from the point
    (the caller fixes which axis each displacement moves).  Sampling is over
    n_angles directions (cos t, sin t).  The 4 coefficients are the SVD null
    vector of the homogeneous system  a d1 + b d2 - S (c d1 + d d2) = 0; an
    almost-2D null space (S locally constant => any (c*alpha, c*beta; alpha,
    beta) fits) or a residual above ``residual_tol`` raises FitDegenerate.
    A second fit at radius/10 guards against accidental smooth points.
    """
    rows = []
    samples = []
    for j in range(n_angles):
        t = 2.0 * math.pi * (j + 0.37) / n_angles
        d1 = radius * math.cos(t)
        d2 = radius * math.sin(t)
        S = s_local(d1, d2)
        rows.append([d1, d2, -S * d1, -S * d2])
        samples.append((d1, d2, S))
    A = np.array(rows, dtype=complex)
    _, sing, vh = np.linalg.svd(A)
    if sing[2] < 1e-8 * sing[0]:
        raise FitDegenerate("Mobius fit rank-deficient: S has no direction dependence here")
    coeffs = vh[-1].conj()
    a, b, c, d = (complex(x) for x in coeffs)
    fit = MobiusFit(a=a, b=b, c=c, d=d, residual=0.0, radius=radius)
    worst = 0.0
    for d1, d2, S in samples:
        model = fit.evaluate(d1, d2)
        worst = max(worst, abs(model - S) / max(abs(S), 1e-300))
    fit.residual = worst
    if worst > residual_tol:
        raise FitDegenerate(f"Mobius fit residual {worst:.3e} exceeds {residual_tol:.1e}")
    if consistency:
        small = slope_probe(s_local, radius=radius / 10.0, n_angles=n_angles,
                            residual_tol=residual_tol, consistency=False)
        for key, val in fit.ratios.items():
            ref = small.ratios[key]
            if val is None or ref is None:
                continue
            if abs(val - ref) > 0.2 * (1.0 + abs(ref)):
                raise FitDegenerate(f"two-radius check failed on {key}: {val} vs {ref}")
    return fit


def winding_number(f: Callable[[complex], complex], center: complex, radius: float,
                   samples: int = 256, floor: float = 1e-13) -> int:
    """Winding number of f around a circle (zeros minus poles inside).

    Raises AmbiguousWinding if |f| dips below ``floor`` on the contour.
    """
    phases = []
    for j in range(samples + 1):
        z = center + radius * cmath.exp(2j * math.pi * j / samples)
        val = f(z)
        if abs(val) < floor:
            raise AmbiguousWinding(f"|f|={abs(val):.2e} on contour at {z}")
        phases.append(cmath.phase(val))
    total = 0.0
    for i in range(1, len(phases)):
        d = phases[i] - phases[i - 1]
        while d > math.pi:
            d -= 2.0 * math.pi
        while d < -math.pi:
            d += 2.0 * math.pi
        total += d
    return int(round(total / (2.0 * math.pi)))


def classify(jost_pair: Callable[[complex], tuple[complex, complex]], k_point: complex,
             radius: float = 1e-2, samples: int = 256) -> Classification:
    """Classify the pole/zero families meeting at k_point from Jost windings.

    ``jost_pair(k)`` returns (F+, F-) near the point.  F+ zeros (winding>0)
    are bound states for Im k > 0 and antibound for Im k < 0; F- poles
    (winding<0) are redundant S-poles.  The mirrored statements give the
    zero side.  Windings of magnitude >= 2 mean a double pole/zero and the
    skip cancels (DegenerateDoubleZero).
    """

    def fplus(k):
        return jost_pair(k)[0]

    def fminus(k):
        return jost_pair(k)[1]

    wp = winding_number(fplus, k_point, radius, samples)
    wm = winding_number(fminus, k_point, radius, samples)
    if abs(wp) >= 2 or abs(wm) >= 2:
        raise DegenerateDoubleZero(f"windings (F+:{wp}, F-:{wm}) at k={k_point}")
    pole_source = "fplus_zero" if wp > 0 else ("fminus_pole" if wm < 0 else None)
    zero_source = "fminus_zero" if wm > 0 else ("fplus_pole" if wp < 0 else None)
    if pole_source == "fminus_pole":
        kind = "redundant"
    elif pole_source == "fplus_zero":
        if abs(k_point.imag) < radius / 10.0 and abs(k_point) < radius:
            kind = "threshold"
        else:
            kind = "bound" if k_point.imag > 0 else "antibound"
    else:
        kind = None
    return Classification(pole_source=pole_source, zero_source=zero_source,
                          pole_kind=kind, winding_plus=wp, winding_minus=wm)


def pair_check(
    s_func: Callable[[complex, complex], complex],
    point: PoleSkipPoint,
    tol: float = 1e-9,
    seed_offset: complex = 0.03 + 0.02j,
) -> PoleSkipPoint:
    """Verify the mirrored skip at -k* required by S(k) S(-k) = 1.

    Re-locates from a perturbed seed at (param, -k) and checks the result
    lands within ``tol``.  k=0 points are self-mirrored and returned as-is.
    """
    p, k = point.param, point.k
    if abs(k) < tol:
        return point
    target = (p, -k)
    found = find_skip(s_func, (p + seed_offset, -k + seed_offset), tol=min(tol, 1e-12))
    err = max(abs(found.param - target[0]), abs(found.k - target[1]))
    if err > tol:
        raise SymmetryViolation(f"mirror of {point.point} located at {found.point}, off by {err:.2e}")
    found.axes = point.axes
    found.n = point.n
    return found
