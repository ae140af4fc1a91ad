"""Black-hole metric -> effective half-line Schrodinger problem.

For a metric ds^2 = -F(r) dt^2 + dr^2/F(r) + ... with horizon at r = 1 and
F'(1) = 4 pi T, a minimally coupled scalar mode phi(r) e^{-i omega t + iqz}
obeys, in x = r - 1,

    0 = -psi'' + U psi,
    U = (V - omega^2)/F^2 + F''/(2F) - (F')^2/(4F^2),      V = F (m^2 + ...),

and near the horizon U ~ (nu^2 - 1/4)/x^2 with nu = -i omega/(4 pi T).  The
incoming-wave condition becomes psi ~ x^{1/2+nu}.  Matsubara frequencies
omega = -2 pi T n i map onto the half-integer ladder nu = -n/2.

Derivatives of F are taken by 4th-order central differences with the step
adapted to x; the F''/2F - F'^2/4F^2 form is the exact rewriting of
F^{-1/2} (sqrt F)'' and avoids differencing the sqrt singularity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import HorizonDegeneracy

__all__ = [
    "MetricModel",
    "EffectiveProblem",
    "effective_potential",
    "matsubara_dictionary",
    "incoming_condition",
    "series_coefficients",
]


def _derivs4(F: Callable[[float], float], r: float, h: float) -> tuple[float, float]:
    """(F', F'') by 4th-order central differences with step h."""
    f2m, f1m, f1p, f2p = F(r - 2 * h), F(r - h), F(r + h), F(r + 2 * h)
    f0 = F(r)
    d1 = (f2m - 8 * f1m + 8 * f1p - f2p) / (12 * h)
    d2 = (-f2m + 16 * f1m - 30 * f0 + 16 * f1p - f2p) / (12 * h * h)
    return d1, d2


@dataclass
class MetricModel:
    """Metric function F with horizon fixed at r0 = 1 and F'(1) = 4 pi T.

    ``v_extra`` supplies the model-dependent '+...' terms of V = F(m^2+...)
    as a function of r; the map makes no choice about them.
    """

    F: Callable[[float], float]
    T: float
    mass2: float = 0.0
    v_extra: Callable[[float], float] | None = None
    r_max: float = 10.0

    def validate(self):
        f1 = self.F(1.0)
        if abs(f1) > 1e-12:
            raise ValueError(f"horizon condition violated: F(1) = {f1:.3e}")
        d1, _ = _derivs4(self.F, 1.0, 1e-3)
        if abs(d1) < 1e-8:
            raise HorizonDegeneracy("F'(1) = 0: extremal horizon not supported")
        if abs(d1 - 4.0 * math.pi * self.T) > 1e-10 * max(1.0, abs(d1)):
            raise ValueError(
                f"F'(1) = {d1:.12g} inconsistent with 4 pi T = {4 * math.pi * self.T:.12g}")


@dataclass
class EffectiveProblem:
    """Half-line problem data: U(x), the frequency, and nu = -i omega/(4 pi T)."""

    u: Callable[[float], complex]
    nu: complex
    omega: complex
    metric: MetricModel

    def leading_coefficient(self, x_lo: float = 1e-6, x_hi: float = 1e-3,
                            points: int = 14) -> complex:
        """Fitted x^-2 coefficient of U over [x_lo, x_hi]; equals nu^2 - 1/4.

        Fits x^2 U(x) by a quadratic in x on a log-spaced grid and returns
        the constant term.
        """
        xs = np.geomspace(x_lo, x_hi, points)
        vals = np.array([self.u(float(x)) * x * x for x in xs], dtype=complex)
        A = np.vander(xs, 3, increasing=True).astype(complex)
        coef, *_ = np.linalg.lstsq(A, vals, rcond=None)
        return complex(coef[0])


def effective_potential(metric: MetricModel, omega: complex) -> EffectiveProblem:
    """Effective potential U of the metric at frequency omega (x = r - 1 frame)."""
    metric.validate()
    omega = complex(omega)
    nu = -1j * omega / (4.0 * math.pi * metric.T)
    F = metric.F
    m2 = metric.mass2
    vx = metric.v_extra

    def u(x: float) -> complex:
        if x <= 0:
            raise ValueError("U is defined for x > 0")
        r = 1.0 + x
        h = min(0.45 * x, 1e-4 * (1.0 + x))
        f = F(r)
        d1, d2 = _derivs4(F, r, h)
        pot_v = f * (m2 + (vx(r) if vx is not None else 0.0))
        return (pot_v - omega * omega) / (f * f) + d2 / (2.0 * f) - d1 * d1 / (4.0 * f * f)

    return EffectiveProblem(u=u, nu=nu, omega=omega, metric=metric)


def matsubara_dictionary(n: int, T: float) -> tuple[complex, complex]:
    """(omega, nu) at the n-th negative imaginary Matsubara frequency.

    omega = -2 pi T n i and nu = -i omega/(4 pi T) = -n/2, n = 1, 2, ...
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("Matsubara index n must be a positive integer")
    omega = -2j * math.pi * T * n
    return omega, complex(-n / 2.0)


def incoming_condition(problem: EffectiveProblem) -> complex:
    """The x -> 0 exponent 1/2 + nu of the incoming-wave solution x^{1/2+nu}."""
    return 0.5 + problem.nu


def series_coefficients(problem: EffectiveProblem, count: int = 3,
                        x_lo: float = 1e-4, x_hi: float = 5e-2,
                        points: int = 40) -> list[complex]:
    """Tail coefficients [v_-1, v_0, ...] of U beyond the centrifugal term.

    Fits x^2 U(x) - (nu^2 - 1/4) = v_-1 x + v_0 x^2 + ... on a log-spaced
    grid, for handing the x-frame expansion of U to the series engine.
    """
    nu = problem.nu
    cent = nu * nu - 0.25
    xs = np.geomspace(x_lo, x_hi, points)
    vals = np.array([problem.u(float(x)) * x * x - cent for x in xs], dtype=complex)
    # fit sum_{j>=1} c_j x^j with two guard terms beyond the requested count
    ncols = count + 2
    A = np.column_stack([xs ** (j + 1) for j in range(ncols)]).astype(complex)
    coef, *_ = np.linalg.lstsq(A, vals, rcond=None)
    return [complex(c) for c in coef[:count]]
