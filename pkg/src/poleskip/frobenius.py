"""Power-series engine at x=0 and (via the tilde frame) at x=infinity.

The potential is V = (nu^2 - 1/4)/x^2 + sum_{n>=-1} v_n x^n and the series
ansatz psi = sum_m psi_m x^{m+lambda}, lambda = 1/2 + nu, turns the ODE
-psi'' + (V - k^2) psi = 0 into the banded recursion

    0 = -m (m + 2 nu) psi_m + sum_{j<m} [ v_{m-2-j} - k^2 [j == m-2] ] psi_j.

Keeping the first n rows/columns gives the truncation whose determinant,
evaluated at nu = -n/2, vanishes exactly at pole-skip candidates.

Arithmetic is exact (Fraction / Gaussian rational) whenever the inputs are
exact, complex floating point otherwise; the 0/0 structure being probed is
razor thin and float-only detection is fragile.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Callable, Mapping, Sequence

from .errors import Breakdown, NoRootInWindow
from .locator import PoleSkipPoint

__all__ = [
    "GaussianRational",
    "SeriesPotential",
    "RecursionMatrix",
    "SeriesSolution",
    "build_matrix",
    "det_truncation",
    "solve_series",
    "tilde_transform",
    "find_candidates",
    "coulomb_series_potential",
    "sinh_sq_series_potential",
    "zero_series_potential",
    "sinh_sq_tail",
    "cosh_sq_tail",
    "bernoulli_numbers",
]


class GaussianRational:
    """Exact complex number with Fraction real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (GaussianRational(1) / self) ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, complex) or isinstance(other, float):
                return complex(self) == complex(other)
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def mul_i(self):
        """Multiplication by the imaginary unit, exactly."""
        return GaussianRational(-self.im, self.re)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, GaussianRational))


def _is_zero(x, tol=0.0) -> bool:
    if _is_exact(x):
        return x == 0
    return abs(complex(x)) <= tol


def _mul_i(x):
    """i*x preserving exactness."""
    if isinstance(x, GaussianRational):
        return x.mul_i()
    if isinstance(x, (int, Fraction)):
        return GaussianRational(0, x)
    return 1j * complex(x)


@dataclass
class SeriesPotential:
    """Laurent data for the series engine: centrifugal nu, tail {v_n}, wave number k.

    Coefficient values may be int/Fraction/GaussianRational (exact path) or
    complex floats.  ``v`` maps n >= -1 to v_n; absent entries are zero.
    """

    nu: Any
    v: Mapping[int, Any]
    k: Any = 0

    @property
    def exact(self) -> bool:
        return _is_exact(self.nu) and _is_exact(self.k) and all(_is_exact(c) for c in self.v.values())


@dataclass
class RecursionMatrix:
    """Truncated recursion matrix: n rows of the banded system (lambda_+ frame)."""

    order: int
    nu: Any
    entries: list  # list of rows, 1-based indexing via .entry()

    def entry(self, m: int, j: int):
        return self.entries[m - 1][j - 1]

    def as_complex(self):
        return [[complex(e) for e in row] for row in self.entries]


@dataclass
class SeriesSolution:
    """Frobenius coefficients psi_0..psi_N for one branch exponent."""

    branch: str
    lambda_: Any
    coefficients: list
    breakdown: tuple | None = None  # (order m, nonzero right side)
    free_orders: list = field(default_factory=list)


def _v_entry(pot: SeriesPotential, m: int, j: int):
    """Row m, column j (1-based) entry below the superdiagonal: v_{m-1-j} - k^2 [j == m-1]."""
    val = pot.v.get(m - 1 - j, 0)
    if j == m - 1:
        val = val - pot.k**2
    return val


def build_matrix(pot: SeriesPotential, n: int) -> RecursionMatrix:
    """First n rows/columns of the recursion matrix.

    Superdiagonal entry in row m is -m(m+2 nu); below it the entries are
    filled from the potential tail and -k^2 on the second subdiagonal.
    """
    if n < 1:
        raise ValueError("matrix order must be >= 1")
    rows = []
    for m in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j == m + 1:
                row.append(-m * (m + 2 * pot.nu))
            elif j <= m:
                row.append(_v_entry(pot, m, j))
            else:
                row.append(0)
        rows.append(row)
    return RecursionMatrix(order=n, nu=pot.nu, entries=rows)


def _det(rows: list, exact: bool):
    """Determinant by Gaussian elimination, generic over the coefficient field."""
    n = len(rows)
    a = [list(r) for r in rows]
    det = 1
    sign = 1
    for col in range(n):
        piv = None
        if exact:
            for r in range(col, n):
                if not _is_zero(a[r][col]):
                    piv = r
                    break
        else:
            best = -1.0
            for r in range(col, n):
                m = abs(complex(a[r][col]))
                if m > best:
                    best, piv = m, r
            if best == 0.0:
                piv = None
        if piv is None:
            return 0 * det
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        det = det * p
        for r in range(col + 1, n):
            if _is_zero(a[r][col]):
                continue
            f = a[r][col] / p
            for c in range(col, n):
                a[r][c] = a[r][c] - f * a[col][c]
    return det * sign


def det_truncation(pot: SeriesPotential, n: int):
    """det M^(n) evaluated at nu_n = -n/2; zero marks a pole-skip candidate.

    The potential must already be built at nu = -n/2 (its tail coefficients
    may themselves depend on nu).
    """
    if abs(complex(pot.nu) + n / 2.0) > 1e-12:
        raise ValueError(f"det_truncation requires nu = -{n}/2, got {pot.nu}")
    mat = build_matrix(pot, n)
    return _det(mat.entries, pot.exact)


def solve_series(pot: SeriesPotential, branch: str = "plus", order: int = 8,
                 on_breakdown: str = "raise") -> SeriesSolution:
    """Solve the recursion forward for psi_1..psi_order (psi_0 = 1).

    branch 'plus' uses lambda_+ = 1/2 + nu, 'minus' uses lambda_- = 1/2 - nu
    (equivalently nu -> -nu in the recursion).  When m(m+2 nu) = 0 with a
    nonzero right side the recursion breaks down: Breakdown is raised, or
    recorded and the series truncated if on_breakdown='record'.  A zero
    right side leaves psi_m free; it is set to 0 and the order recorded.
    """
    if branch not in ("plus", "minus"):
        raise ValueError("branch must be 'plus' or 'minus'")
    nu_eff = pot.nu if branch == "plus" else -pot.nu
    pot_eff = SeriesPotential(nu=nu_eff, v=pot.v, k=pot.k)
    exact = pot_eff.exact
    half = Fraction(1, 2) if exact else 0.5
    sol = SeriesSolution(branch=branch, lambda_=half + nu_eff, coefficients=[1])
    psi = sol.coefficients
    ztol = 1e-14
    for m in range(1, order + 1):
        rhs = 0
        for j in range(0, m):
            rhs = rhs + _v_entry(pot_eff, m, j + 1) * psi[j]
        piv = m * (m + 2 * nu_eff)
        if _is_zero(piv, ztol * m * m):
            if _is_zero(rhs, ztol * (1 + abs(complex(rhs)))):
                sol.free_orders.append(m)
                psi.append(0)
                continue
            sol.breakdown = (m, rhs)
            if on_breakdown == "raise":
                raise Breakdown(m, rhs)
            break
        psi.append(rhs / piv)
    return sol


def tilde_transform(decay_rate, tail: Sequence, k, branch: str = "-ik") -> SeriesPotential:
    """Map an exponentially decaying potential onto the x=0-type series frame.

    ``tail`` lists w_1..w_J with V(x) = sum_j w_j exp(-j*s*x), s=decay_rate.
    After rescaling y = s*x and substituting xt = exp(-y), the problem is a
    regular-singular-point one with

        nu_tilde = -i k / s   (branch '-ik')   or   +i k / s  ('+ik'),
        v_{j-2}  = w_j / s^2,   and no separate energy term.

    The det criterion nu_tilde = -n/2 then reads i k = +- n s / 2.
    """
    if branch not in ("-ik", "+ik"):
        raise ValueError("branch must be '-ik' or '+ik'")
    s = decay_rate
    exact = _is_exact(k) and isinstance(s, (int, Fraction)) and all(_is_exact(w) for w in tail)
    if not exact:
        s = float(s)
    ik = _mul_i(k) if exact else 1j * complex(k)
    nu_t = (-ik if branch == "-ik" else ik) / s
    v = {j - 2: w / (s * s) for j, w in enumerate(tail, start=1)}
    return SeriesPotential(nu=nu_t, v=v, k=0)


def find_candidates(family: Callable[[Any, int], SeriesPotential], n_max: int,
                    window: float = 10.0, grid: int = 40, tol: float = 1e-12,
                    free_axis: str = "k", require_root: bool = False) -> list[PoleSkipPoint]:
    """Roots of det M^(n)(nu=-n/2) over one free complex parameter, n <= n_max.

    ``family(p, n)`` must return the SeriesPotential at nu = -n/2 with the
    free parameter set to p.  Roots are found by 1D complex Newton from a
    grid x grid seeding of the square |Re p|,|Im p| <= window.  A determinant
    that is identically zero in the window has no isolated roots and yields
    no candidates for that n.
    """
    points: list[PoleSkipPoint] = []
    for n in range(1, n_max + 1):
        def f(p, _n=n):
            return complex(det_truncation(family(p, _n), _n))

        # identically-zero / constant detection on a deterministic sample
        samples = [f(complex(window * (i / 7.0 - 0.5), window * ((3 * i % 11) / 11.0 - 0.5)))
                   for i in range(1, 12)]
        scale = max(abs(s) for s in samples)
        if scale < 1e-13:
            continue
        spread = max(abs(s - samples[0]) for s in samples)
        if spread < 1e-13 * max(1.0, scale):
            continue  # constant nonzero determinant: no roots
        roots: list[complex] = []
        step_grid = 2.0 * window / (grid - 1) if grid > 1 else window
        # a double root is the +-k* pair merging (free-particle style artifact);
        # only simple roots are genuine candidates
        dmin = 1e-6 * scale / window
        for ire in range(grid):
            for iim in range(grid):
                p = complex(-window + ire * step_grid, -window + iim * step_grid)
                root = _newton1d(f, p, tol, scale=scale)
                if root is None or abs(root) > window * 1.05:
                    continue
                h = 1e-6 * (1.0 + abs(root))
                if abs(f(root + h) - f(root - h)) / (2 * h) < dmin:
                    continue
                if all(abs(root - r) > 1e-8 * (1 + abs(root)) for r in roots):
                    roots.append(root)
        for r in sorted(roots, key=lambda z: (round(z.imag, 10), round(z.real, 10))):
            points.append(PoleSkipPoint(
                axes=("nu", free_axis),
                point=(complex(-n / 2.0), r),
                n=n,
                source="det-criterion",
            ))
    if require_root and not points:
        raise NoRootInWindow(f"no determinant roots for n <= {n_max} in |p| <= {window}")
    return points


def _newton1d(f, z0: complex, tol: float, max_iter: int = 40, scale: float = 1.0) -> complex | None:
    z = z0
    for _ in range(max_iter):
        try:
            fz = f(z)
            h = 1e-6 * (1.0 + abs(z))
            d = (f(z + h) - f(z - h)) / (2.0 * h)
        except Exception:
            return None
        if d == 0:
            return None
        step = fz / d
        z = z - step
        if abs(step) < tol * (1.0 + abs(z)):
            try:
                return z if abs(f(z)) < 1e-8 * scale else None
            except Exception:
                return None
    return None


# ---------------------------------------------------------------------------
# model-specific series data


def bernoulli_numbers(count: int) -> list[Fraction]:
    """B_0..B_{count-1} as Fractions (B_1 = -1/2 convention)."""
    B: list[Fraction] = []
    for m in range(count):
        if m == 0:
            B.append(Fraction(1))
            continue
        s = Fraction(0)
        for j in range(m):
            s += comb(m + 1, j) * B[j]
        B.append(-s / (m + 1))
    return B


def coulomb_series_potential(e2, nu, k) -> SeriesPotential:
    """V = (nu^2-1/4)/x^2 + e^2/x: the only tail coefficient is v_{-1} = e^2."""
    return SeriesPotential(nu=nu, v={-1: e2}, k=k)


def zero_series_potential(nu, k) -> SeriesPotential:
    return SeriesPotential(nu=nu, v={}, k=k)


def _sinh_laurent_coeffs(orders: int) -> dict[int, Fraction]:
    """Laurent tail of 1/sinh^2 x beyond 1/x^2: {-1/3, x^2/15, ...} as {n: c_n}.

    From coth'(x): 1/sinh^2 x - 1/x^2 = sum_{n>=1} B_{2n} 4^n (1-2n) x^{2n-2} / (2n)!.
    """
    B = bernoulli_numbers(2 * orders + 2)
    out: dict[int, Fraction] = {}
    for n in range(1, orders + 1):
        out[2 * n - 2] = B[2 * n] * Fraction(4**n * (1 - 2 * n), factorial(2 * n))
    return out


def sinh_sq_series_potential(nu, k, orders: int = 8) -> SeriesPotential:
    """V = (nu^2-1/4)/sinh^2 x expanded about x=0 (exact when nu, k are exact)."""
    exact = _is_exact(nu)
    quarter = Fraction(1, 4) if exact else 0.25
    strength = nu * nu - quarter
    v = {n: strength * c for n, c in _sinh_laurent_coeffs(orders).items()}
    return SeriesPotential(nu=nu, v=v, k=k)


def sinh_sq_tail(nu, jmax: int = 6) -> list:
    """w_j for (nu^2-1/4)/sinh^2 x = sum_j w_j e^{-2jx}:  w_j = 4 j (nu^2-1/4)."""
    exact = _is_exact(nu)
    quarter = Fraction(1, 4) if exact else 0.25
    strength = nu * nu - quarter
    return [4 * j * strength for j in range(1, jmax + 1)]


def cosh_sq_tail(kappa, jmax: int = 6) -> list:
    """w_j for -kappa(kappa-1)/cosh^2 x = sum_j w_j e^{-2jx}: w_j = -4 j (-1)^{j-1} kappa(kappa-1)."""
    strength = kappa * (kappa - 1)
    return [(-1) ** j * 4 * j * strength for j in range(1, jmax + 1)]
