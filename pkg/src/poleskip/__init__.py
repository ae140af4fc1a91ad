"""Jost functions, S-matrices and pole-skipping for half-line scattering.

Submodules:

* ``specfun``    complex Gamma / 2F1 / Whittaker M
* ``models``     closed-form Jost functions, S-matrices, ladders, catalogs
* ``frobenius``  power-series engine, recursion matrices, det criterion
* ``locator``    pole-skip location, Mobius slope fits, classification
* ``solver``     numerical regular/Jost solutions, Wronskians, cutoffs
* ``holography`` metric -> effective potential map, Matsubara dictionary
* ``cli``        command-line driver (also ``python -m poleskip.cli``)
"""

from . import errors, frobenius, holography, locator, models, solver, specfun
from .errors import IndeterminateRatio, PoleHit, PoleSkipError
from .locator import MobiusFit, PoleSkipPoint, find_skip, slope_probe
from .models import CoshSq, Coulomb, JostPair, OnePole, SinhSq, pole_skip_catalog
from .solver import CutoffSpec, NumericalPotential, jost_functions

__version__ = "0.1.0"

__all__ = [
    "errors", "specfun", "models", "frobenius", "locator", "solver", "holography",
    "PoleSkipError", "PoleHit", "IndeterminateRatio",
    "PoleSkipPoint", "MobiusFit", "find_skip", "slope_probe",
    "OnePole", "Coulomb", "SinhSq", "CoshSq", "JostPair", "pole_skip_catalog",
    "NumericalPotential", "CutoffSpec", "jost_functions",
    "__version__",
]
