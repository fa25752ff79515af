"""Atom-surface dispersion forces: equilibrium Casimir-Polder and
non-equilibrium quantum friction, under Markovian (regression-theorem) and
non-Markovian (fluctuation-dissipation) treatments.

All physics is computed in dimensionless units (frequencies in the
surface-plasmon resonance, distances in c over it, forces in the
normalization of :func:`dispersia.units.normalization_f0`); see
:mod:`dispersia.units` for the SI boundary.
"""

__version__ = "0.1.0"

from ._kernels import USE_NUMBA
from .casimir_polder import cp_distance_scan, cp_force, cp_nm_correction
from .friction import (FrictionScenario, friction_asymptotic,
                       friction_fdt_low_velocity, friction_plasma_closed_form,
                       friction_qrt_with_cancellation,
                       friction_second_order_numeric, orientation_factors)
from .material import SurfaceModel
from .polarizability import (DipoleModel, DressedRates, PoleSet,
                             poles_and_residues, surface_modified_rates)
from .units import UnitSystem, normalization_f0

__all__ = [
    "USE_NUMBA", "__version__",
    "UnitSystem", "normalization_f0",
    "SurfaceModel", "DipoleModel", "DressedRates", "PoleSet",
    "poles_and_residues", "surface_modified_rates",
    "cp_force", "cp_nm_correction", "cp_distance_scan",
    "FrictionScenario", "orientation_factors",
    "friction_second_order_numeric", "friction_plasma_closed_form",
    "friction_asymptotic", "friction_fdt_low_velocity",
    "friction_qrt_with_cancellation",
]
