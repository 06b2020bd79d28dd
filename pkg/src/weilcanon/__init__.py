"""Exact-arithmetic construction of the canonical intertwining kernels for
the Heisenberg group over F_p and the canonical model of the Weil
representation, with zero-tolerance verification suites."""

__version__ = "0.1.0"

from .cyclotomic import CycNum, gauss_sum, psi, sigma
from .fplinear import FpMatrix
from .symplectic import (Lagrangian, OrientedLagrangian, SpElement,
                         SymplecticSpace, enumerate_lagrangians,
                         enumerate_oriented, sp_enumerate, sp_random,
                         wedge_pairing)
from .heisenberg import Heisenberg, Transversal, EquivariantFunction
from .kernels import KernelSystem
from .weil import WeilContext

__all__ = [
    "__version__", "CycNum", "gauss_sum", "psi", "sigma", "FpMatrix",
    "Lagrangian", "OrientedLagrangian", "SpElement", "SymplecticSpace",
    "enumerate_lagrangians", "enumerate_oriented", "sp_enumerate",
    "sp_random", "wedge_pairing", "Heisenberg", "Transversal",
    "EquivariantFunction", "KernelSystem", "WeilContext",
]
