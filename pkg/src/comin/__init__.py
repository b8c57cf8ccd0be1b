"""Schubert calculus, line incidences and rigidity bounds for cominuscule G/P."""

__version__ = "0.1.0"

from .bounds import BoundReport, char_bound, smoothness_bound, very_ample_twist
from .catalog import SpaceDescriptor, describe, vmrt_tower
from .chains import ChainTensor, delta_i, extend_chain, multinomial
from .chow import ChowElement, chevalley_H, chow_ring, degree, lr_coefficients, multiply
from .incidence import IncidenceMatrix, cone_class, incidence_matrix, quantum_chevalley_q_part
from .poset import SchubertClass, dual, linear_extensions_count, minuscule_poset, order_ideals
from .root_data import RootSystem, build_root_system

__all__ = [
    "BoundReport", "ChainTensor", "ChowElement", "IncidenceMatrix", "RootSystem", "SchubertClass",
    "SpaceDescriptor", "build_root_system", "char_bound", "chevalley_H", "chow_ring", "cone_class",
    "degree", "delta_i", "describe", "dual", "extend_chain", "incidence_matrix", "linear_extensions_count",
    "lr_coefficients", "minuscule_poset", "multinomial", "multiply", "order_ideals",
    "quantum_chevalley_q_part", "smoothness_bound", "very_ample_twist", "vmrt_tower",
]
