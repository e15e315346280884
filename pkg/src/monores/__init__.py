"""monores: minimal free resolutions of squares of monomial ideals.

Builds the complexes M_q^2 and M^2(I), checks that labeled complexes support
free resolutions, and computes multigraded Betti numbers over F_p.
"""

__version__ = "0.1.0"

from .betti import BettiTable, betti_koszul, betti_supported, bound_cor1, bound_cor2, projective_dimension
from .errors import (
    CapacityError,
    EmptyIdealError,
    MethodError,
    MonoresError,
    ParseError,
    RingMismatchError,
    SupportError,
)
from .homology import FieldConfig, is_acyclic, reduced_homology_dims
from .io import load_fixture, parse_ideal, read_ideal, serialize_document
from .labeled import LabeledComplex, scarf_complex, supports_resolution, taylor_complex
from .monomial import Monomial, MonomialIdeal, VariableSet, divides, lcm, lcm_lattice, minimalize, square
from .msquare import build_m2_of_ideal, build_mq2, l3_squared_fixture
from .permutation import build_permutation_ideal, build_reduced_permutation_ideal, scarf_equals_mq2
from .polarization import polarize
from .simplicial import SimplicialComplex, f_vector, is_forest, is_tree

__all__ = [
    "BettiTable", "CapacityError", "EmptyIdealError", "FieldConfig", "LabeledComplex", "MethodError",
    "Monomial", "MonomialIdeal", "MonoresError", "ParseError", "RingMismatchError", "SimplicialComplex",
    "SupportError", "VariableSet", "betti_koszul", "betti_supported", "bound_cor1", "bound_cor2",
    "build_m2_of_ideal", "build_mq2", "build_permutation_ideal", "build_reduced_permutation_ideal",
    "divides", "f_vector", "is_acyclic", "is_forest", "is_tree", "l3_squared_fixture", "lcm",
    "lcm_lattice", "load_fixture", "minimalize", "parse_ideal", "polarize", "projective_dimension",
    "read_ideal", "reduced_homology_dims", "scarf_complex", "scarf_equals_mq2", "serialize_document",
    "square", "supports_resolution", "taylor_complex",
]
