"""Lower algebraic K-theory of the hyperbolic Coxeter tetrahedral groups."""

from .assembly import KTheoryResult, assemble, build_cell_complex, e2_page, h_fin
from .catalog import lookup, verify_all
from .coxeter import (
    CoxeterDiagram,
    CoxeterMatrix,
    classify_rank3,
    parse_diagram,
    special_subgroups,
    vertex_profile,
)
from .errors import ComputationError, InputError, LowerKError
from .finite_groups import carter_k_minus1_rank, ktheory_of, realize, wh_rank
from .geodesics import cusp_groups, enumerate_type1
from .groups import FiniteGroupType
from .kvalue import KValue
from .snf import smith_normal_form

__all__ = [
    "CoxeterDiagram",
    "CoxeterMatrix",
    "ComputationError",
    "FiniteGroupType",
    "InputError",
    "KTheoryResult",
    "KValue",
    "LowerKError",
    "assemble",
    "build_cell_complex",
    "carter_k_minus1_rank",
    "classify_rank3",
    "cusp_groups",
    "e2_page",
    "enumerate_type1",
    "h_fin",
    "ktheory_of",
    "lookup",
    "parse_diagram",
    "realize",
    "smith_normal_form",
    "special_subgroups",
    "verify_all",
    "vertex_profile",
    "wh_rank",
]
