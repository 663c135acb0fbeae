"""Exact-arithmetic construction, certification, and classification of root
systems inside rings of integers of number fields."""

from .classify import classify_rank, enumerate_types, survivors, verify_degree_window
from .exact import Mat, QuadForm, enumerate_ball, enumerate_level_set
from .fieldops import FieldOperator, generate_operators, generate_subgroup, recognize
from .numberfield import FieldElement, NumberField, make_field
from .realizations import (
    REALIZATION_LABELS,
    biquadratic_embedding,
    build_realization,
    fixed_space_obstruction,
    norm_level_set,
    reflection_operator,
)
from .rootsystems import (
    MatrixGroup,
    RootSet,
    RootSystemType,
    classify_type,
    extract_base,
    generate_weyl,
    max_element_order,
    normal_cyclic_subgroups,
    reflection_matrix,
    standard_root_set,
    verify_root_system,
)
from .weyldata import legendre_nu, nu2_lower_bound, nu_p, orthogonal_a1_bound, weyl_order

__all__ = [
    "FieldElement",
    "FieldOperator",
    "Mat",
    "MatrixGroup",
    "NumberField",
    "QuadForm",
    "REALIZATION_LABELS",
    "RootSet",
    "RootSystemType",
    "biquadratic_embedding",
    "build_realization",
    "classify_rank",
    "classify_type",
    "enumerate_ball",
    "enumerate_level_set",
    "enumerate_types",
    "extract_base",
    "fixed_space_obstruction",
    "generate_operators",
    "generate_subgroup",
    "generate_weyl",
    "legendre_nu",
    "make_field",
    "max_element_order",
    "normal_cyclic_subgroups",
    "norm_level_set",
    "nu2_lower_bound",
    "nu_p",
    "orthogonal_a1_bound",
    "recognize",
    "reflection_matrix",
    "reflection_operator",
    "standard_root_set",
    "survivors",
    "verify_degree_window",
    "verify_root_system",
    "weyl_order",
]
