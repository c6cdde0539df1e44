"""
Semimodules over a two-generated numerical semigroup: lean sets, duals,
syzygies, lattice paths, resolutions and the selfdual census.
"""

from .duality import (
    DualResult,
    dual,
    dual_dual_check,
    dual_generators,
    dual_of,
    dual_oracle,
    dual_shift_check,
    dual_union_check,
    hat_generators,
)
from .pathmatrix import (
    LatticePath,
    PathMatrix,
    Step,
    canonical_matrix,
    enumerate_classes,
    enumerate_matrices,
    lean_to_matrix,
    lean_to_path,
    matrix_equiv,
    matrix_to_lean,
    matrix_to_path,
    path_to_lean,
    rational_catalan,
)
from .resolution import (
    Bivector,
    ResolutionDegrees,
    bivector_syzygies,
    hat_duality_check,
    hat_semimodule,
    kernel_relations_balance,
    resolution_degrees,
    second_syzygy_exponents,
)
from .selfdual import (
    CensusReport,
    CensusResult,
    FormKind,
    ParityDirection,
    SelfdualForm,
    census,
    classify_form,
    expected_census,
    is_selfdual,
    is_selfdual_matrix,
    observed_census,
    parity_bijection,
    parity_invariant_check,
    selfdual_matrices,
    selfdual_total,
)
from .semigroup import (
    GapCoord,
    NumericalSemigroup,
    conductor,
    contains,
    decode,
    frobenius,
    gap_coords,
    gap_difference_is_gap,
    gaps,
    genus,
    lgap_less,
)
from .semimodule import (
    conductor as semimodule_conductor,
    LeanSet,
    SemimoduleClass,
    ShiftedSemimodule,
    as_shifted,
    from_window,
    generate,
    hom,
    intersection_window,
    is_isomorphic,
    member,
    minimal_generators_from_window,
    normalize,
    union,
)
from .syzygy import (
    DihedralReport,
    FundamentalCouple,
    OrbitEntry,
    dihedral_check,
    dihedral_orbit,
    syzygy,
    syzygy_class,
    syzygy_dual_correspondence,
    syzygy_generators,
    syzygy_matrix,
    syzygy_matrix_inverse,
    syzygy_oracle,
    syzygy_period,
    syzygy_power,
)

__all__ = [
    "Bivector",
    "CensusReport",
    "CensusResult",
    "DihedralReport",
    "DualResult",
    "FormKind",
    "FundamentalCouple",
    "GapCoord",
    "LatticePath",
    "LeanSet",
    "NumericalSemigroup",
    "OrbitEntry",
    "ParityDirection",
    "PathMatrix",
    "ResolutionDegrees",
    "SelfdualForm",
    "SemimoduleClass",
    "ShiftedSemimodule",
    "Step",
    "as_shifted",
    "bivector_syzygies",
    "canonical_matrix",
    "census",
    "classify_form",
    "conductor",
    "contains",
    "decode",
    "dihedral_check",
    "dihedral_orbit",
    "dual",
    "dual_dual_check",
    "dual_generators",
    "dual_of",
    "dual_oracle",
    "dual_shift_check",
    "dual_union_check",
    "enumerate_classes",
    "enumerate_matrices",
    "expected_census",
    "frobenius",
    "from_window",
    "gap_coords",
    "gap_difference_is_gap",
    "gaps",
    "generate",
    "genus",
    "hat_duality_check",
    "hat_generators",
    "hat_semimodule",
    "hom",
    "intersection_window",
    "is_isomorphic",
    "is_selfdual",
    "is_selfdual_matrix",
    "kernel_relations_balance",
    "lean_to_matrix",
    "lean_to_path",
    "lgap_less",
    "matrix_equiv",
    "matrix_to_lean",
    "matrix_to_path",
    "member",
    "minimal_generators_from_window",
    "normalize",
    "observed_census",
    "parity_bijection",
    "parity_invariant_check",
    "path_to_lean",
    "rational_catalan",
    "resolution_degrees",
    "second_syzygy_exponents",
    "selfdual_matrices",
    "selfdual_total",
    "semimodule_conductor",
    "syzygy",
    "syzygy_class",
    "syzygy_dual_correspondence",
    "syzygy_generators",
    "syzygy_matrix",
    "syzygy_matrix_inverse",
    "syzygy_oracle",
    "syzygy_period",
    "syzygy_power",
    "union",
]
