"""Exact structure theory of finite-dimensional Lie color algebras.

Graded vector spaces over the rationals, homogeneous block maps, color
brackets twisted by a skew-symmetric bicharacter, and constructive
triangularization: common annihilated vectors for nil algebras, common
homogeneous eigenvectors and color flags for solvable algebras over
torsion-free gradings, plus the cyclic-grading counterexample showing
the torsion-free hypothesis is necessary.
"""

from .errors import (
    BadDiagonal,
    ColorLieError,
    DegreeMismatch,
    EmptySpace,
    GroupMismatch,
    HypothesisFailed,
    IrrationalEigenvalue,
    ModulusTooSmall,
    NoHomogeneousEigenvector,
    NonzeroDegree,
    NotClosed,
    NotInAlgebra,
    NotSkewSymmetric,
    NotSolvable,
    NotSquare,
    ParentMismatch,
    ParseError,
    ShapeMismatch,
    SizeMismatch,
    SpaceMismatch,
    TheoremViolation,
    TorsionDegree,
    TorsionGrading,
    TorsionIncompatible,
    UnknownDegree,
    ValidationError,
    ZeroAlgebra,
    ZeroDegree,
    ZeroPolynomial,
)
from .linalg import (
    Matrix,
    Poly,
    char_poly,
    inverse,
    is_nilpotent_matrix,
    kernel_basis,
    nil_subspace_check,
    rational_roots,
    rref,
    solve_unique,
)
from .grading import (
    Bicharacter,
    GroupElement,
    GroupSpec,
    element_add,
    element_scale,
    eval_bicharacter,
    has_infinite_order,
    make_bicharacter,
    make_group,
)
from .graded import (
    ComponentEigenReport,
    GradedSpace,
    GradedVector,
    HomogeneousMap,
    NilpotencyCertificate,
    add_maps,
    apply,
    compose,
    flatten_map,
    flatten_vector,
    graded_kernel,
    homogeneous_eigenvalues,
    identity_map,
    make_map,
    make_space,
    make_vector,
    map_power,
    nilpotent_by_grading,
    scale_map,
    standard_basis_vector,
    unflatten_map,
    unflatten_vector,
    zero_map,
)
from .algebra import (
    AdExpansion,
    AdNilpotencyReport,
    ColorAlgebra,
    Subspace,
    ad_map,
    ad_power_expand,
    ad_representation,
    bracket_closure,
    bracket_subspaces,
    center,
    color_bracket,
    derived_series,
    full_subspace,
    is_ideal,
    is_nilpotent_algebra,
    is_solvable,
    lower_central_series,
    nilpotent_implies_ad_nilpotent_check,
)
from .structure import (
    ColorFlag,
    EngelReport,
    IdealChain,
    Weight,
    Z3Report,
    codim_one_ideal,
    color_flag,
    common_annihilated_vector,
    common_homogeneous_eigenvector,
    engel_check,
    ideal_chain,
    z3_counterexample,
)
from .fileformat import ProblemFile, load_problem, parse_problem, serialize_problem

__version__ = "0.1.0"
