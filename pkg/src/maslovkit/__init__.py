"""Exact computer algebra for Clifford QCA over prime qudits.

Laurent polynomial rings with the inversion involution, Pauli modules and
their Lagrangian stabilizer submodules, Sturm sequences and the generalized
Maslov index, Witt-group classification over F_p, the classical real Maslov
index, and the L-group recursion with the resulting loop classification.
"""

from .errors import (
    DegenerateForm,
    DegenerateInput,
    DivisionByZero,
    DomainError,
    EndpointRoot,
    FormError,
    InternalInvariantViolation,
    MaslovkitError,
    NotALoop,
    NotAUnit,
    RingMismatch,
    ShapeError,
    UnsupportedRing,
)
from .ring import (
    FieldElement,
    LaurentPolynomial,
    RingDescriptor,
    augment,
    eval_T,
    field_arith,
    involute,
    is_square,
    least_non_residue,
    poly_arith,
)
from .linalg import (
    RingMatrix,
    SmithDecomposition,
    dagger,
    det,
    inverse,
    is_unit_matrix,
    kernel_basis,
    mat_mul,
    smith_normal_form,
    solve_in_span,
    span_contains,
    spans_equal,
)
from .forms import (
    FormTriple,
    HermitianForm,
    WittClass,
    check_hermitian,
    diagonalize,
    hyperbolic_form,
    in_fundamental_ideal,
    triple_delta,
    witt_add,
    witt_class,
    witt_neg,
)
from .pauli import (
    CliffordUnitary,
    PauliModule,
    StabilizerModule,
    apply,
    commutation_phase,
    diag_identity_decomposition,
    elementary_unitary,
    hyperbolic_unitary,
    is_isotropic,
    is_lagrangian,
    is_transversal,
    lagrangian_report,
    modules_equal,
    pairing,
)
from .sturm import (
    LagrangianLoop,
    MaslovResult,
    SturmSequence,
    constant_loop,
    lambda_flip_homotopy,
    loop_from_pair,
    maslov_index,
    stabilized_image,
    sturm_tridiagonal,
    sturm_unitary,
    transversal_witness,
    trivmas_homotopy,
    validate_loop,
)
from .realmaslov import (
    RealPolynomial,
    ResidueSequence,
    linearization_residual,
    paper_example_polynomial,
    real_maslov,
    residue_signature_form,
    sturm_residues,
)
from .lgroups import (
    FiniteAbelianGroup,
    classify_loops,
    fundamental_ideal_group,
    lgroup,
    lgroup_base,
    witt_group_structure,
)

__version__ = "0.1.0"
