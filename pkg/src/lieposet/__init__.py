"""Exact cohomology and deformations of Lie poset algebras g(P) inside sl(N)."""

from .fields import (
    QQ,
    CharacteristicTooSmall,
    ContextMismatch,
    DivisionByZero,
    FieldCtx,
    FieldError,
    MissingModulus,
    NonPrimeModulus,
    Scalar,
    arithmetic,
    field_create,
    parse_field,
)
from .linalg import (
    BACKEND,
    ImageNotContained,
    SparseMatrix,
    Subspace,
    available_backends,
    image,
    kernel_basis,
    quotient_dim,
    rank,
    reduce_mod_image,
    use_backend,
)
from .poset import (
    Poset,
    PosetError,
    antichain,
    chain,
    named_poset,
    parse_family,
    poset_from_relations,
    random_poset,
    sphere,
)
from .nerve import (
    SimplicialCochain,
    SimplicialComplex,
    build_nerve,
    simplicial_coboundary,
    simplicial_cohomology,
)
from .algebra import (
    ADJOINT,
    ADJOINT_ON_IDEAL,
    TRIVIAL,
    E,
    Eta,
    GModule,
    LiePosetAlgebra,
    build_algebra,
    module_create,
    weight_uniqueness_counterexamples,
)
from .complex import (
    Cochain,
    CochainComplex,
    DimensionMismatch,
    IncompatiblePairing,
    NotHomogeneous,
    bigraded_decompose,
    ce_coboundary,
    cohomology,
    complex_for,
    complex_for_acting,
    contract,
    cup,
    phi,
    rho,
    sigma,
    tensor_factorization_check,
    weight_decompose,
    weight_identity_check,
)
from .deform import (
    DeformedBracket,
    H2Decomposition,
    JacobiCertificate,
    NotACocycle,
    NotACocycleAtOrderOne,
    NotCentral,
    deform_02,
    deform_11,
    deform_20,
    h2_decomposition,
    infinitesimal_of,
    jacobi_check,
)
from .verify import VerificationReport, verify_algebra

__version__ = "0.1.0"
