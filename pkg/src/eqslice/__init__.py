"""Exact Blanchfield pairings, involutions, and equivariant slice
obstructions for strongly invertible knots, from Seifert-matrix data."""

from .laurent import (
    LaurentPoly,
    PolyParseError,
    RationalFn,
    TorsionClass,
    coprime_split,
    format_poly,
    gcd_free_basis,
    in_lambda,
    laurent_gcd,
    normalize_alexander,
    parse_poly,
    symmetric_quadratic_tests,
)
from .matrices import (
    DegreeCapError,
    LambdaMatrix,
    SingularMatrixError,
    SnfResult,
    det,
    in_span,
    inverse_qt,
    kernel,
    snf,
)
from .modules import (
    ModuleElement,
    PresentedModule,
    direct_sum,
    element_equal,
    from_seifert,
    generating_rank,
    q_basis,
    submodule_presentation,
)
from .pairing import (
    GramPairing,
    check_hermitian,
    check_nonsingular,
    gram_from_seifert,
    pair,
    pair_via_solve,
)
from .involution import (
    SemilinearMap,
    direct_sum_involution,
    swap_involution,
    verify_anti_isometry,
    verify_involution,
)
from .witt import (
    EquivariantTriple,
    SubmoduleWitness,
    diagonal_metabolizer,
    is_metabolizer,
    negate,
    triple_sum,
    validate,
)
from .obstruction import (
    CERTIFIED_K0,
    COUNTEREXAMPLE,
    INCONCLUSIVE,
    NOT_EQUIVARIANTLY_ALGEBRAICALLY_SLICE,
    NOT_EQUIVARIANTLY_SLICE,
    UNDECIDED,
    GenusBound,
    QuadraticCertificate,
    amphichiral_obstruction,
    certify_k0,
    equivariant_slice_verdict,
    genus_lower_bound,
    tau_quadratic,
)
from .catalog import (
    CatalogError,
    CatalogValidationError,
    KnotSpec,
    SpecParseError,
    assemble,
    builtin,
    list_builtins,
    load,
    save,
    sum_specs,
)

__all__ = [
    "LaurentPoly",
    "PolyParseError",
    "RationalFn",
    "TorsionClass",
    "coprime_split",
    "format_poly",
    "gcd_free_basis",
    "in_lambda",
    "laurent_gcd",
    "normalize_alexander",
    "parse_poly",
    "symmetric_quadratic_tests",
    "DegreeCapError",
    "LambdaMatrix",
    "SingularMatrixError",
    "SnfResult",
    "det",
    "in_span",
    "inverse_qt",
    "kernel",
    "snf",
    "ModuleElement",
    "PresentedModule",
    "direct_sum",
    "element_equal",
    "from_seifert",
    "generating_rank",
    "q_basis",
    "submodule_presentation",
    "GramPairing",
    "check_hermitian",
    "check_nonsingular",
    "gram_from_seifert",
    "pair",
    "pair_via_solve",
    "SemilinearMap",
    "direct_sum_involution",
    "swap_involution",
    "verify_anti_isometry",
    "verify_involution",
    "EquivariantTriple",
    "SubmoduleWitness",
    "diagonal_metabolizer",
    "is_metabolizer",
    "negate",
    "triple_sum",
    "validate",
    "CERTIFIED_K0",
    "COUNTEREXAMPLE",
    "INCONCLUSIVE",
    "NOT_EQUIVARIANTLY_ALGEBRAICALLY_SLICE",
    "NOT_EQUIVARIANTLY_SLICE",
    "UNDECIDED",
    "GenusBound",
    "QuadraticCertificate",
    "amphichiral_obstruction",
    "certify_k0",
    "equivariant_slice_verdict",
    "genus_lower_bound",
    "tau_quadratic",
    "CatalogError",
    "CatalogValidationError",
    "KnotSpec",
    "SpecParseError",
    "assemble",
    "builtin",
    "list_builtins",
    "load",
    "save",
    "sum_specs",
]
