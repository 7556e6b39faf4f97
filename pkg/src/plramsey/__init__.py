"""Finite posets with k linear extensions: copies, joins, and Ramsey extraction.

The library models triplets of a finite strict poset with k linear orders
extending it.  On top of that it provides order-preserving copy enumeration,
the join of k single-order structures with its shifted lexicographic orders
and canonical copies, per-coordinate Ramsey witness planning with color
blow-up, a backtracking witness verifier and searcher, and an end-to-end
pipeline that turns any coloring of the pattern copies of a joined host into
a concrete monochromatic copy of a target structure.
"""

from .errors import (
    ArityError,
    ArityMismatchError,
    CycleError,
    EmptyStructureError,
    Error,
    InvalidComponentError,
    NotMonochromaticError,
    OracleFailure,
    ParseError,
    PlanOverflowError,
    ShapeMismatchError,
    SizeMismatchError,
)
from .orders import (
    LinearOrder,
    PLStructure,
    StrictPoset,
    ValidationReport,
    Violation,
    antichain,
    build_structure,
    canonical_form,
    chain,
    is_chain_structure,
    order_slice,
    point,
    restrict_structure,
    structure_key,
    transitive_closure_strict,
    validate_structure,
)
from .embeddings import (
    Embedding,
    Semantics,
    check_embedding,
    compose_embeddings,
    copies_inside,
    copy_from_subset,
    enumerate_copies,
    identity_embedding,
    slice_embedding,
    unslice_embedding,
)
from .joins import (
    CanonicalCopy,
    JoinedStructure,
    Ordering,
    assemble_canonical_copy,
    decompose_canonical_copy,
    join,
    shifted_lex_compare,
)
from .product import (
    ChainOracle,
    PlanCoordinate,
    ProductColoring,
    ProductExtraction,
    ProductPlan,
    extract_product_monochromatic,
    plan_product_witnesses,
)
from .engine import (
    ConstructionManifest,
    CopyColoring,
    FindResult,
    FindStatus,
    SearchConfig,
    SearchOracle,
    VerifyResult,
    VerifyStatus,
    extract_monochromatic_copy,
    find_witness,
    synthesize_construction,
    verify_witness,
)
from .generate import (
    enumerate_posets,
    enumerate_structures,
    linear_extensions,
    random_linear_extension,
    random_poset,
    random_structure,
)

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "ArityMismatchError",
    "CanonicalCopy",
    "ChainOracle",
    "ConstructionManifest",
    "CopyColoring",
    "CycleError",
    "Embedding",
    "EmptyStructureError",
    "Error",
    "FindResult",
    "FindStatus",
    "InvalidComponentError",
    "JoinedStructure",
    "LinearOrder",
    "NotMonochromaticError",
    "OracleFailure",
    "Ordering",
    "PLStructure",
    "ParseError",
    "PlanCoordinate",
    "PlanOverflowError",
    "ProductColoring",
    "ProductExtraction",
    "ProductPlan",
    "SearchConfig",
    "SearchOracle",
    "Semantics",
    "ShapeMismatchError",
    "SizeMismatchError",
    "StrictPoset",
    "ValidationReport",
    "VerifyResult",
    "VerifyStatus",
    "Violation",
    "antichain",
    "assemble_canonical_copy",
    "build_structure",
    "canonical_form",
    "chain",
    "check_embedding",
    "compose_embeddings",
    "copies_inside",
    "copy_from_subset",
    "decompose_canonical_copy",
    "enumerate_copies",
    "enumerate_posets",
    "enumerate_structures",
    "extract_monochromatic_copy",
    "extract_product_monochromatic",
    "find_witness",
    "identity_embedding",
    "is_chain_structure",
    "join",
    "linear_extensions",
    "order_slice",
    "plan_product_witnesses",
    "point",
    "random_linear_extension",
    "random_poset",
    "random_structure",
    "restrict_structure",
    "shifted_lex_compare",
    "slice_embedding",
    "structure_key",
    "synthesize_construction",
    "transitive_closure_strict",
    "unslice_embedding",
    "validate_structure",
    "verify_witness",
]
