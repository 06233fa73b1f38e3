"""Oriented hypergraphs: normalized-Laplacian spectra, exact combinatorial
invariants, strict vector colorings, spectral partition numbers, and
verification of the spectral bounds relating them."""

from .combinat import (
    InvariantSet,
    chromatic_number,
    clique_number,
    independence_number,
    invariant_set,
    weak_independence_number,
)
from .hypercore import (
    Hyperedge,
    OHGError,
    OHGParseError,
    OrientedHypergraph,
    StructuralProfile,
    parse_ohg,
    random_graph,
    random_hypergraph,
    restrict,
    serialize_ohg,
    structural_profile,
    two_section,
)
from .partition import (
    GEQ,
    LEQ,
    PartitionCapExceeded,
    PartitionResult,
    SpectraCache,
    admissible,
    partition_number,
)
from .spectral import (
    ConvergenceError,
    SpectralSummary,
    adjacency_matrix,
    chung_laplacian,
    normalized_laplacian,
    rayleigh_quotient,
    spectrum,
    symmetric_eigh,
)
from .vectorchrom import (
    GramFeasibility,
    VectorChromatic,
    blend_with_identity,
    gram_feasible,
    simplex_gram,
    vector_chromatic_detail,
    vector_chromatic_number,
)
from .verdict import (
    BoundReport,
    chi_v_lower_bound,
    inertia_bound,
    partition_lower_bounds,
    ratio_bound,
    verify_report,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ConvergenceError",
    "GEQ",
    "GramFeasibility",
    "Hyperedge",
    "InvariantSet",
    "LEQ",
    "OHGError",
    "OHGParseError",
    "OrientedHypergraph",
    "PartitionCapExceeded",
    "PartitionResult",
    "SpectraCache",
    "SpectralSummary",
    "StructuralProfile",
    "VectorChromatic",
    "adjacency_matrix",
    "admissible",
    "blend_with_identity",
    "chi_v_lower_bound",
    "chromatic_number",
    "chung_laplacian",
    "clique_number",
    "gram_feasible",
    "independence_number",
    "inertia_bound",
    "invariant_set",
    "normalized_laplacian",
    "parse_ohg",
    "partition_lower_bounds",
    "partition_number",
    "random_graph",
    "random_hypergraph",
    "ratio_bound",
    "rayleigh_quotient",
    "restrict",
    "serialize_ohg",
    "simplex_gram",
    "spectrum",
    "structural_profile",
    "symmetric_eigh",
    "two_section",
    "vector_chromatic_detail",
    "vector_chromatic_number",
    "verify_report",
    "weak_independence_number",
]
