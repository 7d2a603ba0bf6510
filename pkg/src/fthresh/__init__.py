"""fthresh: exact F-thresholds of filtrations of monomial ideals.

Everything is exact rational arithmetic: monomial ideal operations,
Newton polyhedra and Rees valuations, nu counts against Frobenius
powers, closed-form and bracketed F-thresholds, skew Waldschmidt
constants, and the hypergraph invariants that bound them.
"""

from .errors import (
    AmbientMismatchError,
    CapabilityError,
    FThreshError,
    SizeGuardError,
    UnsupportedInputError,
    UnsupportedSymbolicPowerError,
)
from .filtration import (
    AdmissibilityReport,
    AxiomReport,
    BinomialSum,
    CeilingPower,
    Filtration,
    IntegralClosurePowers,
    IntersectionFiltration,
    OrdinaryPowers,
    PrimePowerIntersection,
    ProductFiltration,
    SymbolicSquarefree,
    VeroneseAnnotation,
    filtration_from_json,
    is_admissible_witness,
    symbolic_filtration,
    verify_filtration_axioms,
)
from .hypergraph import (
    Hypergraph,
    clique_number,
    cover_ideal,
    edge_ideal,
    fractional_chromatic,
    fractional_matching_number,
    hypergraph_of_ideal,
    independence_number,
    is_chordal,
    matching_number,
    max_cliques,
    maximal_independent_sets,
    threshold_bounds_report,
    vertex_cover_number,
)
from .lp import LPResult, solve_lp
from .monomial import Monomial, MonomialIdeal, minimal_transversals
from .newton import (
    FacetInequality,
    NewtonPolyhedron,
    integral_closure_contains,
    integral_closure_generators,
    integral_closure_level,
    newton_polyhedron,
    rees_valuations,
    threshold_lp,
)
from .nu import (
    BigHeightReport,
    LawReport,
    NuRecord,
    NuSequence,
    ThresholdResult,
    big_height_criterion,
    check_min_law,
    check_sum_product_laws,
    fthreshold,
    fthreshold_bracket,
    fthreshold_ordinary,
    fthreshold_prime_power_intersection,
    fthreshold_symbolic_squarefree,
    nu_sequence,
    nu_value,
    symbolic_bracket_containment,
    symbolic_fsplit_witness,
    veronese_reduce,
)
from .waldschmidt import WaldschmidtResult, skew_waldschmidt

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatchError",
    "CapabilityError",
    "FThreshError",
    "SizeGuardError",
    "UnsupportedInputError",
    "UnsupportedSymbolicPowerError",
    "AdmissibilityReport",
    "AxiomReport",
    "BinomialSum",
    "CeilingPower",
    "Filtration",
    "IntegralClosurePowers",
    "IntersectionFiltration",
    "OrdinaryPowers",
    "PrimePowerIntersection",
    "ProductFiltration",
    "SymbolicSquarefree",
    "VeroneseAnnotation",
    "filtration_from_json",
    "is_admissible_witness",
    "symbolic_filtration",
    "verify_filtration_axioms",
    "Hypergraph",
    "clique_number",
    "cover_ideal",
    "edge_ideal",
    "fractional_chromatic",
    "fractional_matching_number",
    "hypergraph_of_ideal",
    "independence_number",
    "is_chordal",
    "matching_number",
    "max_cliques",
    "maximal_independent_sets",
    "threshold_bounds_report",
    "vertex_cover_number",
    "LPResult",
    "solve_lp",
    "Monomial",
    "MonomialIdeal",
    "minimal_transversals",
    "FacetInequality",
    "NewtonPolyhedron",
    "integral_closure_contains",
    "integral_closure_generators",
    "integral_closure_level",
    "newton_polyhedron",
    "rees_valuations",
    "threshold_lp",
    "BigHeightReport",
    "LawReport",
    "NuRecord",
    "NuSequence",
    "ThresholdResult",
    "big_height_criterion",
    "check_min_law",
    "check_sum_product_laws",
    "fthreshold",
    "fthreshold_bracket",
    "fthreshold_ordinary",
    "fthreshold_prime_power_intersection",
    "fthreshold_symbolic_squarefree",
    "nu_sequence",
    "nu_value",
    "symbolic_bracket_containment",
    "symbolic_fsplit_witness",
    "veronese_reduce",
    "WaldschmidtResult",
    "skew_waldschmidt",
    "__version__",
]
