"""Exact engine for a graded Lie algebra with basis L[a,i] and center C.

Bracket arithmetic over exact rationals, the Laurent-polynomial realization,
highest-weight module action by straightening, the degree -1 reducibility
criterion (condition rows, witness polynomials, generating-series
recurrences, parabolic diagnostics), and classification of compatible total
orders on the degree lattice.
"""

from .algebra import (
    CENTRAL,
    LieElement,
    bracket,
    bracket_basis,
    gen,
    is_central,
    lie_sum,
    symbol_str,
)
from .criterion import (
    RecurrenceCertificate,
    Report,
    SeriesAnalysis,
    SeriesWindow,
    WitnessPolynomial,
    annihilates_window,
    common_recurrence,
    condition_row,
    delta_series,
    detect_recurrence,
    p1_codimension,
    parabolic_chain,
    parabolic_step,
    quasifinite_verdict,
    reducibility_witness,
    sigma_series,
)
from .errors import BlockAlgError, WindowInsufficientError, WindowTooShortError
from .gamma_order import (
    EmbeddingOrder,
    LexOrder,
    OrderClassification,
    OrderVerdict,
    archimedean_witness,
    b_alpha_sample,
    bracket_rational_degree,
    classify,
    compare,
    order_from_json_dict,
    order_to_json_dict,
    order_verdict,
    rescale_weight,
    sign_of,
    surd,
)
from .laurent import Laurent, parse_rational, rational_str
from .oracle import (
    SampleConfig,
    ScanReport,
    corrupted_bracket_basis,
    equivalence_scan,
    jacobi_scan,
    realization_scan,
    representation_scan,
    row_oracle,
    run_all_scans,
)
from .parser import ParseError, parse_action, parse_element, parse_expr
from .realization import (
    RealizedElement,
    bracket_realized,
    from_realization,
    to_realization,
)
from .verma import (
    ModuleVector,
    SingularityCertificate,
    act,
    act_word,
    act_word_rewriting,
    certified_k_range,
    enumerate_pbw_monomials,
    is_singular,
    laurent_from_lowering_vector,
    lowering_vector_from_laurent,
    singular_at_minus_one,
)
from .weights import Recurrence, Weight, geometric_weight, weight_label

__version__ = "0.1.0"

__all__ = [
    "BlockAlgError",
    "CENTRAL",
    "EmbeddingOrder",
    "Laurent",
    "LexOrder",
    "LieElement",
    "ModuleVector",
    "OrderClassification",
    "OrderVerdict",
    "ParseError",
    "Recurrence",
    "RecurrenceCertificate",
    "Report",
    "SampleConfig",
    "ScanReport",
    "SeriesAnalysis",
    "SeriesWindow",
    "SingularityCertificate",
    "Weight",
    "WindowInsufficientError",
    "WindowTooShortError",
    "WitnessPolynomial",
    "act",
    "act_word",
    "act_word_rewriting",
    "annihilates_window",
    "archimedean_witness",
    "b_alpha_sample",
    "bracket",
    "bracket_basis",
    "bracket_rational_degree",
    "bracket_realized",
    "certified_k_range",
    "classify",
    "common_recurrence",
    "compare",
    "condition_row",
    "corrupted_bracket_basis",
    "delta_series",
    "detect_recurrence",
    "enumerate_pbw_monomials",
    "equivalence_scan",
    "from_realization",
    "gen",
    "geometric_weight",
    "is_central",
    "is_singular",
    "jacobi_scan",
    "laurent_from_lowering_vector",
    "lie_sum",
    "lowering_vector_from_laurent",
    "order_from_json_dict",
    "order_to_json_dict",
    "order_verdict",
    "p1_codimension",
    "parabolic_chain",
    "parabolic_step",
    "parse_action",
    "parse_element",
    "parse_expr",
    "parse_rational",
    "quasifinite_verdict",
    "rational_str",
    "realization_scan",
    "reducibility_witness",
    "representation_scan",
    "rescale_weight",
    "row_oracle",
    "run_all_scans",
    "RealizedElement",
    "sigma_series",
    "sign_of",
    "singular_at_minus_one",
    "surd",
    "symbol_str",
    "to_realization",
    "weight_label",
    "__version__",
]
