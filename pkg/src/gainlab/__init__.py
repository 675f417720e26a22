"""gainlab: gain and ABC-quality analysis for B*y^n = A*x^n + k.

Computes the approximation gain, power gain, and quality of coprime
solutions, evaluates structural and conjectural bounds on them, searches
bounded parameter boxes exhaustively, and ships a verification corpus of
three historical solutions.
"""

from .bigmath import (
    BigLog,
    CTX,
    LN_PRECISION,
    gcd3,
    ipow,
    ln_big,
    nth_root_floor,
    round_sig,
)
from .factor import (
    BUDGET_ENV_VAR,
    DEFAULT_FACTOR_BUDGET,
    FactorBudgetExceeded,
    Factorization,
    factorize,
    is_prime,
    is_squarefree,
    radical,
    radical_of_product,
)
from .gains import (
    GainReport,
    NON_TRIVIAL,
    QMAX_STRONG,
    QMAX_ULTRA,
    QMax,
    Solution,
    SolutionError,
    TRIVIAL_X,
    ValidationReport,
    Violation,
    check_solution,
    compute_gains,
    compute_gains_partial,
    custom_qmax,
    ga_lower_bound,
    gp_upper_bound,
    k1_quality_bound,
    max_admissible_exponent,
    q_lower_bound,
    validate_solution,
)
from .search import (
    BoxTooLarge,
    DERIVED_K,
    FIXED_K,
    SearchBox,
    SearchResult,
    brute_force_oracle,
    cell_count,
    enumerate_fixed_k,
    hunt_derived_k,
    merge_results,
    split_box,
)
from .corpus import (
    CorpusEntry,
    QuantityVerdict,
    VerificationReport,
    builtin_corpus,
    verify_entry,
)

__version__ = "1.0.0"

__all__ = [
    "BigLog",
    "CTX",
    "LN_PRECISION",
    "gcd3",
    "ipow",
    "ln_big",
    "nth_root_floor",
    "round_sig",
    "BUDGET_ENV_VAR",
    "DEFAULT_FACTOR_BUDGET",
    "FactorBudgetExceeded",
    "Factorization",
    "factorize",
    "is_prime",
    "is_squarefree",
    "radical",
    "radical_of_product",
    "GainReport",
    "NON_TRIVIAL",
    "QMAX_STRONG",
    "QMAX_ULTRA",
    "QMax",
    "Solution",
    "SolutionError",
    "TRIVIAL_X",
    "ValidationReport",
    "Violation",
    "check_solution",
    "compute_gains",
    "compute_gains_partial",
    "custom_qmax",
    "ga_lower_bound",
    "gp_upper_bound",
    "k1_quality_bound",
    "max_admissible_exponent",
    "q_lower_bound",
    "validate_solution",
    "BoxTooLarge",
    "DERIVED_K",
    "FIXED_K",
    "SearchBox",
    "SearchResult",
    "brute_force_oracle",
    "cell_count",
    "enumerate_fixed_k",
    "hunt_derived_k",
    "merge_results",
    "split_box",
    "CorpusEntry",
    "QuantityVerdict",
    "VerificationReport",
    "builtin_corpus",
    "verify_entry",
    "__version__",
]
