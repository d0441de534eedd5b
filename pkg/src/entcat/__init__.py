"""entcat: exact decision procedures for entanglement catalyst existence.

Given two incomparable states (neither majorizes the other), the package
decides whether a k x k catalyst exists and enumerates the catalysts:

- closed_form: exact interval of 2x2 catalysts for 4x4 pairs
- sweep: breakpoint sweep for 2x2 catalysts at any dimension
- regions: hyperplane-arrangement search for general fixed k
- oracle: exhaustive grid cross-check

All arithmetic is exact rational; hot kernels run on a compiled extension
when available, with a pure-Python fallback selected at import
(``entcat.kernels.backend()`` reports which).
"""

from .closed_form import (
    NecessaryConditionReport,
    catalyst_interval_4x4,
    necessary_conditions_4x4,
)
from .core import (
    CatalystCandidate,
    ClosedInterval,
    Comparison,
    ProductSpectrum,
    SchmidtVector,
    as_fraction,
    compare,
    is_majorized,
    merge_intervals,
    normalize_and_sort,
    padded_pair,
    prefix_sums,
    tensor_spectrum,
    top_l_sum,
    verify_catalyst,
)
from .errors import (
    CatalysisError,
    DegenerateSimplex,
    IndexOutOfRange,
    LengthMismatch,
    NegativeEntry,
    NotIncomparable,
    TieAtRepresentative,
    TieAtSamplePoint,
    UnsupportedK,
    WrongDimension,
    ZeroVector,
)
from .oracle import GridSpec, grid_search
from .regions import (
    CatalystResult,
    CellRepresentative,
    HyperplaneSet,
    LinearSystem,
    SearchStats,
    Verdict,
    Witness,
    build_hyperplanes,
    cell_representatives,
    cell_system,
    feasible_union_k2,
    find_catalysts,
    solve_feasibility,
)
from .sweep import (
    FeasibleSet1D,
    breakpoints,
    find_catalysts_k2,
    fixed_order,
    gap_feasibility,
)

__version__ = "0.1.0"

__all__ = [
    "CatalysisError",
    "CatalystCandidate",
    "CatalystResult",
    "CellRepresentative",
    "ClosedInterval",
    "Comparison",
    "DegenerateSimplex",
    "FeasibleSet1D",
    "GridSpec",
    "HyperplaneSet",
    "IndexOutOfRange",
    "LengthMismatch",
    "LinearSystem",
    "NecessaryConditionReport",
    "NegativeEntry",
    "NotIncomparable",
    "ProductSpectrum",
    "SchmidtVector",
    "SearchStats",
    "TieAtRepresentative",
    "TieAtSamplePoint",
    "UnsupportedK",
    "Verdict",
    "Witness",
    "WrongDimension",
    "ZeroVector",
    "as_fraction",
    "breakpoints",
    "build_hyperplanes",
    "catalyst_interval_4x4",
    "cell_representatives",
    "cell_system",
    "compare",
    "feasible_union_k2",
    "find_catalysts",
    "find_catalysts_k2",
    "fixed_order",
    "gap_feasibility",
    "grid_search",
    "is_majorized",
    "merge_intervals",
    "necessary_conditions_4x4",
    "normalize_and_sort",
    "padded_pair",
    "prefix_sums",
    "solve_feasibility",
    "tensor_spectrum",
    "top_l_sum",
    "verify_catalyst",
]
