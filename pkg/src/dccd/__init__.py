"""Double change covering designs: construction, verification and search."""

__version__ = "0.1.0"

from .catalog import catalog, catalog_names
from .constructions import (
    BaseBlockFamily,
    CatalogEntry,
    adjoin_point,
    base_family,
    base_family_61,
    csccd_consecutive,
    develop,
    double_points,
    verify_base_family,
)
from .cost import CostParams, CostReport, full_swap_cost, sequential_cost
from .design import (
    BoundQuery,
    Classification,
    CoverageLedger,
    Design,
    classify,
    coverage,
    introductions,
    lower_bound_circular,
    lower_bound_linear,
    unchanged_subsets,
    verify_m_change,
)
from .errors import ParameterError, SearchBudgetExceeded, SearchRefused, StructuralError
from .expansion import ExpansionSet, corollary_chain, expand, find_expansion_set
from .factorization import OneFactorization, circle_method, verify_factorization
from .search import exhaustive_min_blocks
