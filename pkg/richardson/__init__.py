from .attach import AttachedChains, attach_chain, attach_chains, is_star_set
from .core import (
    METHODS,
    MultiplicityReport,
    TheoremViolationError,
    build_report,
)
from .indices import (
    IndexTuple,
    IndexTupleError,
    bruhat_leq,
    mirror_index,
    validate_tuple,
)
from .paths import count_path_families, enumerate_paths, path_endpoints
from .starsets import (
    DEFAULT_ORBIT_BUDGET,
    BudgetExceededError,
    count_max_bounded_star_sets,
)

__all__ = [
    "AttachedChains",
    "BudgetExceededError",
    "DEFAULT_ORBIT_BUDGET",
    "IndexTuple",
    "IndexTupleError",
    "METHODS",
    "MultiplicityReport",
    "TheoremViolationError",
    "attach_chain",
    "attach_chains",
    "bruhat_leq",
    "build_report",
    "count_max_bounded_star_sets",
    "count_path_families",
    "enumerate_paths",
    "is_star_set",
    "mirror_index",
    "path_endpoints",
    "validate_tuple",
]
