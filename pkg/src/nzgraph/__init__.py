"""Locating-dominating sets and identifying codes of the non-zero component graph."""

from .codes import (
    Verdict,
    family_exchange_counterexample,
    family_T1,
    family_T2_Tn1,
    family_twin_deletion,
    is_identifying_code,
    is_locating_dominating,
    is_minimal,
)
from .errors import (
    BudgetExceededError,
    CapExceededError,
    ConsistencyError,
    NotTwinsError,
    NzGraphError,
    OrderTooLargeError,
    PreconditionError,
    SizeMismatchError,
)
from .graph import (
    ComponentGraph,
    VertexSet,
    build_graph,
    class_profile,
    closed_neighborhood,
    degree_of,
    export_graph,
)
from .solver import (
    ExchangeReport,
    SolveReport,
    brute_oracle,
    check_exchange,
    enumerate_minimal_id,
    enumerate_minimal_ld,
    min_id,
    min_ld,
    q2_lower_bound,
)
from .twins import TwinClass, TwinKind, TwinPartition, twin_lower_bound, twin_partition, twin_swap
from .vecspace import SpaceParams, VectorLabel, class_of, enumerate_vertices, twin_key
from .verify import VerifyReport, verify_matrix

__version__ = "0.1.0"
