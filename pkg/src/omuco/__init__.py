"""Exact solver for unconstrained and cardinality-constrained combinatorial
optimization with up to two ordinal objectives and one real-valued sum
objective.

The public surface: build an `Instance` (or parse one from text), call
`solve` for the complete nondominated set with one efficient representative
per point, and `oracle_solve` for brute-force ground truth on small
instances.
"""

from .core import (
    CountingVector,
    Instance,
    OrdinalObjective,
    OutcomeVector,
    SolutionVector,
    ValidationReport,
    cost_matrix,
    counting_vector,
    outcome,
    validate,
)
from .dominance import LabeledOutcome, ParetoResult, SolveStats, dominates, filter_nondominated
from .fileio import (
    GeneratorSpec,
    ParseError,
    emit_result,
    generate,
    generate_instance,
    parse_instance,
    serialize_instance,
)
from .flow import FlowNetwork, FlowResult, min_cost_flow, solve_transport
from .greedy import CategoryPartition, greedy_fill, partition_and_sort, solve_biobjective
from .lattice import (
    RhsVector,
    count_counting_vectors,
    count_counting_vectors_of_size,
    count_rhs_vectors,
    iter_counting_vectors,
    iter_counting_vectors_of_size,
    iter_rhs_vectors,
)
from .solver import InvalidInstanceError, SolverConfig, auto_delta, oracle_solve, solve
from .subproblem import (
    CategoryDemand,
    TransportInstance,
    build_transport,
    demands_from_rhs,
    item_cost,
    quick_feasible,
)

__version__ = "0.1.0"

__all__ = [
    "CategoryDemand",
    "CategoryPartition",
    "CountingVector",
    "FlowNetwork",
    "FlowResult",
    "GeneratorSpec",
    "Instance",
    "InvalidInstanceError",
    "LabeledOutcome",
    "OrdinalObjective",
    "OutcomeVector",
    "ParetoResult",
    "ParseError",
    "RhsVector",
    "SolutionVector",
    "SolveStats",
    "SolverConfig",
    "TransportInstance",
    "ValidationReport",
    "auto_delta",
    "build_transport",
    "cost_matrix",
    "count_counting_vectors",
    "count_counting_vectors_of_size",
    "count_rhs_vectors",
    "counting_vector",
    "demands_from_rhs",
    "dominates",
    "emit_result",
    "filter_nondominated",
    "generate",
    "generate_instance",
    "greedy_fill",
    "item_cost",
    "iter_counting_vectors",
    "iter_counting_vectors_of_size",
    "iter_rhs_vectors",
    "min_cost_flow",
    "oracle_solve",
    "outcome",
    "parse_instance",
    "partition_and_sort",
    "quick_feasible",
    "serialize_instance",
    "solve",
    "solve_biobjective",
    "solve_transport",
    "validate",
]
