"""Hypergraph kernelization toolkit.

Shrinks hypergraphs with the edge-domination and node-domination rewrite
rules, decides isomorphism through canonical forms, computes exact minimum
hitting sets, and ships executable checks for the guarantees the rewrite
system provides (termination, one-step rejoining of divergent rewrites,
strategy-independent minimal forms, hitting-set preservation).
"""

from .core import (
    CapacityError,
    DomainError,
    Hypergraph,
    HypergraphError,
    IncidenceMatrix,
    UnknownIdError,
    hypergraph_from_matrix,
    relabel,
    validate,
)
from .formats import ParseError, parse, parse_json, parse_text, serialize, to_dot
from .harness import (
    DiamondReport,
    GeneratorParams,
    chain_hypergraph,
    check_confluence,
    check_diamond,
    check_hs_preservation,
    check_rule_lifting,
    check_rule_lifting_with,
    random_hypergraph,
)
from .hitting import (
    DEFAULT_NODE_BOUND,
    HittingSetResult,
    INFEASIBLE,
    is_hitting_set,
    min_hitting_set,
)
from .iso import (
    BRUTE_FORCE_LIMIT,
    CanonicalForm,
    DEFAULT_SIZE_GUARD,
    IsomorphismWitness,
    SIZE_GUARD_ENV,
    brute_force_isomorphic,
    canonical_form,
    default_size_guard,
    is_isomorphic,
    verify_witness,
)
from .rewrite import (
    LEX_EDGE_FIRST,
    LEX_NODE_FIRST,
    ReductionTrace,
    RuleApplication,
    RuleKind,
    RuleNotApplicableError,
    Strategy,
    apply,
    find_edge_dominations,
    find_node_dominations,
    is_minimal,
    random_strategy,
    reduce,
    rule_from_line,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "CanonicalForm",
    "CapacityError",
    "DEFAULT_NODE_BOUND",
    "DEFAULT_SIZE_GUARD",
    "DiamondReport",
    "DomainError",
    "GeneratorParams",
    "HittingSetResult",
    "Hypergraph",
    "HypergraphError",
    "INFEASIBLE",
    "IncidenceMatrix",
    "IsomorphismWitness",
    "LEX_EDGE_FIRST",
    "LEX_NODE_FIRST",
    "ParseError",
    "ReductionTrace",
    "RuleApplication",
    "RuleKind",
    "RuleNotApplicableError",
    "SIZE_GUARD_ENV",
    "Strategy",
    "UnknownIdError",
    "apply",
    "brute_force_isomorphic",
    "canonical_form",
    "chain_hypergraph",
    "check_confluence",
    "check_diamond",
    "check_hs_preservation",
    "check_rule_lifting",
    "check_rule_lifting_with",
    "default_size_guard",
    "find_edge_dominations",
    "find_node_dominations",
    "hypergraph_from_matrix",
    "is_hitting_set",
    "is_isomorphic",
    "is_minimal",
    "min_hitting_set",
    "parse",
    "parse_json",
    "parse_text",
    "random_hypergraph",
    "random_strategy",
    "reduce",
    "relabel",
    "rule_from_line",
    "serialize",
    "step",
    "to_dot",
    "validate",
    "verify_witness",
]
