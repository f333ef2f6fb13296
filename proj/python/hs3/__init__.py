"""Exact 3-hitting set solver with a brute-force oracle and a measure verifier."""

from ._hs3 import (
    Hypergraph,
    InputError,
    InvariantError,
    ParseError,
    PsiTable,
    SolveReport,
    branching_number,
    check_properties,
    dominates,
    enumerate_vectors,
    generate,
    oracle_decide,
    oracle_min,
    parse_instance,
    run_fuzz,
    select_rule,
    serialize_instance,
    solve,
    solve_minimum,
    verify_hitting,
    verify_rule,
)

__all__ = [
    "Hypergraph",
    "InputError",
    "InvariantError",
    "ParseError",
    "PsiTable",
    "SolveReport",
    "branching_number",
    "check_properties",
    "dominates",
    "enumerate_vectors",
    "generate",
    "oracle_decide",
    "oracle_min",
    "parse_instance",
    "run_fuzz",
    "select_rule",
    "serialize_instance",
    "solve",
    "solve_minimum",
    "verify_hitting",
    "verify_rule",
]
