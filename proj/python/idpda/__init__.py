"""Input-driven pushdown automata: witness families, determinization and checks."""

from ._core import (
    BehaviorRelation,
    ConfigError,
    DeterminizationResult,
    Didpda,
    Error,
    LexError,
    Metrics,
    Nidpda,
    ParseError,
    PreconditionError,
    ResourceError,
    ValidationError,
    behavior_relation,
    build_A,
    build_B,
    build_B12,
    build_Bns,
    compose,
    determinize,
    didpda_accepts,
    didpda_run,
    gadget,
    nidpda_accepts,
    parse_automaton,
    parse_didpda,
    product_inequivalence,
    relation_accepts,
    remove,
    run_suite,
    tokenize,
    trace,
)

__all__ = [name for name in dir() if not name.startswith("_")]
