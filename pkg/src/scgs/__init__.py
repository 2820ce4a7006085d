"""Scattered-context CD grammar systems for context-sensitive languages."""

from .cdgs import (
    Enumeration,
    Membership,
    NotAMember,
    SearchBudget,
    StepResult,
    enumerate_csg_language,
    enumerate_language,
    find_derivation,
    is_member,
    replay_trace,
    system_successors,
    t_step,
)
from .grammar import (
    DerivationStep,
    DerivationTrace,
    GrammarError,
    GrammarSystem,
    MonotoneGrammar,
    Rule,
    ScatteredRule,
    validate_grammar,
    validate_system,
)
from .kuroda import is_kuroda, to_kuroda
from .rewrite import apply_csg_rule, apply_scg_rule, component_successors, find_occurrences
from .symbols import BLOCKER, BaseSymbol, MarkedSymbol, decode_marked_symbol, encode_marked_symbol
from .textio import parse_grammar, parse_system, serialize_grammar, serialize_system
from .transform import (
    build_component1,
    build_component2,
    build_marked_alphabet,
    reduce_to_degree2,
    rule_count_report,
    transform_csg_to_scgs,
)

__version__ = "0.1.0"
