"""Executable checks of the construction's behavioural claims.

Each checker returns a list of human-readable violations; an empty list
means the property held on everything explored within the budget.
"""

from __future__ import annotations

from collections import defaultdict

from .cdgs import SearchBudget, SystemSearch, _budget, format_word, is_terminal_form
from .grammar import DerivationTrace, GrammarSystem
from .symbols import BLOCKER, FIRST_MARKS, ONE, PLUS, TILDE, TWO, encode_form
from .transform import SIMULATION_SUBSETS, TERMINAL_SUBSETS

FIRST_SYMBOL_MARKS = FIRST_MARKS | {TILDE}
PAIR_MARKS = frozenset((ONE, TWO))
CONTINUATION_SUBSETS = frozenset(("P1_phase2", "P1_ABtoCD_d2b", "P1_ABtoCD_d2c"))


def mark_violations(form) -> list[str]:
    """At most one first-symbol mark and at most one pending-pair mark."""
    out = []
    firsts = sum(1 for s in form if s.top in FIRST_SYMBOL_MARKS)
    pairs = sum(1 for s in form if s.top in PAIR_MARKS)
    if firsts > 1:
        out.append(f"{firsts} symbols carry a first-symbol mark in {encode_form(form)}")
    if pairs > 1:
        out.append(f"{pairs} symbols carry a 1/2 mark in {encode_form(form)}")
    return out


def reachable_forms(gs: GrammarSystem, budget) -> tuple[set, bool]:
    """Every form met while exploring, intermediate component steps and blocked forms included."""
    search = SystemSearch(gs, _budget(budget), keep_blocked=True, record_forms=True)
    search.explore()
    search.recorded.add((gs.start,))
    return search.recorded, search.truncated


def check_mark_invariant(gs: GrammarSystem, budget) -> list[str]:
    forms, _ = reachable_forms(gs, budget)
    out = []
    for form in sorted(forms, key=encode_form):
        out.extend(mark_violations(form))
    return out


def terminal_phase_violations(trace: DerivationTrace) -> list[str]:
    """The terminal-phase rules form one contiguous suffix T1 T2* T3."""
    subsets = [step.subset for step in trace.steps]
    tail = [i for i, s in enumerate(subsets) if s in TERMINAL_SUBSETS]
    if not tail:
        return ["no terminal-phase step in a successful derivation"]
    out = []
    first = tail[0]
    if tail != list(range(first, len(subsets))):
        out.append(f"terminal-phase steps are not a contiguous suffix (first at step {first})")
    suffix = subsets[first:]
    if suffix[0] != "P1_T1":
        out.append(f"terminal phase starts with {suffix[0]} instead of P1_T1")
    if suffix[-1] != "P1_T3":
        out.append(f"terminal phase ends with {suffix[-1]} instead of P1_T3")
    middle = suffix[1:-1]
    if any(s != "P1_T2" for s in middle):
        out.append("terminal phase has a step other than P1_T2 between its first and last step")
    return out


def single_rule_violations(trace: DerivationTrace, component: int = 1) -> list[str]:
    """Each activation of the first component simulates exactly one input rule."""
    out = []
    for n, (comp, steps) in enumerate(trace.activations()):
        if comp != component:
            continue
        subsets = [s.subset for s in steps]
        if any(s in TERMINAL_SUBSETS for s in subsets):
            if not all(s in TERMINAL_SUBSETS for s in subsets):
                out.append(f"activation {n} mixes terminal-phase and simulation rules")
            continue
        sims = sum(1 for s in subsets if s in SIMULATION_SUBSETS)
        if sims != 1:
            out.append(f"activation {n} applies {sims} simulation rules")
        others = [s for s in subsets if s not in SIMULATION_SUBSETS and s not in CONTINUATION_SUBSETS]
        if others:
            out.append(f"activation {n} uses unexpected rule families {sorted(set(others))}")
    return out


def successful_traces(gs: GrammarSystem, budget) -> tuple[dict, bool]:
    """One witness trace per word of length <= max_len."""
    search = SystemSearch(gs, _budget(budget))
    words, parent = search.explore()
    traces = {}
    for form in parent:
        if is_terminal_form(form):
            traces[tuple(s.name for s in form)] = search.trace_to(form, parent)
    return traces, search.truncated


def check_terminal_phase(gs: GrammarSystem, budget) -> list[str]:
    traces, _ = successful_traces(gs, budget)
    out = []
    for word in sorted(traces):
        out.extend(f"{format_word(word)}: {v}" for v in terminal_phase_violations(traces[word]))
    return out


def check_single_rule(gs: GrammarSystem, budget) -> list[str]:
    traces, _ = successful_traces(gs, budget)
    out = []
    for word in sorted(traces):
        out.extend(f"{format_word(word)}: {v}" for v in single_rule_violations(traces[word]))
    return out


def _clean(form, gs: GrammarSystem) -> bool:
    # +X followed by unmarked nonterminals and primed terminals
    head, rest = form[0], form[1:]
    if head.top != PLUS or head.left or head.right or head.caret:
        return False
    return all(not s.has_marks and not s.base.terminal or (s.prime and not s.has_marks) for s in rest)


def check_second_component(gs: GrammarSystem, budget, checker: int = 2) -> list[str]:
    """Every checking activation ends clean, blocked, or in a form that yields no word.

    "Clean" is ``+X`` followed by unmarked symbols of N and N_T.  Productivity
    is judged on the explored state graph (backward reachability from words).
    """
    budget = _budget(budget)
    search = SystemSearch(gs, budget)
    words, parent = search.explore()
    edges = defaultdict(set)
    for form in parent:
        for succ in search.successors(form):
            edges[succ].add(form)
    productive = {f for f in parent if is_terminal_form(f)}
    stack = list(productive)
    while stack:
        f = stack.pop()
        for p in edges[f]:
            if p not in productive:
                productive.add(p)
                stack.append(p)

    idx = checker - 1
    blocked_view = SystemSearch(gs, budget, keep_blocked=True)
    out = []
    for form in parent:
        if is_terminal_form(form) or not search.components[idx].has_occurrence(form):
            continue
        for result in blocked_view.t_step(idx, form).forms:
            if _clean(result, gs) or BLOCKER in result:
                continue
            if result in productive:
                out.append(f"{encode_form(form)} => {encode_form(result)}: unchecked form still yields words")
    return out


def run_all_claims(gs: GrammarSystem, budget: SearchBudget | int) -> dict[str, list[str]]:
    budget = _budget(budget)
    return {
        "mark invariant": check_mark_invariant(gs, budget),
        "terminal phase": check_terminal_phase(gs, budget),
        "single rule per activation": check_single_rule(gs, budget),
        "second component checking": check_second_component(gs, budget),
    }
