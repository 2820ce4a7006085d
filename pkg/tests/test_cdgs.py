import dataclasses

import pytest

from scgs.cdgs import (
    NO,
    UNKNOWN,
    YES,
    NotAMember,
    SearchBudget,
    SystemSearch,
    enumerate_csg_language,
    enumerate_language,
    find_derivation,
    is_member,
    replay_trace,
    system_successors,
    t_step,
)
from scgs.grammar import MonotoneGrammar
from scgs.rewrite import ContractViolation, component_successors
from scgs.symbols import BLOCKER, decode_form, nonterminal as nt

from conftest import words

A, B, C, D = map(nt, "ABCD")


def plus(x):
    return x.marked(top="+")


def mcf(x):
    return x.marked(top="-", right="|")


def cf(x):
    return x.marked(left="|", right="|")


def star(x):
    return x.marked(top="*")


def test_first_component_successors_of_axiom(example_system):
    p1, p2 = example_system.components
    assert component_successors(p1, (plus(A),)) == {(mcf(B), cf(C)), (star(A),)}
    assert component_successors(p2, (plus(A),)) == set()


def test_t_step_first_component_on_axiom(example_system):
    p1, _ = example_system.components
    result = t_step(p1, (plus(A),), 4)
    assert {(mcf(B), cf(C)), (star(A),)} <= result.forms
    assert not result.truncated


def test_t_step_without_applicable_rule_is_identity(example_system):
    assert t_step(example_system.components[1], (plus(A),), 4).forms == {(plus(A),)}


def test_t_step_checks_and_releases(example_system):
    result = t_step(example_system.components[1], (mcf(B), cf(C)), 4)
    assert result.forms == {(plus(B), C)}


def test_t_step_keeps_blocked_forms_on_request(example_system):
    p2 = example_system.components[1]
    # checking |D| first skips |C|, which must then block
    form = decode_form("[-.B..|] [.|C..|] [.|D..|]")
    kept = t_step(p2, form, 4, keep_blocked=True).forms
    assert any(BLOCKER in f for f in kept)
    assert t_step(p2, form, 4).forms == {(plus(B), C, D)}


def test_system_successors(example_system):
    succ = system_successors(example_system, (plus(B), C), 4).forms
    assert (mcf(B), cf(C), cf(D)) in succ
    assert (star(B), C) in succ


def test_example_enumeration(example, example_system):
    assert enumerate_language(example_system, 3).words == words("bc", "bcd", "bed")
    assert enumerate_language(example_system, 1).words == frozenset()
    assert enumerate_csg_language(example, 3).words == words("bc", "bcd", "bed")
    assert enumerate_csg_language(example, 2).words == words("bc")


def test_enumeration_is_deterministic(example_system):
    first = SystemSearch(example_system, 4).explore()[1]
    second = SystemSearch(example_system, 4).explore()[1]
    assert list(first) == list(second)


def test_membership(example_system):
    assert is_member(example_system, "bed").verdict == YES
    assert is_member(example_system, "db").verdict == NO
    assert is_member(example_system, "").verdict == NO
    assert is_member(example_system, "bx").verdict == NO


def test_membership_unknown_when_truncated(example_system):
    result = is_member(example_system, "bcdd", SearchBudget(4, max_states=5))
    assert result.verdict == UNKNOWN and result.trace is None


def test_csg_membership_and_trace(example):
    trace = find_derivation(example, "bed")
    assert [str(s.rule) for s in trace.steps][:3] == ["A -> B C", "C -> C D", "C D -> E D"]
    assert replay_trace(trace, example) == ("b", "e", "d")


def test_bc_trace_opens_with_the_worked_derivation(example_system):
    trace = find_derivation(example_system, "bc")
    forms = [trace.start] + [s.after for s in trace.steps[:4]]
    assert forms == [
        decode_form("[+.A...]"),
        decode_form("[-.B..|] [.|C..|]"),
        decode_form("[+.B.^|] [.|C..|]"),
        decode_form("[+.B...] [..C.^|]"),
        decode_form("[+.B...] C"),
    ]
    assert [s.subset for s in trace.steps[:4]] == ["P1_AtoBC", "P2_init", "P2_checkf", "P2_end"]
    assert [s.component for s in trace.steps[:4]] == [1, 2, 2, 2]
    assert [s.subset for s in trace.steps[-3:]] == ["P1_T1", "P1_T2", "P1_T3"]


def test_bed_trace(example_system):
    trace = find_derivation(example_system, "bed")
    assert replay_trace(trace, example_system) == decode_form("b e d", terminals="bed")
    simulated = [steps[0].rule.source for comp, steps in trace.activations() if comp == 1]
    assert simulated[:3] == ["A -> B C", "C -> C D", "C D -> E D"]
    assert trace.steps[-1].subset == "P1_T3"
    groups = trace.activations()
    i = next(n for n, (comp, steps) in enumerate(groups) if steps[0].rule.source == "C D -> E D")
    assert [s.subset for s in groups[i + 1][1]] == ["P2_init", "P2_checkf", "P2_check", "P2_end"]


def test_replay_rejects_tampered_traces(example_system):
    trace = find_derivation(example_system, "bc")
    bad = dataclasses.replace(trace.steps[1], positions=(1,))
    with pytest.raises(ContractViolation):
        replay_trace(type(trace)(trace.start, [trace.steps[0], bad] + trace.steps[2:]))
    skipped = type(trace)(trace.start, trace.steps[1:])
    with pytest.raises(ContractViolation):
        replay_trace(skipped)
    wrong_component = dataclasses.replace(trace.steps[0], component=2)
    with pytest.raises(ContractViolation):
        replay_trace(type(trace)(trace.start, [wrong_component]), example_system)


def test_find_derivation_raises_for_non_members(example_system):
    with pytest.raises(NotAMember):
        find_derivation(example_system, "db")


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(0)
    with pytest.raises(TypeError):
        enumerate_language(None, "3")


def test_grammar_with_empty_language():
    g = MonotoneGrammar.build("S A", "a", "S", ["S -> A", "A -> S"])
    assert enumerate_csg_language(g, 3).words == frozenset()
