import itertools

import pytest
from hypothesis import given, strategies as st

from scgs.grammar import Rule, srule
from scgs.rewrite import (
    Component,
    ContractViolation,
    OccurrenceLimitError,
    apply_csg_rule,
    apply_scg_rule,
    component_successors,
    csg_positions,
    find_occurrences,
)
from scgs.symbols import nonterminal as nt

A, B, C, D, E = map(nt, "ABCDE")


def plus(x):
    return x.marked(top="+")


def naive_occurrences(rule, form):
    # every index tuple, kept when increasing and matching
    k = rule.degree
    return [
        pos for pos in itertools.product(range(len(form)), repeat=k)
        if all(a < b for a, b in zip(pos, pos[1:])) and all(form[p] == s for p, s in zip(pos, rule.lhs))
    ]


def test_pair_occurrences():
    r = srule([A, B], [[C], [D]])
    assert [o.positions for o in find_occurrences(r, (A, A, B))] == [(0, 2), (1, 2)]


def test_degree_three_single_occurrence():
    r = srule([plus(B), C, D], [[B.marked(top="-", right="|")], [E.marked(left="|", right="<")], [D.marked(left=">", right="|")]])
    assert [o.positions for o in find_occurrences(r, (plus(B), C, D))] == [(0, 1, 2)]


def test_apply_singleton_with_long_fragment():
    mcf_b = B.marked(top="-", right="|")
    cf_c = C.marked(left="|", right="|")
    r = srule([plus(A)], [[mcf_b, cf_c]])
    assert apply_scg_rule(r, (plus(A),), (0,)) == (mcf_b, cf_c)


def test_apply_scattered_replaces_each_position():
    outs = (B.marked(top="-", right="|"), E.marked(left="|", right="<"), D.marked(left=">", right="|"))
    r = srule([plus(B), C, D], [[o] for o in outs])
    assert apply_scg_rule(r, (plus(B), C, D), (0, 1, 2)) == outs


def test_apply_leaves_gaps_untouched():
    r = srule([A, B], [[C], [D, D]])
    assert apply_scg_rule(r, (E, A, E, B, E), (1, 3)) == (E, C, E, D, D, E)


@pytest.mark.parametrize("positions", [(0, 0), (1, 0), (0,), (0, 5), (0, 1)])
def test_stale_or_malformed_positions_raise(positions):
    r = srule([A, B], [[C], [D]])
    with pytest.raises(ContractViolation):
        apply_scg_rule(r, (A, A, B), positions)


def test_csg_steps():
    assert apply_csg_rule(Rule(("A",), ("B", "C")), ("A",), 0) == ("B", "C")
    assert apply_csg_rule(Rule(("C", "D"), ("E", "D")), ("B", "C", "D"), 1) == ("B", "E", "D")
    assert csg_positions(Rule(("C", "D"), ("E", "D")), ("C", "D", "C", "D")) == [0, 2]
    with pytest.raises(ContractViolation):
        apply_csg_rule(Rule(("C", "D"), ("E", "D")), ("B", "C", "D"), 0)


def test_occurrence_limit():
    r = srule([A, A], [[B], [B]])
    with pytest.raises(OccurrenceLimitError):
        find_occurrences(r, (A,) * 10, limit=5)


def test_component_matches_rule_by_rule_scan():
    rules = [srule([A, B], [[C], [D]]), srule([A], [[E]]), srule([B, A], [[A], [B]])]
    form = (A, B, A, B)
    expected = {apply_scg_rule(o.rule, form, o) for r in rules for o in find_occurrences(r, form)}
    assert component_successors(rules, form) == expected
    assert Component(rules).has_occurrence(form)
    assert not Component(rules).has_occurrence((C, D))


symbols = st.sampled_from([A, B, C])


@given(st.lists(symbols, min_size=1, max_size=3), st.lists(symbols, max_size=8))
def test_occurrences_agree_with_naive_oracle(lhs, form):
    rule = srule(lhs, [[D]] * len(lhs))
    got = [o.positions for o in find_occurrences(rule, tuple(form))]
    assert got == naive_occurrences(rule, form)
    comp = Component([rule])
    assert [o.positions for o in comp.occurrences(tuple(form))] == sorted(got, key=lambda p: (p[0], p))
