import random

from hypothesis import given, settings, strategies as st

from scgs.cdgs import enumerate_csg_language
from scgs.fuzz import random_monotone_grammar
from scgs.grammar import MonotoneGrammar, validate_grammar
from scgs.kuroda import is_kuroda, kuroda_shape, to_kuroda
from scgs.textio import parse_grammar, serialize_grammar


def test_example_is_kuroda_and_maps_to_itself(example):
    assert is_kuroda(example) == (True, None)
    assert to_kuroda(example) == example


def test_example_shapes(example):
    shapes = {str(r): kuroda_shape(example, r) for r in example.rules}
    assert shapes["B D -> D B"] == 1
    assert shapes["C D -> E D"] == 1
    assert shapes["A -> B C"] == 2
    assert shapes["B -> b"] == 4


def test_single_terminal_rule_unchanged():
    g = MonotoneGrammar.build("S", "a", "S", ["S -> a"])
    assert to_kuroda(g) == g


def test_offender_is_first_non_kuroda_rule():
    g = MonotoneGrammar.build("S A", "a", "S", ["S -> A", "A -> a a", "S -> a"])
    ok, offender = is_kuroda(g)
    assert not ok and str(offender) == "A -> a a"


def test_three_symbol_left_side_becomes_pair_cascade():
    g = MonotoneGrammar.build(
        "S A B C D", "a b c d", "S",
        ["S -> A B C", "A B C -> A B D", "A -> a", "B -> b", "C -> c", "D -> d"],
    )
    k = to_kuroda(g)
    assert is_kuroda(k)[0]
    assert all(len(r.lhs) <= 2 for r in k.rules)
    assert enumerate_csg_language(g, 4).words == enumerate_csg_language(k, 4).words
    assert {("a", "b", "c"), ("a", "b", "d")} == set(enumerate_csg_language(k, 4).words)


def test_long_rules_with_terminals():
    g = MonotoneGrammar.build("S A", "a b", "S", ["S -> a S b", "S -> a b", "a S -> a A", "A b -> a b b"])
    k = to_kuroda(g)
    assert is_kuroda(k)[0]
    assert enumerate_csg_language(g, 6).words == enumerate_csg_language(k, 6).words


def test_output_is_valid_and_reparses():
    g = MonotoneGrammar.build("S", "a b", "S", ["S -> a S b", "S -> a b"])
    k = to_kuroda(g)
    assert validate_grammar(k) == []
    assert parse_grammar(serialize_grammar(k)) == k


def test_fresh_names_avoid_existing_ones():
    g = MonotoneGrammar.build("S S#1", "a", "S", ["S -> a a a", "S#1 -> a"])
    k = to_kuroda(g)
    assert k.nonterminals >= {"S", "S#1"}
    assert sum(1 for r in k.rules if r.lhs == ("S#1",)) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_conversion_preserves_bounded_language(seed):
    g = random_monotone_grammar(random.Random(seed))
    k = to_kuroda(g)
    assert is_kuroda(k)[0]
    a, b = enumerate_csg_language(g, 4), enumerate_csg_language(k, 4)
    assert not a.truncated and not b.truncated
    assert a.words == b.words
