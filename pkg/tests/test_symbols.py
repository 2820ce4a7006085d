import pytest
from hypothesis import given, strategies as st

from scgs.symbols import (
    BLOCKER,
    EncodingError,
    MarkedSymbol,
    check_marks,
    decode_form,
    decode_marked_symbol,
    encode_form,
    encode_marked_symbol,
    name_problem,
    nonterminal,
    primed,
    terminal,
)


def test_fplus_encoding():
    assert encode_marked_symbol(nonterminal("A").marked(top="+")) == "[+.A...]"


def test_mcf_with_both_bars_encoding():
    assert encode_marked_symbol(nonterminal("B").marked(top="-", left="|", right="|")) == "[-|B..|]"


def test_primed_terminal_with_caret_encoding():
    sym = primed("a").marked(top="+", left="|", right="|", caret=True)
    assert encode_marked_symbol(sym) == "[+|a'^|]"


def test_plain_symbols_encode_bare():
    assert encode_marked_symbol(nonterminal("A")) == "A"
    assert encode_marked_symbol(terminal("b")) == "b"
    assert encode_marked_symbol(BLOCKER) == "!"


def test_decode_needs_terminal_set_for_bare_terminals():
    assert decode_marked_symbol("b", terminals={"b"}) == terminal("b")
    assert decode_marked_symbol("b") == nonterminal("b")


def test_primed_keeps_prime_through_marking():
    sym = primed("a").marked(top="*")
    assert sym.prime and sym.base.terminal and sym.top == "*"
    # a primed terminal is a nonterminal of the system
    assert not sym.is_terminal


@pytest.mark.parametrize("token", ["[+.A..", "[?.A...]", "[+.A.x.]", "[+.A..?]", "[+.a'..]x", "[+..A..]"])
def test_malformed_tokens_are_rejected(token):
    with pytest.raises(EncodingError):
        decode_marked_symbol(token)


@pytest.mark.parametrize("name", ["a b", "A|", "x[", "#A", "", "a,b"])
def test_reserved_names_are_reported(name):
    assert name_problem(name)


def test_fresh_kuroda_names_are_legal():
    assert name_problem("A#3") is None


names = st.text(alphabet="ABCDEFabc0123_", min_size=1, max_size=4)
tops = st.sampled_from(["", "+", "-", "*"])
sides = st.sampled_from([("", ""), ("|", "|"), ("", "|"), ("|", "<"), (">", "|"), ("", "<")])


@st.composite
def marked_symbols(draw):
    name = draw(names)
    base = primed(name) if draw(st.booleans()) else nonterminal(name)
    left, right = draw(sides)
    return base.marked(top=draw(tops), left=left, right=right, caret=draw(st.booleans()))


@given(marked_symbols())
def test_encoding_round_trips(sym):
    check_marks(sym)
    assert decode_marked_symbol(encode_marked_symbol(sym)) == sym


@given(st.lists(marked_symbols(), min_size=1, max_size=6))
def test_form_encoding_round_trips(form):
    assert decode_form(encode_form(form)) == tuple(form)


def test_aux_tag_round_trips():
    sym = nonterminal("C").marked(top="1", left="|", right="<", tag="7")
    text = encode_marked_symbol(sym)
    assert text.endswith("@7")
    assert decode_marked_symbol(text) == sym


def test_marked_symbol_is_hashable_value():
    assert {MarkedSymbol(nonterminal("A").base), nonterminal("A")} == {nonterminal("A")}
