"""Small grammars bundled for demos, tests and the CLI."""

from __future__ import annotations

from .grammar import MonotoneGrammar
from .textio import parse_grammar

# {b c d^n, b e d^n : n >= 0 (with n >= 1 for e)}, written in Kuroda form;
# the BD -> DB swap is never usable, which exercises the blocking rules
EXAMPLE_TEXT = """\
nonterminals: A B C D E
terminals: b c d e
start: A
rules:
A -> B C
C -> C D
B D -> D B
C D -> E D
B -> b
C -> c
D -> d
E -> e
"""


def example_grammar() -> MonotoneGrammar:
    return parse_grammar(EXAMPLE_TEXT)
