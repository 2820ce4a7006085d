"""A monotone grammar for a^n b^n c^n through the whole pipeline.

The grammar is not in Kuroda normal form, so it is converted first; fresh
nonterminals are named after the symbol they stand for (``a#1`` carries
the terminal a).
"""

from scgs import MonotoneGrammar, enumerate_csg_language, enumerate_language, is_kuroda, to_kuroda
from scgs.cdgs import format_word, is_member
from scgs.textio import serialize_grammar
from scgs.transform import transform_csg_to_scgs

g = MonotoneGrammar.build("S B C", "a b c", "S", [
    "S -> a S B C", "S -> a B C", "C B -> B C",
    "a B -> a b", "b B -> b b", "b C -> b c", "c C -> c c",
])
print("Kuroda form already?", is_kuroda(g))
k = to_kuroda(g)
print(serialize_grammar(k))

gs = transform_csg_to_scgs(g)
print(f"system with {len(gs.rules)} rules")
print("source, length <= 6:", sorted(map(format_word, enumerate_csg_language(g, 6).words)))
print("system, length <= 6:", sorted(map(format_word, enumerate_language(gs, 6).words)))
for word in ("aabbcc", "aabcbc", "abcc"):
    print(f"{word}: {is_member(gs, word).verdict}")
