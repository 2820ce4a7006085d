"""From a context-sensitive grammar to a two-component scattered-context system.

The sample grammar generates b c d^n and b e d^n (n >= 1 for e).  We build
the equivalent system, look at how large it is, compare bounded languages
and replay the derivation of the shortest word.
"""

from scgs import enumerate_csg_language, enumerate_language, find_derivation, replay_trace
from scgs.cdgs import format_word
from scgs.cli import format_trace
from scgs.samples import example_grammar
from scgs.textio import serialize_grammar
from scgs.transform import format_rule_count_report, transform_csg_to_scgs

g = example_grammar()
print("source grammar:\n" + serialize_grammar(g))

gs = transform_csg_to_scgs(g)
print(f"system: {len(gs.nonterminals)} nonterminals, {len(gs.rules)} rules")
print(format_rule_count_report(gs))

# Bounded languages agree word for word.
for n in range(2, 7):
    source = enumerate_csg_language(g, n).words
    system = enumerate_language(gs, n).words
    print(f"length <= {n}: {sorted(map(format_word, system))}  same as source: {source == system}")

# The derivation of "bc": simulate A -> B C, check it, then the terminal phase.
trace = find_derivation(gs, "bc")
print("\nderivation of bc (component, rule family, positions):")
for line in format_trace(trace):
    print("  " + line)
print("replays to:", format_word([s.name for s in replay_trace(trace, gs)]))
