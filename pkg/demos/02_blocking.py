"""Why skipped symbols must block.

In the sample grammar the swap B D -> D B can never fire.  The system can
still simulate it, but the checking component then leaves a context symbol
unchecked, which is rewritten to the dead symbol "!".  Without blocking the
context symbols as well, the system would generate words that the grammar
does not.
"""

from scgs import enumerate_language
from scgs.cdgs import SystemSearch, format_word
from scgs.rewrite import apply_scg_rule
from scgs.samples import example_grammar
from scgs.symbols import BLOCKER, decode_form, encode_form
from scgs.transform import transform_csg_to_scgs

g = example_grammar()
gs = transform_csg_to_scgs(g)

start = decode_form("[+.B...] C D")
swap = next(r for r in gs.components[0] if r.source == "B D -> D B" and r.lhs == (start[0], start[2]))
print("forcing", swap, "on", encode_form(start))
forced = apply_scg_rule(swap, start, (0, 2))
print("  ->", encode_form(forced))

search = SystemSearch(gs, 5, keep_blocked=True)
for handoff in sorted(search.t_step(0, forced).forms, key=encode_form):
    print("first component hands off", encode_form(handoff))
    for result in sorted(search.t_step(1, handoff).forms, key=encode_form):
        tag = "blocked" if BLOCKER in result else "clean"
        print(f"  checker -> {encode_form(result)}  ({tag})")

loose = transform_csg_to_scgs(g, block_context_symbols=False)
strict_words = enumerate_language(gs, 5).words
loose_words = enumerate_language(loose, 5).words
print("\nwords only the loose system derives:", sorted(map(format_word, loose_words - strict_words)))
