"""Splitting the three-symbol rules into pairs.

Only one rule family rewrites three symbols at once.  Each such rule is
replaced by three rules of degree two, joined by tagged auxiliary symbols,
and the language stays the same.
"""

from scgs import enumerate_language, find_derivation
from scgs.cli import format_trace
from scgs.samples import example_grammar
from scgs.transform import format_rule_count_report, reduce_to_degree2, transform_csg_to_scgs

gs = transform_csg_to_scgs(example_grammar())
gs2 = reduce_to_degree2(gs)
print(f"max degree {gs.max_degree} -> {gs2.max_degree}; rules {len(gs.rules)} -> {len(gs2.rules)}")
print(format_rule_count_report(gs2))

for n in (3, 4, 5):
    print(f"length <= {n}: equal = {enumerate_language(gs, n).words == enumerate_language(gs2, n).words}")

print("\nthe C D -> E D step of 'bed', now in pairs:")
for line in format_trace(find_derivation(gs2, "bed")):
    if "ABtoCD" in line:
        print("  " + line)
