"""Checking the construction's invariants and fuzzing the pipeline.

The claim checkers walk every explored form or witness derivation; the
fuzzer pushes seeded random Kuroda grammars through both systems.
"""

from scgs.claims import run_all_claims
from scgs.fuzz import fuzz_pipeline
from scgs.samples import example_grammar
from scgs.transform import reduce_to_degree2, transform_csg_to_scgs

gs = transform_csg_to_scgs(example_grammar())
for name, system in (("degree 3", gs), ("degree 2", reduce_to_degree2(gs))):
    for claim, violations in run_all_claims(system, 5).items():
        print(f"{name:>8} | {claim:<28} {'ok' if not violations else violations[:2]}")

cases = fuzz_pipeline(seed=2024, count=20, max_len=4)
print(f"\nfuzz: {sum(c.ok for c in cases)}/{len(cases)} random grammars agree to length 4")
print("words per grammar:", [c.words for c in cases])
