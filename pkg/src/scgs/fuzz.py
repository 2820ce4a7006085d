"""Seeded random grammars and pipeline equivalence checks."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cdgs import SearchBudget, enumerate_csg_language, enumerate_language
from .grammar import MonotoneGrammar, Rule
from .kuroda import is_kuroda, to_kuroda
from .transform import reduce_to_degree2, transform_csg_to_scgs

NONTERMINALS = ("S", "A", "B", "C")
TERMINALS = ("a", "b", "c")
MAX_RULES = 6


def _alphabet(rng: random.Random):
    nts = list(NONTERMINALS[: rng.randint(1, len(NONTERMINALS))])
    ts = list(TERMINALS[: rng.randint(1, len(TERMINALS))])
    return nts, ts


def random_kuroda_grammar(rng: random.Random) -> MonotoneGrammar:
    """A grammar in Kuroda normal form with at most 4 nonterminals, 3 terminals and 6 rules.

    The start symbol always has a rule, and at least one rule emits a
    terminal, so that most samples generate something.
    """
    nts, ts = _alphabet(rng)
    rules = [Rule(("S",), (rng.choice(nts), rng.choice(nts)) if rng.random() < 0.6 else (rng.choice(ts),))]
    rules.append(Rule((rng.choice(nts),), (rng.choice(ts),)))
    for _ in range(rng.randint(0, MAX_RULES - 2)):
        shape = rng.choice(("AB->CD", "A->BC", "A->B", "A->a"))
        a = rng.choice(nts)
        if shape == "AB->CD":
            r = Rule((a, rng.choice(nts)), (rng.choice(nts), rng.choice(nts)))
        elif shape == "A->BC":
            r = Rule((a,), (rng.choice(nts), rng.choice(nts)))
        elif shape == "A->B":
            r = Rule((a,), (rng.choice([n for n in nts if n != a] or nts),))
        else:
            r = Rule((a,), (rng.choice(ts),))
        if r.lhs != r.rhs:
            rules.append(r)
    return MonotoneGrammar(frozenset(nts), frozenset(ts), "S", tuple(dict.fromkeys(rules)))


def random_monotone_grammar(rng: random.Random) -> MonotoneGrammar:
    """A non-contracting grammar with left sides up to 3 and right sides up to 4 symbols."""
    nts, ts = _alphabet(rng)
    symbols = nts + ts
    rules = [Rule(("S",), tuple(rng.choice(symbols) for _ in range(rng.randint(1, 3))))]
    rules.append(Rule((rng.choice(nts),), tuple(rng.choice(ts) for _ in range(rng.randint(1, 2)))))
    for _ in range(rng.randint(0, MAX_RULES - 2)):
        k = rng.randint(1, 3)
        lhs = [rng.choice(symbols) for _ in range(k)]
        lhs[rng.randrange(k)] = rng.choice(nts)
        rhs = tuple(rng.choice(symbols) for _ in range(rng.randint(k, 4)))
        if tuple(lhs) != rhs:
            rules.append(Rule(tuple(lhs), rhs))
    return MonotoneGrammar(frozenset(nts), frozenset(ts), "S", tuple(dict.fromkeys(rules)))


@dataclass
class FuzzCase:
    index: int
    grammar: MonotoneGrammar
    ok: bool
    detail: str
    words: int = 0


def _pipeline(args) -> FuzzCase:
    index, g, max_len = args
    budget = SearchBudget(max_len)
    kg = g if is_kuroda(g)[0] else to_kuroda(g)
    expected = enumerate_csg_language(g, budget)
    gs = transform_csg_to_scgs(kg)
    got3 = enumerate_language(gs, budget)
    got2 = enumerate_language(reduce_to_degree2(gs), budget)
    if expected.truncated or got3.truncated or got2.truncated:
        return FuzzCase(index, g, False, "search truncated")
    if expected.words != got3.words:
        diff = sorted(expected.words ^ got3.words)
        return FuzzCase(index, g, False, f"degree-3 system differs on {diff}")
    if got3.words != got2.words:
        diff = sorted(got3.words ^ got2.words)
        return FuzzCase(index, g, False, f"degree-2 system differs on {diff}")
    return FuzzCase(index, g, True, "", len(expected.words))


def _kuroda_check(args) -> FuzzCase:
    index, g, max_len = args
    kg = to_kuroda(g)
    ok, offender = is_kuroda(kg)
    if not ok:
        return FuzzCase(index, g, False, f"not in Kuroda form: {offender}")
    a = enumerate_csg_language(g, max_len)
    b = enumerate_csg_language(kg, max_len)
    if a.truncated or b.truncated:
        return FuzzCase(index, g, False, "search truncated")
    if a.words != b.words:
        return FuzzCase(index, g, False, f"languages differ on {sorted(a.words ^ b.words)}")
    return FuzzCase(index, g, True, "", len(a.words))


def worker_count() -> int:
    """Process count, capped by the optional SCGS_THREADS variable."""
    env = os.environ.get("SCGS_THREADS")
    n = os.cpu_count() or 1
    if env:
        try:
            n = min(n, max(1, int(env)))
        except ValueError:
            pass
    return n


def _run(check, grammars, max_len, workers):
    jobs = [(i, g, max_len) for i, g in enumerate(grammars)]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [check(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves input order, so results do not depend on scheduling
        return list(pool.map(check, jobs))


def fuzz_pipeline(seed: int, count: int, max_len: int = 4, workers: int | None = None) -> list[FuzzCase]:
    """Random Kuroda grammar vs its degree-3 and degree-2 systems."""
    rng = random.Random(seed)
    grammars = [random_kuroda_grammar(rng) for _ in range(count)]
    return _run(_pipeline, grammars, max_len, workers)


def fuzz_kuroda(seed: int, count: int, max_len: int = 4, workers: int | None = None) -> list[FuzzCase]:
    """Random monotone grammar vs its Kuroda normal form."""
    rng = random.Random(seed)
    grammars = [random_monotone_grammar(rng) for _ in range(count)]
    return _run(_kuroda_check, grammars, max_len, workers)
