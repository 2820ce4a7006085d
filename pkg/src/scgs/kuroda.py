"""Kuroda normal form: predicate and converter for monotone grammars."""

from __future__ import annotations

from .grammar import MonotoneGrammar, Rule, check_grammar


def kuroda_shape(g: MonotoneGrammar, r: Rule) -> int | None:
    """Return the Kuroda form number (1-4) matched by ``r``, or None.

    1: AB -> CD   2: A -> CD   3: A -> C   4: A -> a
    """
    n = g.nonterminals
    if not all(s in n for s in r.lhs):
        return None
    shape = (len(r.lhs), len(r.rhs))
    if shape == (1, 1):
        if r.rhs[0] in n:
            return 3
        return 4 if r.rhs[0] in g.terminals else None
    if not all(s in n for s in r.rhs):
        return None
    return {(2, 2): 1, (1, 2): 2}.get(shape)


def is_kuroda(g: MonotoneGrammar) -> tuple[bool, Rule | None]:
    """``(True, None)`` when every rule has a Kuroda shape, else the first offender."""
    for r in g.rules:
        if kuroda_shape(g, r) is None:
            return False, r
    return True, None


class _Fresh:
    """Deterministic generator of ``<orig>#k`` names that avoid existing ones."""

    def __init__(self, taken):
        self.taken = set(taken)
        self.counter = 0

    def __call__(self, orig: str) -> str:
        while True:
            self.counter += 1
            name = f"{orig}#{self.counter}"
            if name not in self.taken:
                self.taken.add(name)
                return name


def to_kuroda(g: MonotoneGrammar) -> MonotoneGrammar:
    """Convert a monotone grammar to an equivalent grammar in Kuroda normal form.

    Already-Kuroda rules are kept verbatim, so a Kuroda grammar maps to itself.
    Otherwise terminals are lifted to fresh nonterminals, long right-hand
    sides become chains of ``A -> CD`` rules, and rules with a left-hand side
    longer than two become a left-to-right cascade of ``AB -> CD`` rules
    joined by fresh carrier symbols.
    """
    check_grammar(g)
    fresh = _Fresh(g.nonterminals | g.terminals)
    nonterminals = set(g.nonterminals)
    out: list[Rule] = []
    lifted: dict[str, str] = {}

    def lift(sym: str) -> str:
        if sym in g.nonterminals:
            return sym
        if sym not in lifted:
            lifted[sym] = fresh(sym)
            nonterminals.add(lifted[sym])
            out.append(Rule((lifted[sym],), (sym,)))
        return lifted[sym]

    def new(orig: str) -> str:
        name = fresh(orig)
        nonterminals.add(name)
        return name

    def chain(head: str, body: tuple[str, ...]) -> None:
        # head -> body with |body| >= 2, as A -> CD rules
        while len(body) > 2:
            carrier = new(head)
            out.append(Rule((head,), (body[0], carrier)))
            head, body = carrier, body[1:]
        out.append(Rule((head,), body))

    # a terminal read by some left-hand side must be lifted wherever it is
    # produced, or the rules reading it could never fire
    read = {s for r in g.rules for s in r.lhs if s in g.terminals}
    for r in g.rules:
        if kuroda_shape(g, r) is not None and not read.intersection(r.rhs):
            out.append(r)
            continue
        lhs = tuple(lift(s) for s in r.lhs)
        rhs = tuple(lift(s) for s in r.rhs)
        m, k = len(lhs), len(rhs)
        if m == 1:
            if k <= 2:
                out.append(Rule(lhs, rhs))
            else:
                chain(lhs[0], rhs)
            continue
        if k > m:
            tail = new(lhs[-1])
            chain(tail, rhs[m - 1:])
            rhs = rhs[: m - 1] + (tail,)
        # lhs and rhs now have equal length m >= 2
        carrier = lhs[0]
        for i in range(1, m - 1):
            nxt = new(lhs[i])
            out.append(Rule((carrier, lhs[i]), (rhs[i - 1], nxt)))
            carrier = nxt
        out.append(Rule((carrier, lhs[-1]), (rhs[-2], rhs[-1])))

    return MonotoneGrammar(frozenset(nonterminals), g.terminals, g.start, tuple(out))
