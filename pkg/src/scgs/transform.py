"""Kuroda grammar -> two-component scattered-context grammar system.

Every rule family is expanded into ground :class:`ScatteredRule` objects at
build time, each labelled with its family name (``subset``) and the simulated
input rule (``source``).  Family names::

    P1_T1 P1_T2 P1_T3            terminal phase (start, convert a', finish)
    P1_AtoBC P1_AtoB P1_Atoa P1_ABtoCD
    P1_phase2                    rewrite untouched symbols to |X|
    P2_init P2_check P2_checkf P2_end
    P2_block                     (|X|) -> (!)
    P2_block_cs                  (|X<) -> (!), (>X|) -> (!)
    P1_ABtoCD_d2a/_d2b/_d2c      degree-2 replacement of degree-3 rules
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import Iterable

from .grammar import GrammarError, GrammarSystem, MonotoneGrammar, ScatteredRule, check_grammar
from .kuroda import is_kuroda, kuroda_shape, to_kuroda
from .symbols import (
    AUX_MARKS,
    BAR,
    BLOCKER,
    FIRST_MARKS,
    GT,
    LT,
    MINUS,
    ONE,
    PLUS,
    STAR,
    TILDE,
    TWO,
    MarkedSymbol,
    nonterminal,
    primed,
    terminal,
)

log = logging.getLogger(__name__)

SIMULATION_SUBSETS = frozenset(("P1_AtoBC", "P1_AtoB", "P1_Atoa", "P1_ABtoCD", "P1_ABtoCD_d2a"))
TERMINAL_SUBSETS = ("P1_T1", "P1_T2", "P1_T3")


def core_symbols(g: MonotoneGrammar) -> list[MarkedSymbol]:
    """N followed by N_T (primed terminals), each in sorted order."""
    return [nonterminal(a) for a in sorted(g.nonterminals)] + [primed(a) for a in sorted(g.terminals)]


def _first(core):
    return [x.marked(top=t) for t in (PLUS, MINUS, STAR) for x in core]


def alphabet_classes(g: MonotoneGrammar) -> dict[str, set[MarkedSymbol]]:
    """The classes of N_GS, materialized.

    Side-marked classes range over N and N_T alike, and N_cur holds the
    bare-caret first symbols used by the end rules, so that every symbol of
    every generated rule belongs to exactly one class.
    """
    n = [nonterminal(a) for a in sorted(g.nonterminals)]
    core = core_symbols(g)
    first = _first(core)
    return {
        "N": set(n),
        "N_T": {primed(a) for a in g.terminals},
        "N_plus": {x.marked(top=PLUS) for x in core},
        "N_minus": {x.marked(top=MINUS) for x in core},
        "N_star": {x.marked(top=STAR) for x in core},
        "N_CF": {x.marked(left=BAR, right=BAR) for x in core}
        | {f.marked(top=f.top, right=BAR) for f in first},
        "N_CS": {x.marked(left=BAR, right=LT) for x in core}
        | {f.marked(top=f.top, right=LT) for f in first}
        | {x.marked(left=GT, right=BAR) for x in core},
        "N_cur": {x.marked(right=LT, caret=True) for x in core}
        | {f.marked(top=f.top, right=LT, caret=True) for f in first}
        | {x.marked(right=BAR, caret=True) for x in core}
        | {f.marked(top=f.top, right=BAR, caret=True) for f in first}
        | {x.marked(top=PLUS, caret=True) for x in core},
        "blocker": {BLOCKER},
    }


def build_marked_alphabet(g: MonotoneGrammar) -> frozenset[MarkedSymbol]:
    ok, offender = is_kuroda(g)
    if not ok:
        raise GrammarError(f"grammar is not in Kuroda normal form: {offender}")
    out: set[MarkedSymbol] = set()
    for members in alphabet_classes(g).values():
        out |= members
    return frozenset(out)


def classify(m: MarkedSymbol, nonterminals: Iterable[str], terminals: Iterable[str]) -> str:
    """Name the N_GS class of ``m`` over the given N and T, or ``"invalid"``.

    Degree-2 auxiliary symbols (~|X|, and tagged 1/2 context symbols) are
    ``"auxiliary"``.
    """
    if m == BLOCKER:
        return "blocker"
    nonterminals, terminals = frozenset(nonterminals), frozenset(terminals)
    if m.prime:
        if m.name not in terminals:
            return "invalid"
    elif m.base.terminal or m.name not in nonterminals:
        return "invalid"
    top, left, right, caret = m.top, m.left, m.right, m.caret
    if m.tag and top not in (ONE, TWO):
        return "invalid"
    if top in AUX_MARKS:
        if top == TILDE and (left, right, caret, m.tag) == (BAR, BAR, False, ""):
            return "auxiliary"
        if top in (ONE, TWO) and m.tag and not caret and (left, right) in ((BAR, LT), (GT, BAR)):
            return "auxiliary"
        return "invalid"
    if not caret:
        if (left, right) == ("", ""):
            if top:
                return {PLUS: "N_plus", MINUS: "N_minus", STAR: "N_star"}[top]
            return "N_T" if m.prime else "N"
        if not top and (left, right) == (BAR, BAR):
            return "N_CF"
        if top and (left, right) == ("", BAR):
            return "N_CF"
        if not top and (left, right) in ((BAR, LT), (GT, BAR)):
            return "N_CS"
        if top and (left, right) == ("", LT):
            return "N_CS"
        return "invalid"
    if left == "" and right in (LT, BAR):
        return "N_cur"
    if (top, left, right) == (PLUS, "", ""):
        return "N_cur"
    return "invalid"


def is_in_NGS(m: MarkedSymbol, nonterminals, terminals) -> bool:
    return classify(m, nonterminals, terminals) not in ("invalid", "auxiliary")


def _rule(lhs, rhs, subset, source=""):
    return ScatteredRule(tuple(lhs), tuple((f,) if isinstance(f, MarkedSymbol) else f for f in rhs), subset, source)


def _require_kuroda(g: MonotoneGrammar) -> None:
    ok, offender = is_kuroda(g)
    if not ok:
        raise GrammarError(f"grammar is not in Kuroda normal form: {offender}")


def build_component1(g: MonotoneGrammar) -> tuple[ScatteredRule, ...]:
    _require_kuroda(g)
    core = core_symbols(g)
    nt = nonterminal
    rules: list[ScatteredRule] = []

    def plus(x):
        return x.marked(top=PLUS)

    def mcf(x):  # first symbol, context-free variant
        return x.marked(top=MINUS, right=BAR)

    def cf(x):
        return x.marked(left=BAR, right=BAR)

    for x in core:
        rules.append(_rule([plus(x)], [x.marked(top=STAR)], "P1_T1"))
    for x in core:
        for a in sorted(g.terminals):
            rules.append(_rule([x.marked(top=STAR), primed(a)], [x.marked(top=STAR), terminal(a)], "P1_T2"))
    for a in sorted(g.terminals):
        rules.append(_rule([primed(a).marked(top=STAR)], [terminal(a)], "P1_T3"))

    for r in g.rules:
        shape = kuroda_shape(g, r)
        src = str(r)
        if shape == 2:
            (a,), (b, c) = r.lhs, r.rhs
            for x in core:
                rules.append(_rule([plus(x), nt(a)], [mcf(x), (cf(nt(b)), cf(nt(c)))], "P1_AtoBC", src))
            rules.append(_rule([plus(nt(a))], [(mcf(nt(b)), cf(nt(c)))], "P1_AtoBC", src))
        elif shape == 3:
            (a,), (b,) = r.lhs, r.rhs
            for x in core:
                rules.append(_rule([plus(x), nt(a)], [mcf(x), cf(nt(b))], "P1_AtoB", src))
            rules.append(_rule([plus(nt(a))], [mcf(nt(b))], "P1_AtoB", src))
        elif shape == 4:
            (a,), (t,) = r.lhs, r.rhs
            for x in core:
                rules.append(_rule([plus(x), nt(a)], [mcf(x), cf(primed(t))], "P1_Atoa", src))
            rules.append(_rule([plus(nt(a))], [mcf(primed(t))], "P1_Atoa", src))
        elif shape == 1:
            (a, b), (c, d) = r.lhs, r.rhs
            left_ctx = nt(c).marked(left=BAR, right=LT)
            right_ctx = nt(d).marked(left=GT, right=BAR)
            for x in core:
                rules.append(_rule([plus(x), nt(a), nt(b)], [mcf(x), left_ctx, right_ctx], "P1_ABtoCD", src))
            rules.append(_rule([plus(nt(a)), nt(b)], [nt(c).marked(top=MINUS, right=LT), right_ctx], "P1_ABtoCD", src))

    finishing = [x.marked(top=MINUS, right=LT) for x in core] + [mcf(x) for x in core]
    for x in finishing:
        for b in core:
            rules.append(_rule([x, b], [x, cf(b)], "P1_phase2"))
    return tuple(dict.fromkeys(rules))


def build_component2(g: MonotoneGrammar, block_context_symbols: bool = True) -> tuple[ScatteredRule, ...]:
    """The checking component.

    Besides the families as listed, P2_checkf and P2_check also pair a
    bar-caret symbol with a ``|X<`` symbol (the step taken when the checked
    rewrite was a context-sensitive one), and ``P2_block_cs`` blocks
    unchecked context symbols.  ``block_context_symbols=False`` omits the
    latter; the resulting system over-generates.
    """
    _require_kuroda(g)
    core = core_symbols(g)
    rules: list[ScatteredRule] = []
    for x in core:
        rules.append(_rule([x.marked(top=MINUS, right=BAR)], [x.marked(top=PLUS, right=BAR, caret=True)], "P2_init"))
    for x in core:
        rules.append(_rule([x.marked(top=MINUS, right=LT)], [x.marked(top=PLUS, right=LT, caret=True)], "P2_init"))

    for a in core:
        for b in core:
            cf_b = b.marked(left=BAR, right=BAR)
            ls_b = b.marked(left=GT, right=BAR)
            rs_b = b.marked(left=BAR, right=LT)
            cur_b = b.marked(right=BAR, caret=True)
            rules.append(_rule([a.marked(right=BAR, caret=True), cf_b], [a, cur_b], "P2_check"))
            rules.append(_rule([a.marked(right=LT, caret=True), ls_b], [a, cur_b], "P2_check"))
            rules.append(_rule([a.marked(right=BAR, caret=True), rs_b], [a, b.marked(right=LT, caret=True)], "P2_check"))
            pa = a.marked(top=PLUS)
            rules.append(_rule([a.marked(top=PLUS, right=BAR, caret=True), cf_b], [pa, cur_b], "P2_checkf"))
            rules.append(_rule([a.marked(top=PLUS, right=LT, caret=True), ls_b], [pa, cur_b], "P2_checkf"))
            rules.append(_rule([a.marked(top=PLUS, right=BAR, caret=True), rs_b], [pa, b.marked(right=LT, caret=True)], "P2_checkf"))

    for a in core:
        rules.append(_rule([a.marked(top=PLUS, caret=True)], [a.marked(top=PLUS)], "P2_end"))
    for a in core:
        for b in core:
            rules.append(_rule([a.marked(top=PLUS), b.marked(right=BAR, caret=True)], [a.marked(top=PLUS), b], "P2_end"))
    for a in core:
        rules.append(_rule([a.marked(top=PLUS, right=BAR, caret=True)], [a.marked(top=PLUS)], "P2_end"))

    for x in core:
        rules.append(_rule([x.marked(left=BAR, right=BAR)], [BLOCKER], "P2_block"))
    if block_context_symbols:
        for x in core:
            rules.append(_rule([x.marked(left=BAR, right=LT)], [BLOCKER], "P2_block_cs"))
            rules.append(_rule([x.marked(left=GT, right=BAR)], [BLOCKER], "P2_block_cs"))
    return tuple(dict.fromkeys(rules))


def transform_csg_to_scgs(g: MonotoneGrammar, block_context_symbols: bool = True) -> GrammarSystem:
    """Build the equivalent two-component system with axiom ``[+.S...]``.

    Non-Kuroda input is converted with :func:`to_kuroda` first.
    """
    check_grammar(g)
    if not is_kuroda(g)[0]:
        k = to_kuroda(g)
        log.info("converted input to Kuroda normal form: %d -> %d rules, %d fresh nonterminals",
                 len(g.rules), len(k.rules), len(k.nonterminals - g.nonterminals))
        g = k
    p1 = build_component1(g)
    p2 = build_component2(g, block_context_symbols)
    return GrammarSystem(build_marked_alphabet(g), g.terminals, nonterminal(g.start).marked(top=PLUS), (p1, p2))


def reduce_to_degree2(gs: GrammarSystem) -> GrammarSystem:
    """Replace each degree-3 rule (+X, A, B) -> (-X|, |C<, >D|) by three pair rules.

    (+X, A) -> (~|X|, 1|C<);  (1|C<, B) -> (|C<, 2>D|);  (~|X|, 2>D|) -> (-X|, >D|)

    The 1/2 symbols are tagged with the index of the replaced rule, so two
    half-finished replacements can never trade partners.
    """
    for s in gs.nonterminals:
        if s.top in AUX_MARKS:
            raise GrammarError(f"system already contains auxiliary symbol {s}; reduce only once")
    components = []
    aux: set[MarkedSymbol] = set()
    counter = 0
    for comp in gs.components:
        out: list[ScatteredRule] = []
        for r in comp:
            if r.degree <= 2:
                out.append(r)
                continue
            if r.degree != 3 or len(r.rhs[1]) != 1 or len(r.rhs[2]) != 1 or len(r.rhs[0]) != 1:
                raise GrammarError(f"cannot reduce rule of unexpected shape: {r}")
            first, a, b = r.lhs
            (first_out,), (c_ctx,), (d_ctx,) = r.rhs
            counter += 1
            tag = str(counter)
            tilde = first.marked(top=TILDE, left=BAR, right=BAR)
            c1 = c_ctx.marked(top=ONE, left=c_ctx.left, right=c_ctx.right, tag=tag)
            d2 = d_ctx.marked(top=TWO, left=d_ctx.left, right=d_ctx.right, tag=tag)
            aux |= {tilde, c1, d2}
            out.append(ScatteredRule((first, a), ((tilde,), (c1,)), "P1_ABtoCD_d2a", r.source))
            out.append(ScatteredRule((c1, b), ((c_ctx,), (d2,)), "P1_ABtoCD_d2b", r.source))
            out.append(ScatteredRule((tilde, d2), ((first_out,), (d_ctx,)), "P1_ABtoCD_d2c", r.source))
        components.append(tuple(dict.fromkeys(out)))
    if not aux:
        return gs
    return GrammarSystem(gs.nonterminals | aux, gs.terminals, gs.start, tuple(components))


def rule_count_report(gs: GrammarSystem) -> dict[str, dict[str, object]]:
    """Rule counts and degrees per family label."""
    counts: Counter = Counter()
    degrees: dict[str, set[int]] = {}
    components: dict[str, set[int]] = {}
    for i, comp in enumerate(gs.components, 1):
        for r in comp:
            key = r.subset or "(unlabelled)"
            counts[key] += 1
            degrees.setdefault(key, set()).add(r.degree)
            components.setdefault(key, set()).add(i)
    return {
        key: {"rules": counts[key], "degrees": sorted(degrees[key]), "components": sorted(components[key])}
        for key in sorted(counts)
    }


def format_rule_count_report(gs: GrammarSystem) -> str:
    lines = [f"{'family':<16} {'rules':>6}  degrees  component"]
    for key, row in rule_count_report(gs).items():
        degs = ",".join(map(str, row["degrees"]))
        comps = ",".join(map(str, row["components"]))
        lines.append(f"{key:<16} {row['rules']:>6}  {degs:<7}  {comps}")
    total = sum(len(c) for c in gs.components)
    lines.append(f"{'total':<16} {total:>6}  max degree {gs.max_degree}")
    return "\n".join(lines)
