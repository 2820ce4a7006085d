"""Grammar data model: monotone grammars, scattered rules and grammar systems."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .symbols import BLOCKER, MarkedSymbol, encode_form, name_problem

Form = tuple  # tuple[MarkedSymbol, ...] for systems, tuple[str, ...] for grammars


class GrammarError(ValueError):
    pass


class Rule(NamedTuple):
    """A monotone rewriting rule ``lhs -> rhs`` over symbol names."""

    lhs: tuple[str, ...]
    rhs: tuple[str, ...]

    def __str__(self) -> str:
        return f"{' '.join(self.lhs)} -> {' '.join(self.rhs)}"


def rule(lhs: str | Sequence[str], rhs: str | Sequence[str]) -> Rule:
    """Build a rule; strings are split on whitespace."""
    if isinstance(lhs, str):
        lhs = lhs.split()
    if isinstance(rhs, str):
        rhs = rhs.split()
    return Rule(tuple(lhs), tuple(rhs))


@dataclass(frozen=True)
class MonotoneGrammar:
    nonterminals: frozenset[str]
    terminals: frozenset[str]
    start: str
    rules: tuple[Rule, ...]

    def __post_init__(self):
        object.__setattr__(self, "nonterminals", frozenset(self.nonterminals))
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        object.__setattr__(self, "rules", tuple(Rule(tuple(r.lhs), tuple(r.rhs)) for r in self.rules))

    @classmethod
    def build(cls, nonterminals, terminals, start, rules: Iterable) -> MonotoneGrammar:
        """Convenience constructor taking ``"A B -> C D"`` strings or pairs."""
        parsed = []
        for r in rules:
            if isinstance(r, str):
                lhs, _, rhs = r.partition("->")
                r = rule(lhs, rhs)
            elif not isinstance(r, Rule):
                r = rule(*r)
            parsed.append(r)
        if isinstance(nonterminals, str):
            nonterminals = nonterminals.split()
        if isinstance(terminals, str):
            terminals = terminals.split()
        return cls(frozenset(nonterminals), frozenset(terminals), start, tuple(parsed))

    def is_terminal_word(self, form: Sequence[str]) -> bool:
        return all(s in self.terminals for s in form)


def validate_grammar(g: MonotoneGrammar) -> list[str]:
    """Return one message per violated grammar invariant (empty when valid)."""
    report = []
    for name in sorted(g.nonterminals | g.terminals):
        problem = name_problem(name)
        if problem:
            report.append(problem)
    for name in sorted(g.nonterminals & g.terminals):
        report.append(f"symbol {name!r} is both terminal and nonterminal (N ∩ T ≠ ∅)")
    if g.start not in g.nonterminals:
        report.append(f"start symbol {g.start!r} is not a declared nonterminal")
    if not g.rules:
        report.append("no rules")
    declared = g.nonterminals | g.terminals
    for r in g.rules:
        if not r.lhs:
            report.append(f"empty left-hand side: {r}")
        if not r.rhs:
            report.append(f"empty right-hand side: {r}")
        for s in r.lhs + r.rhs:
            if s not in declared:
                report.append(f"undeclared symbol {s!r} in rule {r}")
        if r.lhs and not any(s in g.nonterminals for s in r.lhs):
            report.append(f"left-hand side has no nonterminal: {r}")
        if len(r.lhs) > len(r.rhs):
            report.append(f"contracting rule: {r}")
    return report


def check_grammar(g: MonotoneGrammar) -> None:
    report = validate_grammar(g)
    if report:
        raise GrammarError("; ".join(report))


@dataclass(frozen=True)
class ScatteredRule:
    """``(A1, ..., An) -> (alpha1, ..., alphan)`` with provenance labels.

    ``subset`` names the rule family that produced the rule and ``source`` the
    simulated rule of the input grammar (both may be empty for hand-written
    systems).
    """

    lhs: tuple[MarkedSymbol, ...]
    rhs: tuple[tuple[MarkedSymbol, ...], ...]
    subset: str = ""
    source: str = ""

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        if any(isinstance(frag, MarkedSymbol) for frag in self.rhs):
            raise GrammarError("right-hand fragments must be sequences of symbols")
        object.__setattr__(self, "rhs", tuple(tuple(frag) for frag in self.rhs))
        if not self.lhs:
            raise GrammarError("scattered rule with empty left-hand side")
        if len(self.lhs) != len(self.rhs):
            raise GrammarError(f"lhs/rhs length mismatch in {self}")
        if any(not frag for frag in self.rhs):
            raise GrammarError(f"erasing fragment in {self} (rules must be propagating)")

    @property
    def degree(self) -> int:
        return len(self.lhs)

    @property
    def label(self) -> str:
        if self.source:
            return f"{self.subset}: {self.source}"
        return self.subset

    def __str__(self) -> str:
        lhs = ", ".join(encode_form((s,)) for s in self.lhs)
        rhs = ", ".join(encode_form(frag) for frag in self.rhs)
        return f"({lhs}) -> ({rhs})"


def srule(lhs, rhs, subset="", source="") -> ScatteredRule:
    """Shorthand: ``lhs`` a sequence of symbols, ``rhs`` a sequence of fragments.

    A fragment given as a single MarkedSymbol is wrapped in a 1-tuple.
    """
    frags = tuple((f,) if isinstance(f, MarkedSymbol) else tuple(f) for f in rhs)
    return ScatteredRule(tuple(lhs), frags, subset, source)


@dataclass(frozen=True)
class GrammarSystem:
    """A CD grammar system with scattered-context components (t-mode)."""

    nonterminals: frozenset[MarkedSymbol]
    terminals: frozenset[str]
    start: MarkedSymbol
    components: tuple[tuple[ScatteredRule, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "nonterminals", frozenset(self.nonterminals))
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        object.__setattr__(self, "components", tuple(tuple(c) for c in self.components))
        if not self.components:
            raise GrammarError("a grammar system needs at least one component")

    @property
    def rules(self) -> tuple[ScatteredRule, ...]:
        return tuple(r for comp in self.components for r in comp)

    @property
    def max_degree(self) -> int:
        return max((r.degree for r in self.rules), default=0)


def validate_system(gs: GrammarSystem) -> list[str]:
    report = []
    for i, comp in enumerate(gs.components, 1):
        if not comp:
            report.append(f"component {i} has no rules")
    if gs.start not in gs.nonterminals:
        report.append(f"start symbol {gs.start} is not a nonterminal of the system")
    for t in sorted(gs.terminals):
        problem = name_problem(t)
        if problem:
            report.append(problem)
    for r in gs.rules:
        for s in r.lhs:
            if s not in gs.nonterminals:
                report.append(f"left-hand symbol {s} of {r} is not a nonterminal")
        for frag in r.rhs:
            for s in frag:
                if s in gs.nonterminals or s == BLOCKER:
                    continue
                if s.is_terminal and s.name in gs.terminals:
                    continue
                report.append(f"symbol {s} in {r} is neither in N_GS nor a terminal")
    return report


@dataclass
class DerivationStep:
    before: Form
    rule: object  # ScatteredRule or Rule
    positions: tuple[int, ...]
    component: int | None
    after: Form

    @property
    def label(self) -> str:
        return getattr(self.rule, "label", None) or str(self.rule)

    @property
    def subset(self) -> str:
        return getattr(self.rule, "subset", "")


@dataclass
class DerivationTrace:
    """A replayable derivation: ``start`` followed by chained steps."""

    start: Form
    steps: list[DerivationStep] = field(default_factory=list)

    @property
    def final(self) -> Form:
        return self.steps[-1].after if self.steps else self.start

    def activations(self) -> list[tuple[int | None, list[DerivationStep]]]:
        """Group consecutive steps by the component that performed them."""
        groups: list[tuple[int | None, list[DerivationStep]]] = []
        for step in self.steps:
            if groups and groups[-1][0] == step.component and step.component is not None:
                groups[-1][1].append(step)
            else:
                groups.append((step.component, [step]))
        return groups

    def __len__(self) -> int:
        return len(self.steps)
