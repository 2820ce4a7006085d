"""t-mode semantics, bounded enumeration and membership.

Every search is a breadth-first search with a visited set, bounded by a
:class:`SearchBudget`.  Forms longer than ``max_len`` are discarded; this is
sound because no rule shortens a form.  A cap being hit never silently
shrinks an answer: results carry a ``truncated`` flag, and membership turns
into ``"unknown"`` instead of ``"no"``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .grammar import (
    DerivationStep,
    DerivationTrace,
    GrammarError,
    GrammarSystem,
    MonotoneGrammar,
    Rule,
    ScatteredRule,
    check_grammar,
)
from .rewrite import Component, ContractViolation, apply_csg_rule, apply_scg_rule, csg_positions
from .symbols import BLOCKER, MarkedSymbol, terminal

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class SearchBudget:
    max_len: int
    max_states: int = 2_000_000
    max_steps_per_closure: int = 200_000

    def __post_init__(self):
        for name in ("max_len", "max_states", "max_steps_per_closure"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


class StepResult(NamedTuple):
    forms: frozenset
    truncated: bool


class Enumeration(NamedTuple):
    words: frozenset  # of tuple[str, ...]
    truncated: bool


class Membership(NamedTuple):
    verdict: str  # YES, NO or UNKNOWN
    trace: DerivationTrace | None = None

    def __bool__(self) -> bool:
        return self.verdict == YES


class NotAMember(LookupError):
    pass


def _budget(budget, max_len=None) -> SearchBudget:
    if isinstance(budget, SearchBudget):
        return budget
    if isinstance(budget, int):
        return SearchBudget(budget)
    if budget is None and max_len is not None:
        return SearchBudget(max_len)
    raise TypeError("expected a SearchBudget or a maximum length")


def is_terminal_form(form: Sequence[MarkedSymbol]) -> bool:
    return all(s.base.terminal and not s.prime for s in form)


def word_of(form: Sequence) -> tuple[str, ...]:
    return tuple(s.name if isinstance(s, MarkedSymbol) else s for s in form)


def as_word(word, terminals=()) -> tuple[str, ...]:
    """Normalise a word given as a sequence of names or as a string.

    A string is split on whitespace when it has any, otherwise into single
    characters (unless the whole string is itself a terminal).
    """
    if not isinstance(word, str):
        return tuple(word)
    if word in terminals:
        return (word,)
    return tuple(word.split()) if any(ch.isspace() for ch in word) else tuple(word)


def format_word(word: Sequence[str]) -> str:
    return "".join(word) if all(len(s) == 1 for s in word) else " ".join(word)


class SystemSearch:
    """Search state for one grammar system under one budget.

    t-step results are memoized per (component, form).  With
    ``keep_blocked=False`` forms containing ``!`` are dropped as soon as they
    appear: ``!`` is never rewritten, so they cannot yield a word.
    """

    def __init__(self, gs: GrammarSystem | Sequence, budget, keep_blocked: bool = False,
                 prune_dead_symbols: bool = False, record_forms: bool = False):
        # a bare sequence of rule sets is accepted for single-activation queries
        if isinstance(gs, GrammarSystem):
            rule_sets, self.start = gs.components, gs.start
        else:
            rule_sets, self.start = gs, None
        self.budget = _budget(budget)
        self.keep_blocked = keep_blocked
        self.components = [c if isinstance(c, Component) else Component(c) for c in rule_sets]
        self._cache: dict = {}
        self.truncated = False
        self.recorded: set | None = set() if record_forms else None
        self._dead_symbols = frozenset()
        if prune_dead_symbols:
            rules = [r for c in self.components for r in c.rules]
            rewritable = {s for r in rules for s in r.lhs}
            produced = {s for r in rules for frag in r.rhs for s in frag} | {self.start}
            self._dead_symbols = frozenset(
                s for s in produced if s not in rewritable and not (s.base.terminal and not s.prime)
            )

    def _keep(self, form) -> bool:
        if len(form) > self.budget.max_len:
            return False
        if not self.keep_blocked and BLOCKER in form:
            return False
        return True

    def closure(self, index: int, form: tuple, parents: bool = False):
        """BFS over one component's derivations from ``form``.

        Returns ``(dead_ends, truncated, parent)``; ``parent`` maps each
        reached form to ``(previous form, occurrence)`` when requested.
        """
        comp = self.components[index]
        cap = self.budget.max_steps_per_closure
        seen = {form}
        parent = {} if parents else None
        queue = deque([form])
        dead = []
        truncated = False
        while queue:
            f = queue.popleft()
            stuck = True
            for occ, g in comp.steps(f):
                stuck = False
                if g in seen or not self._keep(g):
                    continue
                if len(seen) >= cap:
                    truncated = True
                    continue
                seen.add(g)
                if parents:
                    parent[g] = (f, occ)
                queue.append(g)
            if stuck and (self.keep_blocked or BLOCKER not in f):
                dead.append(f)
        if self.recorded is not None:
            self.recorded |= seen
        return dead, truncated, parent

    def _dead_ends(self, index: int, form: tuple) -> tuple:
        # discovery order is kept so that searches are reproducible run to run
        key = (index, form)
        hit = self._cache.get(key)
        if hit is None:
            dead, truncated, _ = self.closure(index, form)
            hit = (tuple(dead), truncated)
            self._cache[key] = hit
        if hit[1]:
            self.truncated = True
        return hit

    def t_step(self, index: int, form: tuple) -> StepResult:
        dead, truncated = self._dead_ends(index, form)
        return StepResult(frozenset(dead), truncated)

    def successors(self, form: tuple) -> dict[tuple, int]:
        """Map each system successor (self-loops removed) to a component index producing it."""
        out: dict[tuple, int] = {}
        for i in range(len(self.components)):
            for g in self._dead_ends(i, form)[0]:
                if g != form and g not in out:
                    out[g] = i
        return out

    def explore(self, target: tuple | None = None, start: tuple | None = None):
        """BFS from the axiom (or ``start``); returns ``(words, parent)``.

        ``parent`` maps each reached form to ``(previous form, component)``.
        Stops early once ``target`` (a terminal form) is reached.  A custom
        ``start`` should be a form between activations, not one taken from
        the middle of a component's run.
        """
        start = (self.start,) if start is None else tuple(start)
        words: set = set()
        parent: dict = {start: None}
        if not self._keep(start):
            return words, parent
        queue = deque([start])
        while queue:
            f = queue.popleft()
            if is_terminal_form(f):
                words.add(word_of(f))
                if target is not None and f == target:
                    break
                continue
            for g, i in self.successors(f).items():
                if g in parent:
                    continue
                if self._dead_symbols and any(s in self._dead_symbols for s in g):
                    continue
                if len(parent) >= self.budget.max_states:
                    self.truncated = True
                    continue
                parent[g] = (f, i)
                queue.append(g)
        return words, parent

    def trace_to(self, form: tuple, parent: dict) -> DerivationTrace:
        """Rebuild the full step-level derivation of ``form`` from BFS parent links."""
        hops = []
        cur = form
        while parent[cur] is not None:
            prev, i = parent[cur]
            hops.append((prev, i, cur))
            cur = prev
        trace = DerivationTrace(cur)
        for prev, i, target in reversed(hops):
            _, _, links = self.closure(i, prev, parents=True)
            steps = []
            node = target
            while node != prev:
                before, occ = links[node]
                steps.append(DerivationStep(before, occ.rule, occ.positions, i + 1, node))
                node = before
            trace.steps.extend(reversed(steps))
        return trace


def t_step(rules, form, budget, keep_blocked: bool = False) -> StepResult:
    """All t-mode results of one component activation on ``form``."""
    return SystemSearch([rules], budget, keep_blocked).t_step(0, tuple(form))


def system_successors(gs: GrammarSystem, form, budget, keep_blocked: bool = False) -> StepResult:
    search = SystemSearch(gs, budget, keep_blocked)
    succ = search.successors(tuple(form))
    return StepResult(frozenset(succ), search.truncated)


def enumerate_language(gs: GrammarSystem, budget, prune_dead_symbols: bool = False) -> Enumeration:
    """Terminal words of length <= max_len generated in t-mode."""
    search = SystemSearch(gs, _budget(budget), prune_dead_symbols=prune_dead_symbols)
    words, _ = search.explore()
    return Enumeration(frozenset(words), search.truncated)


class CsgSearch:
    def __init__(self, g: MonotoneGrammar, budget):
        check_grammar(g)
        self.g = g
        self.budget = _budget(budget)
        self.truncated = False

    def explore(self, target: tuple | None = None):
        start = (self.g.start,)
        parent: dict = {start: None}
        words: set = set()
        queue = deque([start])
        terminals = self.g.terminals
        max_len = self.budget.max_len
        while queue:
            f = queue.popleft()
            if all(s in terminals for s in f):
                words.add(f)
                if f == target:
                    break
                continue
            for r in self.g.rules:
                if len(f) - len(r.lhs) + len(r.rhs) > max_len:
                    continue
                for pos in csg_positions(r, f):
                    g = apply_csg_rule(r, f, pos)
                    if g in parent:
                        continue
                    if len(parent) >= self.budget.max_states:
                        self.truncated = True
                        continue
                    parent[g] = (f, r, pos)
                    queue.append(g)
        return words, parent

    def trace_to(self, form, parent) -> DerivationTrace:
        steps = []
        cur = form
        while parent[cur] is not None:
            prev, r, pos = parent[cur]
            steps.append(DerivationStep(prev, r, (pos,), None, cur))
            cur = prev
        return DerivationTrace(cur, list(reversed(steps)))


def enumerate_csg_language(g: MonotoneGrammar, budget) -> Enumeration:
    """Terminal words of length <= max_len derivable in a monotone grammar."""
    search = CsgSearch(g, budget)
    words, _ = search.explore()
    return Enumeration(frozenset(words), search.truncated)


def enumerate_any(obj, budget) -> Enumeration:
    if isinstance(obj, GrammarSystem):
        return enumerate_language(obj, budget)
    return enumerate_csg_language(obj, budget)


def is_member(obj: GrammarSystem | MonotoneGrammar, word, budget=None) -> Membership:
    """Bounded membership with a witness trace; ``budget`` defaults to ``len(word)``."""
    word = as_word(word, obj.terminals)
    if any(t not in obj.terminals for t in word):
        return Membership(NO)
    if not word:
        return Membership(NO)
    budget = _budget(budget, max_len=len(word))
    if isinstance(obj, GrammarSystem):
        search = SystemSearch(obj, budget)
        target = tuple(terminal(t) for t in word)
    else:
        search = CsgSearch(obj, budget)
        target = word
    words, parent = search.explore(target)
    if word in words:
        return Membership(YES, search.trace_to(target, parent))
    return Membership(UNKNOWN if search.truncated else NO)


def find_derivation(obj: GrammarSystem | MonotoneGrammar, word, budget=None) -> DerivationTrace:
    result = is_member(obj, word, budget)
    if result.verdict == YES:
        return result.trace
    raise NotAMember(f"{format_word(as_word(word, obj.terminals))!r}: membership is {result.verdict}")


def replay_trace(trace: DerivationTrace, obj: GrammarSystem | MonotoneGrammar | None = None) -> tuple:
    """Re-apply every step through the rewrite engine; return the final form.

    Raises ContractViolation when a step does not chain, does not match or
    uses a rule the given system/grammar does not have.
    """
    cur = trace.start
    for n, step in enumerate(trace.steps):
        if step.before != cur:
            raise ContractViolation(f"step {n} does not start where the previous one ended")
        if isinstance(step.rule, ScatteredRule):
            if obj is not None and step.rule not in obj.components[step.component - 1]:
                raise ContractViolation(f"step {n}: rule not in component {step.component}")
            cur = apply_scg_rule(step.rule, cur, step.positions)
        elif isinstance(step.rule, Rule):
            if obj is not None and step.rule not in obj.rules:
                raise ContractViolation(f"step {n}: rule not in grammar")
            cur = apply_csg_rule(step.rule, cur, step.positions[0])
        else:
            raise GrammarError(f"unknown rule type in step {n}")
        if cur != step.after:
            raise ContractViolation(f"step {n} result differs from the recorded form")
    return cur
