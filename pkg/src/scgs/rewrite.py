"""Single-step rewriting for scattered-context and monotone rules."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, NamedTuple, Sequence

from .grammar import Rule, ScatteredRule

DEFAULT_OCCURRENCE_LIMIT = 10**6


class ContractViolation(ValueError):
    """A rule was applied where it does not match."""


class OccurrenceLimitError(RuntimeError):
    """Too many occurrences in a single step; the input is pathological."""


class Occurrence(NamedTuple):
    rule: ScatteredRule
    positions: tuple[int, ...]


def _matches(lhs, form, first: int) -> Iterator[tuple[int, ...]]:
    # completions of a match whose first symbol sits at ``first``, lexicographic
    def extend(k, lo, acc):
        if k == len(lhs):
            yield acc
            return
        sym = lhs[k]
        for j in range(lo, len(form)):
            if form[j] == sym:
                yield from extend(k + 1, j + 1, acc + (j,))

    return extend(1, first + 1, (first,))


def find_occurrences(rule: ScatteredRule, form: Sequence, limit: int = DEFAULT_OCCURRENCE_LIMIT) -> list[Occurrence]:
    """Every strictly increasing position tuple where ``rule.lhs`` matches ``form``.

    Results come in lexicographic order.

    >>> from scgs.symbols import nonterminal as nt
    >>> from scgs.grammar import srule
    >>> A, B, C, D = map(nt, "ABCD")
    >>> [o.positions for o in find_occurrences(srule([A, B], [C, D]), (A, A, B))]
    [(0, 2), (1, 2)]
    """
    out = []
    head = rule.lhs[0]
    for i, sym in enumerate(form):
        if sym != head:
            continue
        for pos in _matches(rule.lhs, form, i):
            out.append(Occurrence(rule, pos))
            if len(out) > limit:
                raise OccurrenceLimitError(f"more than {limit} occurrences of {rule}")
    return out


def apply_scg_rule(rule: ScatteredRule, form: Sequence, occ: Occurrence | Sequence[int]) -> tuple:
    """Replace each matched lhs symbol by its rhs fragment."""
    positions = occ.positions if isinstance(occ, Occurrence) else tuple(occ)
    if len(positions) != rule.degree:
        raise ContractViolation(f"{len(positions)} positions for a rule of degree {rule.degree}")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise ContractViolation(f"positions {positions} are not strictly increasing")
    out = []
    prev = 0
    for pos, sym, frag in zip(positions, rule.lhs, rule.rhs):
        if not 0 <= pos < len(form) or form[pos] != sym:
            raise ContractViolation(f"stale occurrence {positions} of {rule}")
        out.extend(form[prev:pos])
        out.extend(frag)
        prev = pos + 1
    out.extend(form[prev:])
    return tuple(out)


def apply_csg_rule(rule: Rule, form: Sequence[str], position: int) -> tuple[str, ...]:
    """Replace the contiguous lhs occurrence starting at ``position``."""
    end = position + len(rule.lhs)
    if position < 0 or tuple(form[position:end]) != rule.lhs:
        raise ContractViolation(f"{rule} does not match at position {position}")
    return tuple(form[:position]) + rule.rhs + tuple(form[end:])


def csg_positions(rule: Rule, form: Sequence[str]) -> list[int]:
    n = len(rule.lhs)
    return [i for i in range(len(form) - n + 1) if tuple(form[i:i + n]) == rule.lhs]


class Component:
    """A rule set indexed by the first lhs symbol, for fast matching."""

    def __init__(self, rules: Iterable[ScatteredRule], limit: int = DEFAULT_OCCURRENCE_LIMIT):
        self.rules = tuple(dict.fromkeys(rules))
        self.limit = limit
        self._by_head: dict = defaultdict(list)
        for r in self.rules:
            self._by_head[r.lhs[0]].append((r, frozenset(r.lhs)))

    def occurrences(self, form: Sequence) -> Iterator[Occurrence]:
        present = None
        count = 0
        for i, sym in enumerate(form):
            candidates = self._by_head.get(sym)
            if not candidates:
                continue
            if present is None:
                present = frozenset(form)
            for r, needs in candidates:
                if len(needs) > 1 and not needs <= present:
                    continue
                for pos in _matches(r.lhs, form, i):
                    count += 1
                    if count > self.limit:
                        raise OccurrenceLimitError(f"more than {self.limit} occurrences in one step")
                    yield Occurrence(r, pos)

    def has_occurrence(self, form: Sequence) -> bool:
        return next(self.occurrences(form), None) is not None

    def steps(self, form: Sequence) -> Iterator[tuple[Occurrence, tuple]]:
        for occ in self.occurrences(form):
            yield occ, apply_scg_rule(occ.rule, form, occ)

    def successors(self, form: Sequence) -> set[tuple]:
        return {after for _, after in self.steps(form)}


def as_component(rules) -> Component:
    return rules if isinstance(rules, Component) else Component(rules)


def component_successors(rules, form: Sequence) -> set[tuple]:
    """All forms reachable from ``form`` in one step of the given rule set."""
    return as_component(rules).successors(tuple(form))
