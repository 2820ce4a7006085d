"""Text (de)serialization of grammars and grammar systems.

Grammar file::

    # comment lines start with '#'
    nonterminals: A B C D E
    terminals: b c d e
    start: A
    rules:
    A -> B C
    B D -> D B

Grammar-system file: the same header (symbols in the bracket encoding) plus
``component k:`` sections holding scattered rules such as::

    ([+.X...], A) -> ([-.X..|], [.|B..|] [.|C..|])   # P1_AtoBC: A -> B C

A ``#`` opens a comment at the start of a line or after whitespace, so the
generated names ``A#1`` are ordinary tokens.
"""

from __future__ import annotations

import re
from pathlib import Path

from .grammar import GrammarSystem, MonotoneGrammar, Rule, ScatteredRule
from .symbols import EncodingError, MarkedSymbol, decode_marked_symbol, encode_form, encode_marked_symbol

_COMMENT = re.compile(r"(^|\s)#")
_COMPONENT = re.compile(r"component\s+(\d+)\s*:$")


class GrammarFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f"line {line}" + (f", column {column}" if column else "") if line else ""
        super().__init__(f"{where}: {message}" if where else message)
        self.line = line
        self.column = column


def _split_comment(text: str) -> tuple[str, str | None]:
    m = _COMMENT.search(text)
    if not m:
        return text, None
    return text[: m.start()], text[m.end():].strip()


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, comment = _split_comment(raw)
        yield lineno, raw, body.strip(), comment


def _parse_header(lines, allowed_sections):
    header: dict[str, tuple[int, str]] = {}
    for lineno, raw, body, _ in lines:
        if not body:
            continue
        if body in allowed_sections or _COMPONENT.match(body):
            return header, (lineno, body)
        key, sep, value = body.partition(":")
        key = key.strip()
        if not sep or key not in ("nonterminals", "terminals", "start"):
            col = raw.find(body) + 1
            raise GrammarFormatError(f"expected a header line or section, got {body!r}", lineno, col)
        if key in header:
            raise GrammarFormatError(f"duplicate {key!r} header", lineno, 1)
        header[key] = (lineno, value.strip())
    return header, None


def _require(header, key):
    if key not in header:
        raise GrammarFormatError(f"missing {key!r} header")
    return header[key]


def parse_grammar(text: str) -> MonotoneGrammar:
    lines = iter(list(_lines(text)))
    header, section = _parse_header(lines, ("rules:",))
    nts = _require(header, "nonterminals")[1].split()
    ts = _require(header, "terminals")[1].split() if "terminals" in header else []
    start_line, start = _require(header, "start")
    if len(start.split()) != 1:
        raise GrammarFormatError("start must be a single symbol", start_line)
    if section is None or section[1] != "rules:":
        raise GrammarFormatError("no rules")
    declared = set(nts) | set(ts)
    rules = []
    for lineno, raw, body, _ in lines:
        if not body:
            continue
        if "->" not in body:
            raise GrammarFormatError(f"expected 'lhs -> rhs', got {body!r}", lineno, raw.find(body) + 1)
        lhs_text, _, rhs_text = body.partition("->")
        lhs, rhs = lhs_text.split(), rhs_text.split()
        arrow_col = raw.find("->") + 1
        if not lhs:
            raise GrammarFormatError("empty left-hand side", lineno, arrow_col)
        if not rhs:
            raise GrammarFormatError("empty right-hand side", lineno, arrow_col + 2)
        for tok in lhs + rhs:
            if tok not in declared:
                raise GrammarFormatError(f"undeclared symbol {tok!r}", lineno, raw.find(tok) + 1)
        rules.append(Rule(tuple(lhs), tuple(rhs)))
    if not rules:
        raise GrammarFormatError("no rules")
    return MonotoneGrammar(frozenset(nts), frozenset(ts), start, tuple(rules))


def serialize_grammar(g: MonotoneGrammar) -> str:
    out = [
        f"nonterminals: {' '.join(sorted(g.nonterminals))}",
        f"terminals: {' '.join(sorted(g.terminals))}",
        f"start: {g.start}",
        "rules:",
    ]
    out.extend(str(r) for r in g.rules)
    return "\n".join(out) + "\n"


def _parse_tuple(text: str, lineno: int, terminals) -> list[list[MarkedSymbol]]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise GrammarFormatError(f"expected a parenthesized tuple, got {text!r}", lineno)
    parts = text[1:-1].split(",")
    try:
        return [[decode_marked_symbol(tok, terminals) for tok in part.split()] for part in parts]
    except EncodingError as exc:
        raise GrammarFormatError(str(exc), lineno) from exc


def parse_scattered_rule(text: str, terminals=(), lineno: int = 0) -> ScatteredRule:
    body, comment = _split_comment(text)
    lhs_text, sep, rhs_text = body.partition("->")
    if not sep:
        raise GrammarFormatError(f"expected '(lhs) -> (rhs)', got {body.strip()!r}", lineno)
    terminals = frozenset(terminals)
    lhs = _parse_tuple(lhs_text, lineno, terminals)
    rhs = _parse_tuple(rhs_text, lineno, terminals)
    if any(len(part) != 1 for part in lhs):
        raise GrammarFormatError("each left-hand component must be exactly one symbol", lineno)
    if len(lhs) != len(rhs):
        raise GrammarFormatError("left- and right-hand tuples differ in length", lineno)
    if any(not frag for frag in rhs):
        raise GrammarFormatError("empty right-hand fragment", lineno)
    subset, source = "", ""
    if comment:
        subset, _, source = comment.partition(":")
        subset, source = subset.strip(), source.strip()
    return ScatteredRule(tuple(p[0] for p in lhs), tuple(tuple(f) for f in rhs), subset, source)


def format_scattered_rule(r: ScatteredRule) -> str:
    text = str(r)
    return f"{text}  # {r.label}" if r.label else text


def parse_system(text: str) -> GrammarSystem:
    lines = iter(list(_lines(text)))
    header, section = _parse_header(lines, ())
    ts = frozenset(_require(header, "terminals")[1].split()) if "terminals" in header else frozenset()
    nt_line, nt_text = _require(header, "nonterminals")
    start_line, start_text = _require(header, "start")
    try:
        nonterminals = frozenset(decode_marked_symbol(tok) for tok in nt_text.split())
        start = decode_marked_symbol(start_text)
    except EncodingError as exc:
        raise GrammarFormatError(str(exc), nt_line) from exc
    if section is None:
        raise GrammarFormatError("no rules")
    components: list[list[ScatteredRule]] = []
    expected = 1
    current = None
    pending = [section] + [(lineno, raw) for lineno, raw, _, _ in lines]
    for lineno, raw in pending:
        body, _ = _split_comment(raw)
        body = body.strip()
        if not body:
            continue
        m = _COMPONENT.match(body)
        if m:
            if int(m.group(1)) != expected:
                raise GrammarFormatError(f"expected 'component {expected}:'", lineno, 1)
            expected += 1
            current = []
            components.append(current)
            continue
        if current is None:
            raise GrammarFormatError("rule outside a component section", lineno, 1)
        current.append(parse_scattered_rule(raw, ts, lineno))
    if not any(components):
        raise GrammarFormatError("no rules")
    return GrammarSystem(nonterminals, ts, start, tuple(tuple(c) for c in components))


def serialize_system(gs: GrammarSystem) -> str:
    out = [
        f"nonterminals: {' '.join(sorted(encode_marked_symbol(s) for s in gs.nonterminals))}",
        f"terminals: {' '.join(sorted(gs.terminals))}",
        f"start: {encode_marked_symbol(gs.start)}",
    ]
    for i, comp in enumerate(gs.components, 1):
        out.append(f"component {i}:")
        out.extend(format_scattered_rule(r) for r in comp)
    return "\n".join(out) + "\n"


def is_system_text(text: str) -> bool:
    return any(_COMPONENT.match(body) for _, _, body, _ in _lines(text))


def loads(text: str) -> MonotoneGrammar | GrammarSystem:
    return parse_system(text) if is_system_text(text) else parse_grammar(text)


def load(path) -> MonotoneGrammar | GrammarSystem:
    return loads(Path(path).read_text(encoding="utf-8"))


def dumps(obj: MonotoneGrammar | GrammarSystem) -> str:
    if isinstance(obj, GrammarSystem):
        return serialize_system(obj)
    return serialize_grammar(obj)


def format_form(form) -> str:
    """Render a sentential form of either kind as text."""
    if form and isinstance(form[0], MarkedSymbol):
        return encode_form(form)
    return " ".join(form)
