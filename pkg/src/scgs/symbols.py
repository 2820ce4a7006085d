"""Base symbols, marked symbols and their bracket encoding.

A marked symbol is a base symbol decorated with the bookkeeping marks used by
the grammar-system construction::

    top    ''  '+' (up triangle)  '-' (down triangle)  '*' (diamond)
           '~' '1' '2'            (auxiliary marks of the degree-2 reduction)
    left   ''  '|'  '>'
    right  ''  '|'  '<'
    caret  the "current symbol" of the checking pass
    prime  terminal a turned into the nonterminal a'

Mark values are stored as their encoding characters so that encoding is a
direct field mapping.  The empty string means "no mark".
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

RESERVED = frozenset("[](),!'^|<>+-*~.@")

TOPS = ("", "+", "-", "*", "~", "1", "2")
LEFTS = ("", "|", ">")
RIGHTS = ("", "|", "<")

PLUS, MINUS, STAR, TILDE, ONE, TWO = "+", "-", "*", "~", "1", "2"
BAR, GT, LT = "|", ">", "<"

FIRST_MARKS = frozenset((PLUS, MINUS, STAR))
AUX_MARKS = frozenset((TILDE, ONE, TWO))


class EncodingError(ValueError):
    """Raised for malformed tokens or invalid mark combinations."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class BaseSymbol(NamedTuple):
    name: str
    terminal: bool = False


class MarkedSymbol(NamedTuple):
    base: BaseSymbol
    top: str = ""
    left: str = ""
    right: str = ""
    caret: bool = False
    prime: bool = False
    tag: str = ""

    @property
    def name(self) -> str:
        return self.base.name

    @property
    def is_terminal(self) -> bool:
        """True for a plain terminal symbol (no marks at all)."""
        return self.base.terminal and not self.prime and not self.has_marks

    @property
    def has_marks(self) -> bool:
        return bool(self.top or self.left or self.right or self.caret or self.tag)

    @property
    def core(self) -> MarkedSymbol:
        """The symbol with every mark except prime stripped."""
        return MarkedSymbol(self.base, prime=self.prime)

    def marked(self, top="", left="", right="", caret=False, tag="") -> MarkedSymbol:
        """Decorate the core of this symbol with a fresh set of marks."""
        return MarkedSymbol(self.base, top, left, right, caret, self.prime, tag)

    def __str__(self) -> str:
        return encode_marked_symbol(self)


BLOCKER = MarkedSymbol(BaseSymbol("!"))


def nonterminal(name: str) -> MarkedSymbol:
    return MarkedSymbol(BaseSymbol(name))


def terminal(name: str) -> MarkedSymbol:
    return MarkedSymbol(BaseSymbol(name, True))


def primed(name: str) -> MarkedSymbol:
    """The nonterminal stand-in a' of terminal ``name``."""
    return MarkedSymbol(BaseSymbol(name, True), prime=True)


def name_problem(name: str) -> str | None:
    """Describe why ``name`` cannot be a user symbol name, or return None."""
    if not name:
        return "empty symbol name"
    if any(ch.isspace() for ch in name):
        return f"symbol name {name!r} contains whitespace"
    bad = sorted(set(name) & RESERVED)
    if bad:
        return f"symbol name {name!r} contains reserved character(s) {''.join(bad)}"
    if name.startswith("#"):
        return f"symbol name {name!r} starts with '#'"
    return None


def check_marks(m: MarkedSymbol) -> None:
    """Raise EncodingError naming the first field with an invalid value."""
    if m == BLOCKER:
        return
    problem = name_problem(m.base.name)
    if problem:
        raise EncodingError(problem, "base")
    if m.top not in TOPS:
        raise EncodingError(f"invalid top mark {m.top!r}", "top")
    if m.left not in LEFTS:
        raise EncodingError(f"invalid left mark {m.left!r}", "left")
    if m.right not in RIGHTS:
        raise EncodingError(f"invalid right mark {m.right!r}", "right")
    if not isinstance(m.caret, bool):
        raise EncodingError("caret must be a bool", "caret")
    if not isinstance(m.prime, bool):
        raise EncodingError("prime must be a bool", "prime")
    if m.prime and not m.base.terminal:
        raise EncodingError(f"prime mark on nonterminal {m.base.name!r}", "prime")
    if m.base.terminal and not m.prime and m.has_marks:
        raise EncodingError(f"marks on plain terminal {m.base.name!r} need the prime mark", "prime")
    if m.tag:
        if m.top not in (ONE, TWO):
            raise EncodingError("a tag is only allowed on 1/2-marked symbols", "tag")
        if not m.tag.isalnum():
            raise EncodingError(f"invalid tag {m.tag!r}", "tag")


def encode_marked_symbol(m: MarkedSymbol) -> str:
    """Encode as ``[t l BASE p c r]`` (no spaces), or a bare name when unmarked.

    >>> encode_marked_symbol(nonterminal("A").marked(top="+"))
    '[+.A...]'
    """
    if m == BLOCKER:
        return "!"
    check_marks(m)
    if not m.has_marks and not m.prime:
        return m.base.name
    token = "[{}{}{}{}{}{}]".format(
        m.top or ".",
        m.left or ".",
        m.base.name,
        "'" if m.prime else ".",
        "^" if m.caret else ".",
        m.right or ".",
    )
    if m.tag:
        token += "@" + m.tag
    return token


def decode_marked_symbol(token: str, terminals: Iterable[str] = ()) -> MarkedSymbol:
    """Inverse of :func:`encode_marked_symbol`.

    Bare names are terminals when listed in ``terminals``, nonterminals
    otherwise.  Bracketed tokens carry their own kind: primed bases are
    terminals, all others nonterminals.
    """
    if token == "!":
        return BLOCKER
    if not token.startswith("["):
        problem = name_problem(token)
        if problem:
            raise EncodingError(problem, "base")
        return MarkedSymbol(BaseSymbol(token, token in frozenset(terminals)))
    close = token.find("]")
    if close < 0:
        raise EncodingError(f"unterminated marked symbol {token!r}")
    body, rest = token[1:close], token[close + 1:]
    if len(body) < 6:
        raise EncodingError(f"marked symbol {token!r} is too short")
    tag = ""
    if rest:
        if not rest.startswith("@") or len(rest) < 2:
            raise EncodingError(f"trailing garbage in {token!r}", "tag")
        tag = rest[1:]
    t, l, name, p, c, r = body[0], body[1], body[2:-3], body[-3], body[-2], body[-1]
    if p not in ".'":
        raise EncodingError(f"invalid prime field {p!r} in {token!r}", "prime")
    if c not in ".^":
        raise EncodingError(f"invalid caret field {c!r} in {token!r}", "caret")
    prime = p == "'"
    m = MarkedSymbol(
        BaseSymbol(name, prime),
        "" if t == "." else t,
        "" if l == "." else l,
        "" if r == "." else r,
        c == "^",
        prime,
        tag,
    )
    check_marks(m)
    return m


def encode_form(form: Iterable[MarkedSymbol]) -> str:
    return " ".join(encode_marked_symbol(s) for s in form)


def decode_form(text: str, terminals: Iterable[str] = ()) -> tuple[MarkedSymbol, ...]:
    terminals = frozenset(terminals)
    return tuple(decode_marked_symbol(tok, terminals) for tok in text.split())
