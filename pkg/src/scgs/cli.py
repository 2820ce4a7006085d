"""Command-line interface: ``scgs <subcommand> ...``.

Exit codes: 0 success, 1 a negative answer (invalid check, differing
languages, failed claims), 2 ``member`` could not decide within the budget,
64 usage error, 65 malformed input, 70 internal error.  Diagnostics go to
stderr, prefixed with ``error:``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import textio
from .cdgs import (
    NO,
    UNKNOWN,
    YES,
    SearchBudget,
    as_word,
    enumerate_any,
    format_word,
    is_member,
)
from .claims import run_all_claims
from .fuzz import fuzz_kuroda, fuzz_pipeline
from .grammar import DerivationTrace, GrammarError, GrammarSystem, MonotoneGrammar, validate_grammar, validate_system
from .kuroda import is_kuroda, to_kuroda
from .symbols import EncodingError
from .textio import GrammarFormatError, format_form
from .transform import reduce_to_degree2, transform_csg_to_scgs

EX_OK, EX_NO, EX_UNKNOWN = 0, 1, 2
EX_USAGE, EX_DATAERR, EX_SOFTWARE = 64, 65, 70
FUZZ_MAX_LEN = 5


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    input: str | None = None
    second: str | None = None
    output: str | None = None
    max_len: int | None = None
    max_states: int = SearchBudget(1).max_states
    trace: bool = False
    seed: int = 0
    count: int = 25
    degree2: bool = False
    word: str | None = None
    kind: str = "pipeline"

    def budget(self, default_len: int | None = None) -> SearchBudget:
        max_len = self.max_len if self.max_len is not None else default_len
        if max_len is None:
            raise UsageError("--max-len is required")
        if max_len <= 0 or self.max_states <= 0:
            raise UsageError("budgets must be positive")
        return SearchBudget(max_len, self.max_states)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scgs", description="Scattered-context grammar systems for context-sensitive languages.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def src(sp, name="input", help="grammar or system file ('-' or omitted: stdin)"):
        sp.add_argument(name, nargs="?", default="-", help=help)

    def budget(sp, required=False):
        sp.add_argument("--max-len", type=int, required=required)
        sp.add_argument("--max-states", type=int, default=SearchBudget(1).max_states)

    sp = sub.add_parser("validate", help="report grammar or system problems")
    src(sp)

    sp = sub.add_parser("kuroda", help="convert a monotone grammar to Kuroda normal form")
    src(sp)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("transform", help="build the two-component scattered-context system")
    src(sp)
    sp.add_argument("-o", "--output")
    sp.add_argument("--degree2", action="store_true", help="also reduce to rules of degree at most 2")

    sp = sub.add_parser("enumerate", help="list words up to a length")
    src(sp)
    budget(sp, required=True)

    sp = sub.add_parser("member", help="decide membership of one word (exit 0 yes, 1 no, 2 unknown)")
    sp.add_argument("input")
    sp.add_argument("word")
    budget(sp)
    sp.add_argument("--trace", action="store_true", help="print the derivation")

    sp = sub.add_parser("equiv", help="compare two bounded languages")
    sp.add_argument("input")
    sp.add_argument("second")
    budget(sp, required=True)

    sp = sub.add_parser("claims", help="run the behavioural checks on a transformed system")
    src(sp)
    budget(sp, required=True)

    sp = sub.add_parser("fuzz", help="random grammars through the whole pipeline")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=25)
    sp.add_argument("--max-len", type=int, default=4)
    sp.add_argument("--kind", choices=("pipeline", "kuroda"), default="pipeline")
    return p


def parse_args(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    cfg = CliConfig(ns.subcommand)
    for key in ("input", "second", "output", "max_len", "max_states", "trace", "seed", "count", "degree2", "word", "kind"):
        if hasattr(ns, key):
            setattr(cfg, key, getattr(ns, key))
    return cfg


def _read(path: str | None, stdin) -> str:
    if path in (None, "-"):
        return stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _load(path, stdin):
    text = _read(path, stdin)
    try:
        return textio.loads(text)
    except (GrammarFormatError, EncodingError, GrammarError) as exc:
        raise DataError(f"{path if path not in (None, '-') else '<stdin>'}: {exc}") from exc


def _grammar(path, stdin) -> MonotoneGrammar:
    obj = _load(path, stdin)
    if not isinstance(obj, MonotoneGrammar):
        raise DataError("expected a grammar, got a grammar system")
    report = validate_grammar(obj)
    if report:
        raise DataError("; ".join(report))
    return obj


def _system(path, stdin) -> GrammarSystem:
    obj = _load(path, stdin)
    if not isinstance(obj, GrammarSystem):
        raise DataError("expected a grammar system, got a grammar")
    return obj


def _emit(text: str, output: str | None, stdout) -> None:
    if output in (None, "-"):
        stdout.write(text)
        return
    try:
        Path(output).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {output}: {exc.strerror or exc}") from exc


def format_trace(trace: DerivationTrace) -> list[str]:
    """One line per step: component, rule label, positions, before => after."""
    lines = []
    for step in trace.steps:
        comp = "-" if step.component is None else str(step.component)
        rule = step.rule
        if getattr(rule, "subset", ""):
            label = f"{rule.subset}({rule.source})" if rule.source else rule.subset
        else:
            label = f"({rule})"
        pos = ",".join(map(str, step.positions))
        lines.append(f"{comp} {label} @{pos} : {format_form(step.before)} => {format_form(step.after)}")
    return lines


def _words(words) -> list[str]:
    return sorted({format_word(w) for w in words})


def cmd_validate(cfg, stdin, stdout, stderr) -> int:
    obj = _load(cfg.input, stdin)
    if isinstance(obj, GrammarSystem):
        report = validate_system(obj)
        kind = f"grammar system with {len(obj.components)} components, {len(obj.rules)} rules, max degree {obj.max_degree}"
    else:
        report = validate_grammar(obj)
        kuroda = "in" if is_kuroda(obj)[0] else "not in"
        kind = f"grammar with {len(obj.rules)} rules, {kuroda} Kuroda normal form"
    for line in report:
        stderr.write(f"error: {line}\n")
    if report:
        return EX_DATAERR
    stdout.write(f"valid {kind}\n")
    return EX_OK


def cmd_kuroda(cfg, stdin, stdout, stderr) -> int:
    g = _grammar(cfg.input, stdin)
    _emit(textio.serialize_grammar(to_kuroda(g)), cfg.output, stdout)
    return EX_OK


def cmd_transform(cfg, stdin, stdout, stderr) -> int:
    g = _grammar(cfg.input, stdin)
    gs = transform_csg_to_scgs(g)
    if cfg.degree2:
        gs = reduce_to_degree2(gs)
    _emit(textio.serialize_system(gs), cfg.output, stdout)
    return EX_OK


def cmd_enumerate(cfg, stdin, stdout, stderr) -> int:
    obj = _load(cfg.input, stdin)
    result = enumerate_any(obj, cfg.budget())
    for w in _words(result.words):
        stdout.write(w + "\n")
    stderr.write(f"truncated: {'yes' if result.truncated else 'no'}\n")
    return EX_OK


def cmd_member(cfg, stdin, stdout, stderr) -> int:
    obj = _load(cfg.input, stdin)
    word = as_word(cfg.word, obj.terminals)
    budget = cfg.budget(default_len=max(len(word), 1))
    result = is_member(obj, word, budget)
    stdout.write(f"{result.verdict}\n")
    if cfg.trace and result.trace is not None:
        for line in format_trace(result.trace):
            stdout.write(line + "\n")
    return {YES: EX_OK, NO: EX_NO, UNKNOWN: EX_UNKNOWN}[result.verdict]


def cmd_equiv(cfg, stdin, stdout, stderr) -> int:
    budget = cfg.budget()
    a = enumerate_any(_load(cfg.input, stdin), budget)
    b = enumerate_any(_load(cfg.second, stdin), budget)
    if a.truncated or b.truncated:
        stderr.write("truncated: yes\n")
    if a.words == b.words:
        stdout.write(f"EQUAL ({{{', '.join(_words(a.words))}}})\n")
        return EX_OK
    stdout.write("DIFFERENT\n")
    for w in _words(a.words - b.words):
        stdout.write(f"only in first: {w}\n")
    for w in _words(b.words - a.words):
        stdout.write(f"only in second: {w}\n")
    return EX_NO


def cmd_claims(cfg, stdin, stdout, stderr) -> int:
    gs = _system(cfg.input, stdin)
    results = run_all_claims(gs, cfg.budget())
    failed = False
    for name, violations in results.items():
        status = "PASS" if not violations else "FAIL"
        failed |= bool(violations)
        stdout.write(f"{status} {name} ({len(violations)} violations)\n")
        for v in violations[:20]:
            stdout.write(f"  {v}\n")
    return EX_NO if failed else EX_OK


def cmd_fuzz(cfg, stdin, stdout, stderr) -> int:
    if cfg.count <= 0 or cfg.max_len is None or cfg.max_len <= 0:
        raise UsageError("--count and --max-len must be positive")
    if cfg.max_len > FUZZ_MAX_LEN:
        raise UsageError(f"--max-len is capped at {FUZZ_MAX_LEN} for fuzzing")
    run = fuzz_pipeline if cfg.kind == "pipeline" else fuzz_kuroda
    cases = run(cfg.seed, cfg.count, cfg.max_len)
    for c in cases:
        status = "ok" if c.ok else "FAIL"
        detail = f"{c.words} words" if c.ok else c.detail
        stdout.write(f"{c.index:4d} {status} {detail}\n")
        if not c.ok:
            for line in textio.serialize_grammar(c.grammar).splitlines():
                stdout.write(f"     | {line}\n")
    failures = sum(not c.ok for c in cases)
    stdout.write(f"{len(cases) - failures}/{len(cases)} passed\n")
    return EX_NO if failures else EX_OK


COMMANDS = {
    "validate": cmd_validate,
    "kuroda": cmd_kuroda,
    "transform": cmd_transform,
    "enumerate": cmd_enumerate,
    "member": cmd_member,
    "equiv": cmd_equiv,
    "claims": cmd_claims,
    "fuzz": cmd_fuzz,
}


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg = parse_args(argv)
        return COMMANDS[cfg.subcommand](cfg, stdin, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EX_USAGE
    except DataError as exc:
        stderr.write(f"error: {exc}\n")
        return EX_DATAERR
    except KeyboardInterrupt:
        return 130
    except Exception as exc:  # noqa: BLE001 - last-resort handler keeps the exit contract
        stderr.write(f"error: internal: {type(exc).__name__}: {exc}\n")
        return EX_SOFTWARE


def main() -> None:
    sys.exit(run())
