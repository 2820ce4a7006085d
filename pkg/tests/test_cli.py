import io
import subprocess
import sys

import pytest

from scgs.cli import EX_DATAERR, EX_USAGE, run
from scgs.samples import EXAMPLE_TEXT


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    csg = d / "example.csg"
    csg.write_text(EXAMPLE_TEXT)
    scgs = d / "example.scgs"
    code, _, _ = call("transform", str(csg), "-o", str(scgs))
    assert code == 0
    return csg, scgs


def test_transform_pipe_enumerate(files):
    csg, _ = files
    _, system_text, _ = call("transform", str(csg))
    code, out, err = call("enumerate", "--max-len", "3", stdin=system_text)
    assert code == 0
    assert out.split() == ["bc", "bcd", "bed"]
    assert "truncated: no" in err


def test_member_with_trace(files):
    _, scgs = files
    code, out, _ = call("member", str(scgs), "bed", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "yes"
    assert any(" P2_checkf @" in line for line in lines)
    assert lines[1] == "1 P1_AtoBC(A -> B C) @0 : [+.A...] => [-.B..|] [.|C..|]"


def test_member_exit_codes(files):
    _, scgs = files
    assert call("member", str(scgs), "db")[0] == 1
    assert call("member", str(scgs), "bcdd", "--max-states", "5")[0] == 2


def test_equiv(files):
    csg, scgs = files
    code, out, _ = call("equiv", str(csg), str(scgs), "--max-len", "2")
    assert (code, out) == (0, "EQUAL ({bc})\n")


def test_equiv_lists_difference(files, tmp_path):
    csg, _ = files
    other = tmp_path / "other.csg"
    other.write_text(EXAMPLE_TEXT.replace("C -> c\n", ""))
    code, out, _ = call("equiv", str(csg), str(other), "--max-len", "2")
    assert code == 1
    assert out.splitlines() == ["DIFFERENT", "only in first: bc"]


def test_validate_and_kuroda(files, tmp_path):
    csg, scgs = files
    assert call("validate", str(csg))[1].startswith("valid grammar")
    assert "max degree 3" in call("validate", str(scgs))[1]
    bad = tmp_path / "bad.csg"
    bad.write_text("nonterminals: A B\nterminals: a\nstart: A\nrules:\nA B -> a\n")
    code, _, err = call("validate", str(bad))
    assert code == EX_DATAERR and err.startswith("error: contracting rule")
    mono = tmp_path / "mono.csg"
    mono.write_text("nonterminals: S\nterminals: a b\nstart: S\nrules:\nS -> a S b\nS -> a b\n")
    code, out, _ = call("kuroda", str(mono))
    assert code == 0 and "#" in out


def test_degree2_transform(files):
    csg, _ = files
    code, out, _ = call("transform", str(csg), "--degree2")
    assert code == 0
    code, words, _ = call("enumerate", "--max-len", "3", stdin=out)
    assert words.split() == ["bc", "bcd", "bed"]


def test_claims_and_fuzz(files):
    _, scgs = files
    code, out, _ = call("claims", str(scgs), "--max-len", "3")
    assert code == 0 and out.count("PASS") == 4
    code, out, _ = call("fuzz", "--seed", "1", "--count", "2", "--max-len", "3")
    assert code == 0 and out.endswith("2/2 passed\n")


@pytest.mark.parametrize(
    "argv, code",
    [
        (["bogus"], EX_USAGE),
        ([], EX_USAGE),
        (["enumerate", "/nonexistent/file"], EX_USAGE),
        (["enumerate", "/nonexistent/file", "--max-len", "2"], EX_USAGE),
        (["enumerate", "-", "--max-len", "0"], EX_USAGE),
        (["fuzz", "--max-len", "9"], EX_USAGE),
        (["member", "x"], EX_USAGE),
    ],
)
def test_usage_errors(argv, code):
    got, _, err = call(*argv, stdin=EXAMPLE_TEXT)
    assert got == code
    assert err.startswith("error:")


def test_data_errors():
    code, _, err = call("enumerate", "--max-len", "2", stdin="garbage\n")
    assert code == EX_DATAERR and err.startswith("error:")
    code, _, _ = call("claims", "--max-len", "2", stdin=EXAMPLE_TEXT)
    assert code == EX_DATAERR


def test_output_is_byte_identical(files):
    csg, _ = files
    a = call("enumerate", str(csg), "--max-len", "5")[1]
    b = call("enumerate", str(csg), "--max-len", "5")[1]
    assert a == b and a.splitlines() == sorted(a.splitlines())


def test_module_entry_point(files):
    csg, _ = files
    proc = subprocess.run([sys.executable, "-m", "scgs", "enumerate", str(csg), "--max-len", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "bc\n"
