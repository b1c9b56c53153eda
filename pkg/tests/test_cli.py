import io
import subprocess
import sys

import pytest

from helpers import DATA, load
from stratifolds import StratGraph, b12, parse_graph, serialize_graph, to_dot
from stratifolds.cli import main
from stratifolds.formats import ParseError


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_parse_g2():
    g = parse_graph("e 1 a 2\ne 1 b 2\ne 2 a 1\ne 3 b 1\n")
    assert g == StratGraph.from_edges([(1, "a", 2), (1, "b", 2), (2, "a"), (3, "b")])


def test_parse_comments_blank_and_vertices():
    g = parse_graph("# header\n\nw 0 -1\nb q  # trailing\nw 1\ne 1 q 3\n")
    assert g.genus("0") == -1 and g.blacks() == ["q"]
    assert serialize_graph(g) == "w 0 -1\nw 1\nb q\ne 1 q 3\n"


@pytest.mark.parametrize(
    "text,line",
    [
        ("e 1 a 0\n", 1),
        ("w 0\nw 0\n", 2),
        ("e 1 a\nx 3\n", 2),
        ("\n\ne 1 a two\n", 3),
        ("w 1 g\n", 1),
        ("e a 1\ne 1 a\n", 2),
    ],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.lineno == line
    assert f"line {line}" in str(info.value)


def test_serialize_round_trip():
    for name in ("g1.txt", "g2.txt", "g3.txt"):
        g = load(name)
        text = serialize_graph(g)
        assert serialize_graph(parse_graph(text)) == text
        assert parse_graph(text) == g


def test_dot():
    dot = to_dot(b12("a", [0, 1]))
    assert dot.startswith("graph G {")
    assert '"a" [style=filled, fillcolor=black, fontcolor=white];' in dot
    assert '"0" [style=filled, fillcolor=gray];' in dot
    assert '"1" -- "a" [label="2", style=bold];' in dot
    assert '"0" -- "a" [label="1"];' in dot


def test_check_and_exit_codes():
    assert run("check", str(DATA / "g3.txt")) == (0, "simply-connected: true\n")
    assert run("check", str(DATA / "g1.txt")) == (1, "simply-connected: false\n")


def test_predicate_commands():
    assert run("collapsible", str(DATA / "g2.txt")) == (0, "root: 1\n")
    assert run("collapsible", str(DATA / "g1.txt")) == (1, "root: none\n")
    assert run("horned", str(DATA / "g1.txt")) == (0, "horned: true\n")
    assert run("horned", "--contains", str(DATA / "g3.txt")) == (1, "horned: false\ncontains horned subtree: false\n")
    assert run("horned", "--contains", str(DATA / "g1.txt"))[1].endswith("contains horned subtree: true\n")
    assert run("trivalent", str(DATA / "g2.txt")) == (0, "trivalent: true\n")


def test_pi1_and_abel():
    code, out = run("pi1", str(DATA / "g2.txt"))
    assert code == 0 and out == "⟨a,b | a^2 b^2, a, b⟩\n"
    code, out = run("abel", str(DATA / "g1.txt"))
    assert out == "free rank: 0\ntorsion: 2\nH1: Z/2\n"


def test_member_replay_check_pipeline(tmp_path):
    code, script = run("member", str(DATA / "g3.txt"))
    assert code == 0 and script.startswith("SEED ")
    (tmp_path / "s.txt").write_text(script)
    code, graph = run("replay", str(tmp_path / "s.txt"))
    assert code == 0
    (tmp_path / "g.txt").write_text(graph)
    assert run("check", str(tmp_path / "g.txt")) == (0, "simply-connected: true\n")


def test_g4_script_file():
    code, graph = run("replay", str(DATA / "g4.script"))
    assert code == 0
    assert parse_graph(graph).is_trivalent()


def test_member_rejects(capsys):
    assert run("member", str(DATA / "g1.txt")) == (1, "")
    assert "member: false" in capsys.readouterr().err


def test_census_and_validate():
    code, out = run("census", "1")
    assert code == 0 and out.splitlines() == ["0 W", "1 B(1:W,1:W,1:W)", "1 B(1:W,2:W)"]
    code, out = run("validate", "2")
    assert code == 0 and out.rstrip().endswith("agreement: true")


def test_errors(tmp_path, capsys):
    assert run("check", str(tmp_path / "missing.txt"))[0] == 2
    (tmp_path / "bad.txt").write_text("e 0 a 2\n")
    assert run("check", str(tmp_path / "bad.txt"))[0] == 2
    assert "not trivalent" in capsys.readouterr().err
    assert run("frobnicate")[0] == 2
    assert run("census", "-1")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stratifolds.cli", "collapsible", str(DATA / "g2.txt")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "root: 1\n"
