import json
import shutil
import subprocess
import sys

import pytest

from paraglider.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main
from paraglider.families import make_bhat, make_hstar
from paraglider.graph import Graph, format_graph, parse_graph


@pytest.fixture
def write(tmp_path):
    def _write(g, name="g.txt"):
        path = tmp_path / name
        path.write_text(format_graph(g))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "--family", "hstar")
    assert code == EXIT_OK
    assert parse_graph(out) == make_hstar()
    code, out, _ = run(capsys, "generate", "--family", "bhat", "--s", "3", "--complement")
    assert parse_graph(out) == make_bhat(3).complement()
    code, out1, _ = run(capsys, "generate", "--family", "random", "--seed", "5", "--n", "25")
    code, out2, _ = run(capsys, "generate", "--family", "random", "--seed", "5", "--n", "25")
    assert out1 == out2
    path = tmp_path / "r.txt"
    path.write_text(out1)
    code, out, _ = run(capsys, "cover", str(path), "--json")
    assert code == EXIT_OK and json.loads(out)["size"] <= json.loads(out)["trace"]["bound"]


def test_analyze(capsys, write):
    code, out, _ = run(capsys, "analyze", write(make_hstar().complement()), "--json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["predicates"]["target_class"] and report["predicates"]["complement_in_H"]
    assert report["invariants"]["chi"] == 8 and report["invariants"]["omega"] == 5
    assert report["cover"]["colors"] == 8
    assert report["decomposition"]["label"] == "other"
    assert "Thm1.9" in report["certificate"]["applicable"]


def test_analyze_outside_class(capsys, write):
    code, out, _ = run(capsys, "analyze", write(Graph.empty(4)))
    assert code == EXIT_OK
    assert "target_class: False" in out and "cover" not in out


def test_color_and_cover(capsys, write):
    code, out, _ = run(capsys, "color", write(make_bhat(2).complement()), "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["colors"] == 6
    assert data["trace"]["claimed"] == "2alpha-2"
    code, out, _ = run(capsys, "cover", write(make_hstar()))
    assert code == EXIT_OK and "size: 8" in out and "case: 4a" in out
    code, out, _ = run(capsys, "cover", write(make_hstar().complement()), "--complement", "--json")
    assert json.loads(out)["size"] == 8


def test_cover_all_c5(capsys, write):
    code, out, _ = run(capsys, "cover", write(make_bhat(2)), "--all-c5", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["c5_count"] == len(data["probes"]) > 1
    assert all(p["within_bound"] for p in data["probes"])


def test_witness(capsys, write):
    code, out, _ = run(capsys, "witness", write(make_hstar()), "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["size"] == 5


def test_oddminor_and_certify(capsys, write):
    path = write(Graph.cycle(5))
    code, out, _ = run(capsys, "oddminor", path, "--json")
    assert code == EXIT_OK and json.loads(out)["oh"] == 3
    code, out, _ = run(capsys, "oddminor", path, "--t", "4")
    assert "found: False" in out
    code, out, _ = run(capsys, "certify", write(Graph.cycle(5).complement(), "c.txt"))
    assert code == EXIT_OK and "rule: Lemma2.3" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["target_class"] == 358 and data["violations"] == []
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--iso")
    assert code == EXIT_OK and "violations: 0" in out


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--criteria", "1,6")
    assert code == EXIT_OK
    assert out.count("[PASS]") == 2


def test_exit_codes(capsys, write, tmp_path):
    # class violations and parse errors are usage-level errors
    assert run(capsys, "color", write(Graph.empty(3)))[0] == EXIT_USAGE
    assert run(capsys, "cover", write(Graph.cycle(7)))[0] == EXIT_USAGE
    assert run(capsys, "witness", write(Graph.cycle(7)))[0] == EXIT_USAGE
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 5\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == EXIT_USAGE and "line 2" in err
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == EXIT_USAGE
    assert run(capsys, "oddminor", write(Graph.empty(13)))[0] == EXIT_USAGE
    assert run(capsys, "enumerate", "--n", "9")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == EXIT_USAGE
    capsys.readouterr()


def test_internal_contradiction_exit_code(monkeypatch, capsys, write):
    import paraglider.cli as cli
    from paraglider.errors import InternalContradiction

    def broken(g):
        raise InternalContradiction("planted")

    monkeypatch.setattr(cli, "color", broken)
    code, _, err = run(capsys, "color", write(Graph.cycle(5).complement()))
    assert code == EXIT_VIOLATION and "planted" in err


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(format_graph(Graph.cycle(5))))
    code, out, _ = run(capsys, "cover", "-", "--json")
    assert code == EXIT_OK and json.loads(out)["size"] == 3


@pytest.mark.skipif(shutil.which("paraglider") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["paraglider", "generate", "--family", "ht", "--t", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert parse_graph(proc.stdout).n == 15
