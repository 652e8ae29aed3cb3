import io
import subprocess
import sys

import pytest

from compdeck.cli import main

from conftest import EXAMPLE_2


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def deck_file(tmp_path):
    def write(lines):
        path = tmp_path / "deck.txt"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(path)
    return write


def test_deck_example_1(capsys):
    code, out, _ = run(capsys, "deck", "-k", "3", "5,1,2,2")
    assert code == 0
    assert out.splitlines() == [
        "5,2", "3,2,2", "4,1,2", "4,2,1", "5,1,1",
        "2,1,2,2", "3,1,1,2", "3,1,2,1", "4,1,1,1"]


def test_deck_full_deletion_prints_empty(capsys):
    code, out, _ = run(capsys, "deck", "-k", "3", "3")
    assert (code, out) == (0, "()\n")


def test_deck_small(capsys):
    assert run(capsys, "deck", "-k", "1", "1,2")[1] == "2\n1,1\n"


def test_deck_errors(capsys):
    assert run(capsys, "deck", "-k", "5", "1,2")[0] == 1
    code, _, err = run(capsys, "deck", "-k", "1", "1,x")
    assert code == 2 and "bad composition part" in err


def test_deck_machine(capsys):
    code, out, _ = run(capsys, "deck", "-k", "1", "1,2", "--machine")
    assert out == "k=1\ntarget_sum=2\nsize=2\nelement=2\nelement=1,1\n"


def test_reconstruct_example_2(capsys, deck_file):
    path = deck_file(["# example 2"] + [",".join(map(str, d)) for d in EXAMPLE_2])
    code, out, _ = run(capsys, "reconstruct", "-k", "3", "-f", path)
    assert (code, out) == (0, "UNIQUE 3,2,1,2,1,1\n")


def test_reconstruct_ambiguous(capsys, deck_file):
    path = deck_file(["1,1", "2"])
    code, out, _ = run(capsys, "reconstruct", "-k", "1", "-f", path)
    assert (code, out) == (0, "AMBIGUOUS\n1,2\n2,1\n")
    code, out, _ = run(capsys, "reconstruct", "-k", "1", "-f", path, "--machine")
    assert out == "result=ambiguous\ncount=2\ncandidate=1,2\ncandidate=2,1\n"


def test_reconstruct_mixed_sums(capsys, deck_file):
    path = deck_file(["1,2,2", "3,3"])
    code, _, err = run(capsys, "reconstruct", "-k", "1", "-f", path)
    assert code == 2
    assert "line 2, column 1" in err


def test_reconstruct_not_a_deck(capsys, deck_file):
    path = deck_file(["5,2", "3,2,2"])
    code, out, _ = run(capsys, "reconstruct", "-k", "3", "-f", path)
    assert code == 1
    assert out.startswith("NOT A DECK")


def test_reconstruct_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "reconstruct", "-k", "1", "-f", str(tmp_path / "nope"))
    assert code == 1 and "cannot read" in err


def test_reconstruct_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("2,1,1\n1,2,1\n1,1,2\n1,1,1,1\n2,2\n"))
    code, out, _ = run(capsys, "reconstruct", "-k", "2")
    assert code == 0
    assert out.startswith("AMBIGUOUS")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "-k", "3", "--from", "10", "--to", "11")
    assert code == 0
    assert "failures: 0" in out and "total: 1536" in out
    code, out, _ = run(capsys, "verify", "-k", "1", "--from", "4", "--to", "4")
    assert "total: 8" in out


def test_verify_precondition(capsys):
    assert run(capsys, "verify", "-k", "2", "--from", "5", "--to", "9")[0] == 1


def test_verify_machine_is_stable(capsys):
    argv = ["verify", "-k", "2", "--from", "7", "--to", "9", "--machine", "--jobs", "2"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second == "k=2\nn_min=7\nn_max=9\ntotal=448\nfailures=0\n"


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "-k", "1")
    assert code == 0
    assert out.splitlines() == ["1,2 and 2,1 share 2 1-deletions:", "  2", "  1,1"]


def test_census(capsys):
    assert run(capsys, "census", "-k", "1", "-n", "4")[1] == "collision classes: 0\n"
    out = run(capsys, "census", "-k", "1", "-n", "3", "--machine")[1]
    assert "classes=" in out and "class=1,2 2,1" in out


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "2,1,3,1,2", "--machine")
    assert out == "sum=9\nlength=5\nex=4\nex2=1\nones=2\n"


def test_bridge(capsys):
    assert run(capsys, "bridge", "to-permutation", "1,2,2")[1] == "1,3,2,5,4\n"
    assert run(capsys, "bridge", "to-composition", "2,1,3,6,5,4,7,9,8")[1] == "2,1,3,1,2\n"
    assert run(capsys, "bridge", "to-composition", "2,4,1,3")[0] == 1
    assert run(capsys, "bridge", "to-composition", "2,2")[0] == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["deck"])
    assert info.value.code == 2


@pytest.mark.parametrize("w, k", [
    ("5,1,2,2", 3), ("1,1,1,2,2,1,2", 3), ("3,2,1,2,1,1", 3),
    ("1,1,1,1,1,2", 2), ("4,4", 1), ("2,3,1,1,4", 2),
])
def test_pipe_round_trip(w, k):
    cmd = [sys.executable, "-m", "compdeck"]
    deck = subprocess.run(cmd + ["deck", "-k", str(k), w],
                          capture_output=True, text=True, check=True).stdout
    done = subprocess.run(cmd + ["reconstruct", "-k", str(k)], input=deck,
                          capture_output=True, text=True)
    assert done.returncode == 0
    assert done.stdout == f"UNIQUE {w}\n"
