import subprocess
import sys

import pytest

from reproaxb.cli import main, parse_report, render_machine, run
from reproaxb.ratmat import Mat, format_matrix


@pytest.fixture
def files(tmp_path):
    def write(name, M):
        path = tmp_path / f"{name}.mat"
        path.write_text(M if isinstance(M, str) else format_matrix(M) + "\n")
        return str(path)

    return write


@pytest.fixture
def ex(files):
    return {
        "A": files("A", Mat([[1, 2]])),
        "B": files("B", "# column\n1\n3\n"),
        "C": files("C", Mat([[12]])),
        "X0": files("X0", Mat([[84, -24], [-36, 12]])),
    }


@pytest.fixture
def bad_files(files):
    return [files("A_bad", Mat([[1], [0]])), files("B_bad", Mat([[1]])), files("C_bad", Mat([[0], [1]]))]


@pytest.mark.parametrize("method", ["oracle", "penrose", "structural"])
def test_check_example(ex, method):
    rep = run(["check", method, ex["A"], ex["B"], ex["C"]])
    assert rep.exit_code == 0
    assert rep.verdict["consistent"] is True


@pytest.mark.parametrize("method", ["oracle", "penrose", "structural"])
def test_check_inconsistent(bad_files, method):
    rep = run(["check", method, *bad_files])
    assert rep.exit_code == 1
    assert rep.verdict["consistent"] is False


def test_solve_with_particular(ex):
    rep = run(["solve", "axbc", ex["A"], ex["B"], ex["C"], "--particular", ex["X0"]])
    assert rep.exit_code == 0
    assert rep.verdict["reproductive"] is False
    assert rep.verdict["certificate"] == "proven not representable"
    assert rep.verdict["dimension"] == 3
    assert rep.verdict["shift"] == Mat([[84, -24], [-36, 12]])


def test_solve_general(ex):
    rep = run(["solve", "axbc", ex["A"], ex["B"], ex["C"]])
    assert rep.verdict["reproductive"] is True
    assert rep.verdict["shift"] == Mat([[12, 0], [0, 0]])
    assert [k for k in rep.verdict if k.startswith("basis")] == ["basis 1", "basis 2", "basis 3"]


def test_solve_inconsistent(bad_files):
    assert run(["solve", "axbc", *bad_files]).exit_code == 1


def test_particular_not_a_solution(ex, files):
    bad = files("bad", Mat([[1, 0], [0, 1]]))
    rep = run(["solve", "axbc", ex["A"], ex["B"], ex["C"], "--particular", bad])
    assert rep.exit_code == 2


def test_rnf_and_oneinv(ex):
    rep = run(["rnf", ex["A"]])
    assert rep.verdict["rank"] == 1
    assert rep.verdict["P"] == Mat([[1, -2], [0, 1]])
    rep = run(["oneinv", ex["A"], "--zero"])
    assert rep.verdict["G"] == Mat([[1], [0]])
    rep = run(["oneinv", ex["A"], "--seed", "4"])
    assert rep.verdict["is one-inverse"] is True


def test_solve_systems(files):
    P = files("P", Mat([[1, 0], [0, 0]]))
    D = files("D", Mat([[0, 0], [0, 1]]))
    N = files("N", Mat([[0, 1], [0, 0]]))
    rep = run(["solve", "two-sided", P, P, D, D])
    assert rep.exit_code == 0 and rep.verdict["canonical reproductive"] is True
    rep = run(["solve", "commuting", P])
    assert rep.exit_code == 0 and rep.verdict["Abar"] == Mat([[1, 0], [0, 0]])
    assert rep.verdict["dimension"] == 1
    assert run(["solve", "commuting", N]).exit_code == 1
    rep = run(["solve", "presic", P, "--eq", "E4"])
    assert rep.verdict["shift"] == Mat.identity(2)
    rep = run(["solve", "presic", P, "--eq", "E4", "--haveric"])
    assert rep.verdict["equation"] == "E4'" and rep.verdict["reproductive"] is True


def test_parse_error_names_file_and_line(files, ex, capsys):
    broken = files("broken", "1 2\n3 x\n")
    code = main(["check", "oracle", broken, ex["B"], ex["C"]])
    assert code == 2
    err = capsys.readouterr().err
    assert "broken.mat:2:" in err


def test_shape_error_exit_code(ex):
    rep = run(["check", "oracle", ex["A"], ex["B"], ex["X0"]])
    assert rep.exit_code == 2
    assert rep.error


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["check", "magic", "a", "b", "c"], ["solve", "presic", "x"]])
def test_usage_errors(argv):
    assert run(argv).exit_code == 2


def test_machine_report_round_trips(ex):
    rep = run(["--format", "machine", "solve", "axbc", ex["A"], ex["B"], ex["C"], "--particular", ex["X0"]])
    text = render_machine(rep)
    scalars, matrices = parse_report(text)
    assert scalars["command"] == "solve axbc"
    assert scalars["reproductive"] == "false"
    assert matrices["input A"] == Mat([[1, 2]])
    expected = {k: v for k, v in rep.verdict.items() if isinstance(v, Mat)}
    for name, M in expected.items():
        assert matrices[name] == M
    assert len(matrices) == len(expected) + len(rep.inputs)


def test_golden_exit_codes(ex, bad_files, files):
    P = files("P", Mat([[1, 0], [0, 0]]))
    N = files("N", Mat([[0, 1], [0, 0]]))
    corpus = [
        (["check", "oracle", ex["A"], ex["B"], ex["C"]], 0),
        (["check", "penrose", *bad_files], 1),
        (["check", "structural", *bad_files], 1),
        (["solve", "commuting", P], 0),
        (["solve", "commuting", N], 1),
        (["rnf", files("bad", "1 /2\n")], 2),
        (["solve", "nothing"], 2),
    ]
    for argv, code in corpus:
        assert run(argv).exit_code == code, argv


def test_module_entry_point(ex):
    proc = subprocess.run(
        [sys.executable, "-m", "reproaxb", "check", "oracle", ex["A"], ex["B"], ex["C"]],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "consistent: true" in proc.stdout
