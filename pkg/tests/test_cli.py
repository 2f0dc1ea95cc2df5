import json
import subprocess
import sys

import pytest

from spinrock.cli import main

RHO4 = "32,27,22,17,16,12,11,7,6,2,1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_barcore(capsys):
    code, out, _ = run(capsys, "barcore", "-p", "5", "37,32,22,17,16,12,11,10,7,6,2,1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "schema": 1, "p": 5, "partition": "(37,32,22,17,16,12,11,10,7,6,2,1)",
        "core": "(" + RHO4 + ")", "weight": 4,
    }
    code, out, _ = run(capsys, "barcore", "-p", "3", "2,1")
    assert code == 0 and "()" in out and "1" in out


@pytest.mark.parametrize("argv", [
    ["barcore", "-p", "5", "3,x"],
    ["barcore", "-p", "4", "3"],
    ["decomp", "-p", "5"],
    ["verify", "--suite", "nope"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_domain_errors(capsys):
    code, _, err = run(capsys, "decomp", "-p", "5", "-d", "1", "--rho", "3,1")
    assert code == 3 and "Rouquier" in err
    assert run(capsys, "barcore", "-p", "5", "3,3")[0] == 3
    assert run(capsys, "induce", "-p", "5", "-d", "1", "5,2,1")[0] == 3


def test_block_info_worked_example(capsys):
    code, out, _ = run(capsys, "block", "info", "-p", "5", "-d", "4", "--rho", RHO4, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["r_counts"] == [4, 7, 0, 0] and data["rouquier"]
    code, out, _ = run(capsys, "quotient", "-p", "5", "-d", "4", "--rho", RHO4,
                       "37,32,22,17,16,12,11,10,7,6,2,1", "--format", "json")
    assert json.loads(out)["quotient"] == "((2),(),(1,1))"


def test_block_list(capsys):
    code, out, _ = run(capsys, "block", "list", "-p", "5", "-d", "1", "--kind", "restricted", "--format", "csv")
    assert out.splitlines() == ["partition,quotient", '"(6,2)","((),(1),())"', '"(5,2,1)","((1),(),())"']


def test_decomp_json(capsys):
    code, out, _ = run(capsys, "decomp", "-p", "5", "-d", "1", "--rho", "minimal", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["p"], data["rho"], data["d"]) == (5, [2, 1], 1)
    assert data["entries"] == [[1, 0], [1, 1], [0, 2]]


def test_qdecomp_table(capsys):
    _, out, _ = run(capsys, "qdecomp", "-p", "5", "-d", "1")
    assert out.splitlines()[1].split() == ["(7,1)", "q^2", "0"]


def test_cartan_methods_identical(capsys):
    outs = set()
    for method in ("closed", "from-decomp", "wreath"):
        for fmt in ("json",):
            code, out, _ = run(capsys, "cartan", "-p", "5", "-d", "2", "--method", method, "--format", fmt)
            assert code == 0
            outs.add(out)
    assert len(outs) == 1


def test_cartan_wreath_labels(capsys):
    _, out, _ = run(capsys, "cartan", "--method", "wreath", "--ell", "2", "-d", "1", "--format", "json")
    data = json.loads(out)
    assert data["row_labels"] == [[[1], []], [[], [1]]]


def test_warn_when_d_at_least_p(capsys):
    code, _, err = run(capsys, "decomp", "-p", "3", "-d", "3")
    assert code == 0 and "warning" in err


def test_symfunc(capsys):
    assert run(capsys, "symfunc", "ikostka", "2", "1,1")[1].split() == ["value", "-t"]
    assert run(capsys, "symfunc", "ikostka", "2", "1,1", "--at", "-1")[1].split() == ["value", "1"]
    assert run(capsys, "symfunc", "lr", "2,1", "2", "1")[1].splitlines()[-1].split() == ["value", "1"]
    assert json.loads(run(capsys, "symfunc", "schur-p", "2,1", "--format", "json")[1]) == {
        "schema": 1, "(2,1)": 1}
    assert run(capsys, "symfunc", "ikostka", "2", "1")[0] == 3


def test_induce(capsys):
    _, out, _ = run(capsys, "induce", "-p", "5", "-d", "1", "6,2", "--format", "json")
    assert json.loads(out)["coeffs"] == [[[6, 2], 16], [[5, 2, 1], 16]]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cartan-equality", "-p", "5", "-d", "2")
    assert code == 0 and "all passed" in out
    code, out, _ = run(capsys, "verify", "--suite", "gg", "-p", "3", "-d", "2")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "symmfunc-identities")
    names = [line.split()[1].rstrip(":") for line in out.splitlines() if line.startswith("PASS")]
    assert code == 0 and {"mackey", "smackey", "klem", "msgnm"} <= set(names)


def test_verify_failure_exit_code(capsys, monkeypatch):
    from spinrock import cli
    from spinrock.verify import Check

    def broken(name, ps, ds, jobs=None):
        c = Check("forced")
        c.record(False, "witness")
        return [c]

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--suite", "dominance")
    assert code == 4 and "FAIL" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "spinrock", "barcore", "-p", "3", "2,1", "--format", "csv"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.startswith("key,value")
