import json

import pytest

from openind.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ip_z(capsys):
    code, out, _ = run(capsys, "ip", "7/2")
    assert code == 0 and "3" in out


def test_ip_zx_not_found(capsys):
    code, out, _ = run(capsys, "--model", "zx", "ip", "X/2", "--json")
    data = json.loads(out)
    assert data["result"] == "not_found" and "1/2*X" in data["certificate"]
    assert code == 0


def test_root_ip_shep(capsys):
    code, out, _ = run(capsys, "--model", "shep", "root-ip", "rcroot(t^2 - (x + 1), 2)")
    assert code == 0 and "x^(1/2)" in out


def test_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "root-ip", "rcroot(t^2 - x, 2)", "--model", "shep")
    assert code == 0 and "x^(1/2)" in out


@pytest.mark.parametrize("argv", [
    ["ip", "7/"],
    ["--model", "q", "ip", "1"],
    ["root-ip", "rcroot(t^2 + 1, 1)"],
    ["ip", "X/2"],
    ["ipi", "t^2", "0", "3", "10"],
    ["theorem", "t3", "--trials", "0"],
    ["nonsense"],
])
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 3


def test_induction_certificate(capsys):
    code, out, _ = run(capsys, "--model", "zx", "induction", "x + x <= y1", "--params", "X", "--json")
    data = json.loads(out)
    assert code == 0 and data["holds"] is False
    assert set(data["certificate"]) == {"base", "step", "counterexample"}


def test_theorem_exit_codes(capsys):
    assert run(capsys, "theorem", "t3", "--trials", "5")[0] == 0
    assert run(capsys, "--model", "zx", "theorem", "t3", "--trials", "5")[0] == 0


def test_cap_exit_code(capsys):
    code, _, _ = run(capsys, "--model", "shep", "--cap-terms", "2", "theorem", "t1", "--trials", "5")
    assert code == 4


def test_theorem_json_is_deterministic(capsys):
    _, a, _ = run(capsys, "theorem", "t3", "--model", "z", "--seed", "7", "--json", "--trials", "10")
    _, b, _ = run(capsys, "theorem", "t3", "--model", "z", "--seed", "7", "--json", "--trials", "10")
    a, b = json.loads(a), json.loads(b)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b
