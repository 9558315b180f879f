import inspect
import json
import textwrap

import pytest

from c34jac import cli
from c34jac import jacobian as J


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_deterministic(capsys):
    c1, out1, _ = run(capsys, "gen", "--p", "1009", "--seed", "7")
    c2, out2, _ = run(capsys, "gen", "--p", "1009", "--seed", "7")
    assert c1 == c2 == 0
    assert out1 == out2
    assert out1.startswith("p=1009\n")


def test_gen_files(capsys, tmp_path):
    cf, df = tmp_path / "c.txt", tmp_path / "d.txt"
    code, _, _ = run(capsys, "gen", "--p", "101", "--seed", "1", "--count", "3",
                     "--curve-out", str(cf), "--divisor-out", str(df))
    assert code == 0
    lines = df.read_text().splitlines()
    assert len(lines) == 3
    code, out, _ = run(capsys, "op", "add", "--curve", str(cf), "--d1", lines[0],
                       "--d2", lines[1])
    assert code in (0, 3)


def test_gen_nonprime(capsys):
    code, _, err = run(capsys, "gen", "--p", "4")
    assert code == 2 and "not prime" in err


def test_usage_error(capsys):
    assert run(capsys, "op", "frobnicate")[0] == 2
    assert run(capsys)[0] == 2


@pytest.mark.parametrize("kind, counts", [("add", "muls=117 invs=2"),
                                          ("double", "muls=129 invs=2"),
                                          ("neg", "muls=7 invs=0"),
                                          ("addflip", "muls=110 invs=2")])
def test_op_counts(capsys, kind, counts):
    code, out, _ = run(capsys, "op", kind, "--seed", "11")
    assert code == 0
    result, count_line = out.splitlines()
    assert len(result.split(",")) == 6
    assert count_line == counts


def test_op_json_and_smul(capsys):
    code, out, _ = run(capsys, "op", "smul", "--m", "5", "--seed", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert isinstance(data["muls"], int) and data["invs"] > 0
    assert run(capsys, "op", "smul", "--seed", "2")[0] == 2


def test_op_given_divisors(capsys):
    code, out, _ = run(capsys, "gen", "--p", "1009", "--seed", "3", "--count", "2")
    d1, d2 = out.split("---\n")[1].split()
    # the curve is regenerated from the same seed
    code, out, _ = run(capsys, "op", "add", "--p", "1009", "--seed", "3", "--d1", d1,
                       "--d2", d2)
    assert code == 0 and out.splitlines()[1] == "muls=117 invs=2"


def test_op_invalid_divisor(capsys):
    code, _, err = run(capsys, "op", "neg", "--d1", "1,2,3,4,5,6")
    assert code == 2


def test_op_atypical_exit(capsys):
    _, out, _ = run(capsys, "gen", "--p", "1009", "--seed", "3")
    d1 = out.split("---\n")[1].strip()
    code, _, err = run(capsys, "op", "add", "--seed", "3", "--d1", d1, "--d2", d1)
    assert code == 3 and "F' - F = 0" in err and "doubling" in err


def test_selftest_pass(capsys):
    code, out, _ = run(capsys, "selftest", "--trials", "10", "--p", "101")
    assert code == 0
    assert out.count("PASS") == 7


def test_selftest_zero_trials(capsys):
    code, _, err = run(capsys, "selftest", "--trials", "0")
    assert code == 0 and "0 trials" in err


def test_selftest_catches_sigma4_fault(capsys, monkeypatch):
    src = textwrap.dedent(inspect.getsource(J.kernel_m))
    mutated = src.replace("sg4 = mul(d12, D3)", "sg4 = 1 + mul(d12, D3)")
    assert mutated != src
    ns = dict(vars(J))
    exec(compile(mutated, "<mutant>", "exec"), ns)
    monkeypatch.setattr(J, "kernel_m", ns["kernel_m"])
    code, out, _ = run(capsys, "selftest", "--trials", "5", "--p", "101")
    assert code == 1
    assert "FAIL\toracle equivalence" in out


def test_bench_table(capsys):
    code, out, _ = run(capsys, "bench", "--trials", "5", "--p", "101")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["op", "median_ns", "muls", "invs"]
    rows = {ln.split("\t")[0]: ln.split("\t") for ln in lines[1:] if not ln.startswith("#")}
    assert all(len(r) == 4 for r in rows.values())
    assert {k: (int(r[2]), int(r[3])) for k, r in rows.items()} == {
        "add": (117, 2), "double": (129, 2), "addflip": (110, 2),
        "addflip_double": (122, 2), "negate": (7, 0)}
    assert all(int(r[1]) > 0 for r in rows.values())
    comments = [ln for ln in lines if ln.startswith("#")]
    assert any("NOT measured" in ln for ln in comments)
    assert any("145M" in ln and "150M" in ln for ln in comments)


def test_bench_json(capsys):
    code, out, _ = run(capsys, "bench", "--trials", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["prior_counts_not_measured"]


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "c34jac", "op", "neg", "--seed", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.splitlines()[1] == "muls=7 invs=0"
