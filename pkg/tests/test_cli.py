import io
import json
import sys

import pytest

from clusterlift.cli import run
from clusterlift.seedio import load_seed


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin, sys.stdout, sys.stderr
    sys.stdin, sys.stdout, sys.stderr = io.StringIO(stdin), out, err
    try:
        code = run(argv)
    finally:
        sys.stdin, sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def test_build_lift_render_pipeline():
    code, seed, _ = call(["seed", "build", "--type", "A", "--rank", "3", "--word", "1,2,3,1,2,1", "--paper-order"])
    assert code == 0
    assert json.loads(seed)["word"]["letters"] == [1, 2, 1, 3, 2, 1]
    code, lifted, _ = call(["lift", "--case", "tensor"], seed)
    assert code == 0 and load_seed(lifted).nu.D[0] == "1_l"
    code, dot, _ = call(["quiver", "render", "--format", "dot"], lifted)
    assert code == 0 and '"1_l" -> "1"' in dot


def test_matrix_seed_and_mutation(tmp_path):
    path = tmp_path / "s.json"
    code, _, _ = call(["seed", "build", "--matrix", "0,1;-1,0;1,0", "--kinds", "uf,uf,hf", "-o", str(path)])
    assert code == 0
    code, out, _ = call(["seed", "mutate", "--at", "1,1", "-i", str(path)])
    assert code == 0 and out == path.read_text()


def test_lift_from_nu_file(tmp_path):
    nu = tmp_path / "nu.json"
    nu.write_text('{"D": ["d"], "I": ["1", "2", "3"], "nu": [[1, 2, 3]]}')
    _, seed, _ = call(["seed", "build", "--matrix", "0,-1;1,0;0,1", "--kinds", "uf,uf,hf"])
    code, out, _ = call(["lift", "--nu", str(nu)], seed)
    assert code == 0
    assert load_seed(out).B[-1] == (-2, -2)


@pytest.mark.parametrize("argv,stdin", [
    (["seed", "build", "--type", "A2", "--word", "1,1"], ""),
    (["seed", "build", "--matrix", "1,0;0,0", "--kinds", "uf,uf"], ""),
    (["seed", "build", "--word", "1"], ""),
    (["seed", "mutate", "--at", "3"], None),
    (["quiver", "render"], "{}"),
])
def test_invalid_input_exits_1(argv, stdin):
    if stdin is None:
        _, stdin, _ = call(["seed", "build", "--type", "A2", "--word", "1,2,1"])
    code, _, err = call(argv, stdin)
    assert code == 1
    assert err.startswith("error:")


def test_verify_reports_lines():
    code, out, _ = call(["verify", "--suite", "involution", "--trials", "5", "--seed", "3"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert all(line.startswith("involution ") and " PASS" in line for line in lines)


def test_oracle_check():
    code, out, _ = call(["oracle", "--check", "fz", "--trials", "3"])
    assert code == 0 and out.count("PASS") == 3


def test_suite_failure_exits_2(monkeypatch):
    from clusterlift import suites

    def broken(rng, trials):
        rep = suites.SuiteReport("broken")
        rep.add("case", False, "counterexample")
        return rep

    monkeypatch.setitem(suites.SUITES, "goldens", (broken, 0))
    code, out, err = call(["verify", "--suite", "goldens"])
    assert code == 2
    assert "broken case FAIL counterexample" in out
    assert "counterexample" in err
