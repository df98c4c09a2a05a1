import json
import subprocess
import sys

import pytest

from ginv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_unit(capsys):
    code, out, _ = run(capsys, "compute", "--ring", "zmod:8", "--kind", "core", "--element", "3")
    obj = json.loads(out)
    assert code == 0
    assert obj["result"] == 3 and obj["certificate"]["valid"]


def test_compute_nonexistent(capsys):
    code, out, _ = run(capsys, "compute", "--ring", "zmod:8", "--kind", "core", "--element", "4")
    obj = json.loads(out)
    assert code == 2
    assert obj["error"] == "NotCoreInvertible" and obj["because"] == "NotGroupInvertible"


def test_compute_rational_defaults_to_five_eq(capsys):
    code, out, _ = run(capsys, "compute", "--ring", "mat:rat:2", "--kind", "core",
                       "--element", "[[1,0],[-1,0]]")
    obj = json.loads(out)
    assert code == 0 and obj["certificate"]["form"] == "five-eq"
    assert obj["result"] == [["1/2", "-1/2"], ["-1/2", "1/2"]]


def test_compute_is_deterministic(capsys):
    argv = ["compute", "--ring", "mat:zmod:4:2", "--kind", "dual", "--element", "[[3,1],[0,0]]"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize("ring,element", [("zmod:8", "3"), ("mat:rat:2", "[[1,0],[-1,0]]"),
                                          ("mat:zmod:4:2", "[[1,2],[0,0]]")])
@pytest.mark.parametrize("kind", ["group", "13", "14", "core", "dual-core"])
def test_compute_verify_closure(capsys, tmp_path, ring, element, kind):
    code, out, _ = run(capsys, "compute", "--ring", ring, "--kind", kind, "--element", element)
    assert code == 0
    path = tmp_path / "out.json"
    path.write_text(out)
    code, out, _ = run(capsys, "verify", "--ring", ring, "--certificate", str(path))
    assert code == 0 and json.loads(out)["valid"]


def test_verify_files(capsys, tmp_path):
    (tmp_path / "a.json").write_text("4")
    (tmp_path / "x.json").write_text("4")
    code, out, _ = run(capsys, "verify", "--ring", "zmod:8", "--kind", "core",
                       "--a-file", str(tmp_path / "a.json"), "--x-file", str(tmp_path / "x.json"))
    assert code == 2 and not json.loads(out)["valid"]


def test_verify_inline_valid(capsys):
    code, _, _ = run(capsys, "verify", "--ring", "zmod:8", "--kind", "core", "--form", "three-eq",
                     "--a", "3", "--x", "3")
    assert code == 0


def test_classify_table(capsys):
    code, out, _ = run(capsys, "classify", "--ring", "zmod:8", "--format", "table")
    assert code == 0 and out.startswith("# zmod:8")


def test_classify_json_jobs_invariant(capsys):
    _, one, _ = run(capsys, "classify", "--ring", "mat:gf:2:2")
    _, four, _ = run(capsys, "classify", "--ring", "mat:gf:2:2", "--jobs", "4")
    assert one == four


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--ring", "zmod:8", "--kind", "core", "--element", "3")
    assert code == 0 and json.loads(out)["solutions"] == [3]
    code, out, _ = run(capsys, "search", "--ring", "zmod:8", "--kind", "core", "--element", "4")
    assert code == 2 and json.loads(out)["solutions"] == []


@pytest.mark.parametrize("sid", ["ex4.2", "ex4.4", "rem4.5", "rem4.6"])
def test_demo(capsys, sid):
    code, out, _ = run(capsys, "demo", sid)
    assert code == 0 and "FAIL" not in out


def test_demo_unknown(capsys):
    code, _, err = run(capsys, "demo", "nope")
    assert code == 1 and "UnknownScenario" in err


def test_sum(capsys):
    code, out, _ = run(capsys, "sum", "--ring", "mat:rat:2", "--mode", "core",
                       "--a", "[[1,0],[0,0]]", "--b", "[[0,0],[0,1]]")
    assert code == 0 and json.loads(out)["result"] == [[1, 0], [0, 1]]
    code, out, _ = run(capsys, "sum", "--ring", "mat:zmod:4:2", "--mode", "dual",
                       "--a", "[[3,1],[0,0]]", "--b", "[[0,0],[1,1]]")
    assert code == 2 and "ab=0" in json.loads(out)["failed"]


@pytest.mark.parametrize("argv", [
    ["compute", "--ring", "zmod:8", "--kind", "core"],
    ["compute", "--ring", "zmod:1", "--kind", "core", "--element", "0"],
    ["compute", "--ring", "zmod:8", "--kind", "core", "--element", "[1"],
    ["verify", "--ring", "zmod:8", "--certificate", "/nonexistent/cert.json"],
    ["compute", "--ring", "mat:rat:2", "--kind", "group", "--element", "[[0.5,0],[0,0]]"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_argparse_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--kind", "bogus"])
    assert exc.value.code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ginv", "compute", "--ring", "zmod:8",
                           "--kind", "core", "--element", "4"], capture_output=True, text=True)
    assert proc.returncode == 2
