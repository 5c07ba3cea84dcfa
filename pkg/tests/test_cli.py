import json
import subprocess
import sys

import pytest

from lietori.cli import main
from lietori.lie import sl2
from lietori.lie.simple import table_of

TENSOR = {"construction": "Tensor", "g": {"type": "A", "rank": 1}, "n": 1}


def _corrupted_table():
    t = table_of(sl2())
    for row in t["brackets"]:
        if {row["i"], row["j"]} == {0, 1}:
            for term in row["terms"]:
                term["c"] = str(-int(term["c"]))
    return t


@pytest.fixture
def spec(tmp_path):
    def write(obj, name="spec.json"):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_torus(spec, capsys):
    code, out, _ = run(capsys, "build", "--spec", spec({"family": "Laurent", "rank": 2}), "--window", "1")
    info = json.loads(out)
    assert code == 0 and info["window_keys"] == 9 and info["variety"] == "associative"


def test_build_lie_and_eala(spec, capsys):
    code, out, _ = run(capsys, "build", "--spec", spec(TENSOR), "--window", "1")
    assert code == 0 and json.loads(out)["window_atoms"] == 9
    code, out, _ = run(capsys, "build", "--spec", spec({"lie": TENSOR, "D": {"kind": "degree_only"}}), "--window", "1")
    assert code == 0 and json.loads(out)["window_atoms"] > 9


def test_verify_torus_exit_codes(spec, capsys):
    code, out, _ = run(capsys, "verify", "--suite", "torus", "--spec", spec({"family": "Octonion", "rank": 3}), "--window", "1")
    assert code == 0 and all(c["status"] == "pass" for c in json.loads(out)["checks"])
    code, out, _ = run(capsys, "verify", "--suite", "torus", "--spec", spec({"family": "Albert"}), "--window", "1", "--samples", "20")
    failed = [c["name"] for c in json.loads(out)["checks"] if c["status"] == "fail"]
    assert code == 1 and failed == ["pre_chevalley"]


def test_bad_quantum_matrix_exits_2(spec, capsys):
    bad = {"family": "Quantum", "rank": 2, "conductor": 4, "q": [["1", "z"], ["z", "1"]]}
    code, out, err = run(capsys, "verify", "--suite", "torus", "--spec", spec(bad))
    assert code == 2 and "InvalidQuantumMatrix" in err and out == ""


def test_bad_files_exit_2(spec, capsys, tmp_path):
    assert run(capsys, "build", "--spec", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "build", "--spec", spec("{not json"))[0] == 2
    assert run(capsys, "build", "--spec", spec({"construction": "Nope"}))[0] == 2
    assert run(capsys, "build", "--spec", spec(TENSOR), "--window", "-1")[0] == 2


def test_verify_lietorus_and_involution(spec, capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lietorus", "--spec", spec(TENSOR), "--window", "1")
    names = [c["name"] for c in json.loads(out)["checks"]]
    assert code == 0 and "jacobi" in names and "form.invariant" in names
    code, _, _ = run(capsys, "verify", "--suite", "involution", "--spec", spec(TENSOR), "--window", "1")
    assert code == 0


def test_negative_controls_exit_1(spec, capsys):
    corrupt = {"construction": "Tensor", "n": 1, "g": {"table": _corrupted_table(), "validate": False}}
    code, out, _ = run(capsys, "verify", "--suite", "lietorus", "--spec", spec(corrupt), "--window", "1")
    assert code == 1 and any(c["witness"] for c in json.loads(out)["checks"] if c["status"] == "fail")
    validated = {"construction": "Tensor", "n": 1, "g": {"table": _corrupted_table()}}
    assert run(capsys, "verify", "--suite", "lietorus", "--spec", spec(validated))[0] == 2
    ident = dict(TENSOR, involution={"kind": "identity"})
    assert run(capsys, "verify", "--suite", "involution", "--spec", spec(ident), "--window", "1")[0] == 1
    kappa = {"kind": "table", "entries": [{"d1": [[0, 0], 0], "d2": [[0, 0], 0], "value": [{"mu": [0, 0], "v": ["1", "0"]}]}]}
    kbad = {"lie": dict(TENSOR, n=2), "D": {"kind": "full_scder"}, "kappa": kappa}
    code, out, _ = run(capsys, "verify", "--suite", "eala", "--spec", spec(kbad), "--window", "1")
    assert code == 1 and "kappa_alternating" in [c["name"] for c in json.loads(out)["checks"] if c["status"] == "fail"]


def test_verify_eala_and_lift(spec, capsys):
    e = spec({"lie": TENSOR, "D": {"kind": "degree_only"}})
    code, out, _ = run(capsys, "verify", "--suite", "eala", "--spec", e, "--window", "1")
    assert code == 0 and {"A1", "A2", "A3", "A5", "A6"} <= {c["name"] for c in json.loads(out)["checks"]}
    code, out, _ = run(capsys, "lift", "--spec", e, "--window", "1")
    d = json.loads(out)
    assert code == 0 and d["D_invariant"] and d["pair_invariant"] and d["codomain_is_E"]


def test_export_simple_and_tensor(spec, capsys):
    code, out, _ = run(capsys, "export", "--spec", spec({"construction": "Simple", "g": {"type": "A", "rank": 1}}))
    d = json.loads(out)
    assert code == 0 and len(d["atoms"]) == 3 and len(d["brackets"]) == 3
    code, out, _ = run(capsys, "export", "--spec", spec(TENSOR), "--window", "1")
    d = json.loads(out)
    assert sum(a["in_window"] for a in d["atoms"]) == 9
    ids = {a["id"] for a in d["atoms"]}
    assert all(r["i"] < r["j"] and {t["k"] for t in r["terms"]} <= ids for r in d["brackets"])


def test_export_is_byte_identical(spec, tmp_path, capsys):
    s = spec(TENSOR)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "export", "--spec", s, "--out", str(a))[0] == 0
    assert run(capsys, "export", "--spec", s, "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_text_format(spec, capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lietorus", "--spec", spec(TENSOR), "--window", "1", "--format", "text")
    assert code == 0 and "jacobi" in out and not out.lstrip().startswith("{")


def test_module_entry_point(spec):
    p = subprocess.run([sys.executable, "-m", "lietori", "build", "--spec", spec(TENSOR), "--window", "0"], capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["window_atoms"] == 3
