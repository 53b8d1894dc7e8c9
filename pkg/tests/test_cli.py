import json
import subprocess
import sys

import pytest

from rackalg.cli import main
from rackalg.extensions import tetrahedron_beta
from rackalg.racks import is_indecomposable, Rack

from conftest import named


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_rack_check_and_build(capsys, tmp_path):
    code, out = run(capsys, "rack", "check", "--rack", "tetrahedron")
    assert code == 0 and out == {"kind": "CrossedSet", "size": 4}
    code, out = run(capsys, "rack", "build", "--cyclic", "5", "2")
    assert code == 0
    path = tmp_path / "z5.json"
    path.write_text(json.dumps(out))
    code, out = run(capsys, "rack", "iso", "--rack", str(path), "--other", "z5_2")
    assert code == 0 and out["isomorphic"] is True


def test_rack_check_rejects_non_rack(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"table": [[1, 1], [0, 0]]}))
    code, out = run(capsys, "rack", "check", "--rack", str(path))
    assert code == 1 and out["valid"] is False and out["witness"] == [0, 0, 0]


def test_invariants(capsys):
    code, out = run(capsys, "rack", "invariants", "--rack", "cube_faces")
    assert code == 0 and out["inner_group_order"] == 24 and out["simple"] is False


def test_ext_build_and_recognize(capsys, tmp_path):
    X = named("tetrahedron")
    beta = tetrahedron_beta(X)
    path = tmp_path / "beta.json"
    path.write_text(json.dumps({"beta": [[list(p.images) for p in row] for row in beta.beta]}))
    code, out = run(capsys, "ext", "build", "--rack", "tetrahedron", "--cocycle", str(path))
    assert code == 0
    E = Rack.from_dict(out)
    assert E.size == 8 and is_indecomposable(E)
    code, out = run(capsys, "ext", "recognize", "--rack", "cube_faces", "--base", "z3", "--map", "[0,1,2,1,2,0]")
    assert code == 0 and out["size"] == 2


def test_ext_build_invalid_cocycle(capsys, tmp_path):
    path = tmp_path / "alpha.json"
    path.write_text(json.dumps({"size": 2, "alpha": [[[[0, 0], [0, 0]]] * 3] * 3}))
    code, out = run(capsys, "ext", "build", "--rack", "z3", "--cocycle", str(path))
    assert code == 1 and out["valid"] is False


def test_homology(capsys):
    code, out = run(capsys, "coh", "homology", "--rack", "tetrahedron", "--degree", "2")
    assert code == 0 and (out["free_rank"], out["torsion"]) == (1, [2])
    code, out = run(capsys, "coh", "nonabelian", "--rack", "tetrahedron", "--symmetric", "2")
    assert code == 0 and out["classes"] == 4


def test_braided_verify(capsys):
    code, out = run(capsys, "braided", "verify", "--rack", "tetrahedron", "--cocycle", "1")
    assert code == 0 and out["braid_ok"] and out["cocycle_ok"]


def test_nichols_hilbert_and_budget(capsys):
    code, out = run(capsys, "nichols", "hilbert", "--rack", "tetrahedron")
    assert code == 0 and out["total"] == 72
    code, out = run(capsys, "nichols", "hilbert", "--rack", "z5_2", "--max-degree", "3")
    assert code == 3 and out["budget_exhausted"] and out["partial"]["dims"] == [1, 5, 15, 35]


def test_nichols_relations_and_integral(capsys):
    code, out = run(capsys, "nichols", "relations", "--rack", "tetrahedron", "--relations", "tetrahedron")
    assert code == 0
    code, out = run(capsys, "nichols", "integral", "--rack", "transpositions", "--word", "abacabacdedf",
                    "--chain", "abacabacdedf")
    assert code == 0 and out["value"] == 1


def test_fourier(capsys):
    code, out = run(capsys, "fourier", "map", "--example", "z3")
    assert code == 0 and out["conjugation_ok"] and len(out["labels"]) == 6
    code, out = run(capsys, "fourier", "intertwine", "--case", "ej-dos-1", "--n", "3")
    assert code == 0 and out["ok"]
    code, out = run(capsys, "fourier", "intertwine", "--case", "ej-dos-2", "--n", "4", "--r-mode", "literal")
    assert code == 1 and out["failure"] == [4, [0, 0, 0, 5], 2]
    code, out = run(capsys, "fourier", "intertwine", "--case", "ej-dos-1", "--n", "7")
    assert code == 3


def test_simple_commands(capsys):
    code, out = run(capsys, "simple", "count-affine", "--p", "2", "--t", "3")
    assert code == 0 and out["count"] == 2
    code, out = run(capsys, "simple", "enumerate", "--n", "3", "--kind", "CrossedSet")
    assert code == 0 and out["count"] == 2
    code, out = run(capsys, "simple", "test", "--rack", "cube_faces")
    assert code == 0 and out["simple"] is False and out["quotient"]["size"] == 3
    code, _ = run(capsys, "simple", "enumerate", "--n", "7")
    assert code == 3


def test_input_errors(capsys):
    code, _ = run(capsys, "rack", "check", "--rack", "no_such_rack")
    assert code == 2
    code, _ = run(capsys, "simple", "count-affine", "--p", "4", "--t", "1")
    assert code == 2


def test_text_format(capsys):
    code, out = run(capsys, "--format", "text", "rack", "check", "--rack", "z3")
    assert code == 0 and "kind: CrossedSet" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rackalg", "rack", "check", "--rack", "z3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["size"] == 3
