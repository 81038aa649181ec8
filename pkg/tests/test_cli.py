import json
import subprocess
import sys
from pathlib import Path

import pytest

from gwzero.cli import main
from gwzero.manifest import dumps, load_manifest, manifold_to_dict

from conftest import DATA

MANIFEST = str(DATA / "examples.json")
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", MANIFEST, "K3", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["b2_plus"] == 3 and d["sigma"] == -16 and d["parity"] == "even"
    code, out, _ = run(capsys, "info", MANIFEST, "CP2#8", "--json")
    assert json.loads(out)["b2_plus"] == 1
    code, out, _ = run(capsys, "info", MANIFEST, "K3E")
    assert "b2+ = 3" in out


def test_info_errors(capsys, tmp_path):
    assert run(capsys, "info", MANIFEST, "nope")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"version": 1, "manifolds": [{"name": "B", "form": [[1, 2], [3, 1]], "c1": [1, 1]}]}))
    assert run(capsys, "info", str(bad), "B")[0] == 2
    bad.write_text("{not json")
    assert run(capsys, "info", str(bad), "B")[0] == 2
    bad.write_text(json.dumps({"version": 9}))
    assert run(capsys, "info", str(bad), "B")[0] == 2


def test_eval_example_queries(capsys):
    code, out, _ = run(capsys, "eval", MANIFEST, "--json", "--oracle")
    rows = {r["name"]: r for r in json.loads(out)}
    assert code == 0
    assert rows["exceptional-k0"]["value"] == 1
    assert rows["exceptional-k5"]["value"] == -1
    assert rows["stabilized-one-point"]["value"] == -1
    assert rows["stabilized-one-point"]["moduli_dim"] == 4
    assert rows["stabilized-one-point"]["agreement"] == "AGREE"
    assert rows["stabilized-k3"]["value"] == -1
    assert rows["stabilized-k0"]["value"] == 0
    assert "not_determined" in rows["fiber-class"]
    assert "not_determined" in rows["line-through-two-points"]


def test_eval_trace_text(capsys):
    code, out, _ = run(capsys, "eval", MANIFEST, "--query", "stabilized-k3", "--trace", "--oracle")
    assert code == 0
    assert "GW = -1" in out and "AGREE" in out
    assert "divisor axiom" in out


def test_eval_not_determined_exit_zero(capsys):
    code, out, _ = run(capsys, "eval", MANIFEST, "--query", "fiber-class")
    assert code == 0 and "NotDetermined" in out


def test_eval_malformed_query(capsys, tmp_path):
    m = json.loads(Path(MANIFEST).read_text())
    m["queries"] = [{"space": "K3E", "class": [1, 2], "insertions": []}]
    p = tmp_path / "m.json"
    p.write_text(json.dumps(m))
    assert run(capsys, "eval", str(p))[0] == 2
    m["queries"] = [{"space": "Nowhere", "class": [1], "insertions": []}]
    p.write_text(json.dumps(m))
    assert run(capsys, "eval", str(p))[0] == 2


def test_eval_disagreement_exit_3(capsys, monkeypatch):
    from gwzero import cli
    from gwzero.gw import GWValue

    monkeypatch.setattr(cli, "reduce_via_axioms", lambda q: GWValue.integer(12345))
    assert run(capsys, "eval", MANIFEST, "--oracle", "--query", "exceptional-k0")[0] == 3


def test_blowup_round_trip(capsys, tmp_path):
    out_file = tmp_path / "b.json"
    code, _, _ = run(capsys, "blowup", MANIFEST, "K3E", "F", "--out", str(out_file), "--new-name", "K3EF")
    assert code == 0
    m = load_manifest(out_file)
    x = m.manifold("K3EF")
    assert x.rank == 24 and x.c1[-1] == 1 and len(x.exceptional_classes) == 2
    # composes
    code, out, _ = run(capsys, "blowup", str(out_file), "K3EF", "G")
    y = load_manifest(json.loads(out)).manifold("K3EF#-CP2")
    assert y.rank == 25
    assert run(capsys, "blowup", MANIFEST, "K3E", "E")[0] == 2


def test_blowup_rank_22(capsys):
    code, out, _ = run(capsys, "blowup", MANIFEST, "K3", "E")
    d = json.loads(out)["manifolds"][0]
    assert len(d["form"]) == 23 and d["c1"][-1] == 1


def test_distinguish(capsys):
    code, out, _ = run(capsys, "distinguish", MANIFEST, "K3E", "M", "--json")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "Distinguished"
    assert (d["witness"]["value"], d["witness"]["minimal_value"]) == (-1, 0)
    _, out, _ = run(capsys, "distinguish", MANIFEST, "M", "M2", "--json")
    assert json.loads(out)["verdict"] == "Indistinguishable"
    _, out, _ = run(capsys, "distinguish", MANIFEST, "CP2#8", "Barlow")
    assert "HypothesesNotMet" in out
    assert run(capsys, "distinguish", MANIFEST, "K3E", "nope")[0] == 2


def test_oracle_check(capsys, monkeypatch):
    code, out, _ = run(capsys, "oracle-check", "-n", "200", "--seed", "5", "--json")
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["seed"] == 5 and d["disagreements"] == 0
    monkeypatch.setenv("GWZERO_SEED", "77")
    _, out, _ = run(capsys, "oracle-check", "-n", "10", "--json")
    assert json.loads(out)["seed"] == 77


@pytest.mark.parametrize("argv, golden", [
    (["eval", MANIFEST, "--json", "--oracle"], "eval_examples.json"),
    (["distinguish", MANIFEST, "K3E", "M", "--json"], "distinguish_k3e_m.json"),
])
def test_golden(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_canonical_json_key_order():
    d = {"b": 1, "a": {"d": 2, "c": 3}}
    assert dumps(d) == dumps(dict(reversed(list(d.items()))))


def test_manifold_serialization_round_trip(x):
    d = manifold_to_dict(x)
    m = load_manifest({"version": 1, "manifolds": [d]})
    assert m.manifold(x.name) == x


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "gwzero.cli", "info", MANIFEST, "K3"], capture_output=True, text=True)
    assert r.returncode == 0 and "b2+ = 3" in r.stdout
