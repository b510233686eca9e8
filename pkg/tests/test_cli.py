import hashlib
import json
import subprocess
import sys

import pytest

from satlab.cli import main
from satlab.constructions import c6_builder11, petersen
from satlab.graph import from_graph6, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def petersen_file(tmp_path):
    p = tmp_path / "pet.g6"
    p.write_text(to_graph6(petersen()) + "\n")
    return str(p)


def test_construct_and_record(capsys):
    code, out, err = run(capsys, "construct", "--family", "EhmJoin", "--param", "n=7", "--param", "s=4")
    assert code == 0
    g = from_graph6(out.strip())
    assert (g.n, g.num_edges()) == (7, 11)
    rec = json.loads(err.strip().splitlines()[-1])
    assert rec["subcommand"] == "construct"
    assert rec["stdout_sha256"] == hashlib.sha256(out.encode()).hexdigest()


def test_construct_named_json(capsys):
    code, out, _ = run(capsys, "--no-record", "construct", "--named", "coxeter", "--out", "json")
    data = json.loads(out)
    assert code == 0 and data["n"] == 28 and data["edges"] == 42


def test_count(capsys, petersen_file):
    code, out, _ = run(capsys, "--no-record", "count", "--pattern", "C5", "--input", petersen_file, "--json")
    assert code == 0 and json.loads(out)["copies"] == 12


def test_verify_and_certificate(capsys, petersen_file, tmp_path):
    cert = tmp_path / "cert.json"
    code, out, _ = run(capsys, "--no-record", "verify", "--target", "C4", "--input", petersen_file, "--cert", str(cert))
    assert code == 0 and json.loads(out) == {"saturated": True, "target": "C4", "witnesses": 30}
    code, out, _ = run(capsys, "--no-record", "verify-cert", "--input", petersen_file, "--cert", str(cert))
    assert code == 0 and json.loads(out)["valid"]
    code, out, _ = run(capsys, "--no-record", "verify", "--target", "C5", "--input", petersen_file)
    assert code == 1 and not json.loads(out)["saturated"]


def test_oracle(capsys):
    code, out, _ = run(capsys, "--no-record", "--deterministic", "oracle", "--n", "7", "--h", "K3", "--f", "K4")
    data = json.loads(out)
    assert code == 0 and data["minimum"] == 5 and "elapsed" not in data
    code, out, _ = run(capsys, "--no-record", "oracle", "--n", "8", "--h", "K3", "--f", "K4", "--max-nodes", "20")
    assert code == 3 and json.loads(out)["status"] == "partial"


def test_search(capsys):
    code, out, _ = run(capsys, "--no-record", "search", "--mode", "hfree-saturated", "--n", "10", "--h", "K3", "--f", "C4")
    assert code == 0 and json.loads(out)["status"] == "found"
    code, out, _ = run(capsys, "--no-record", "search", "--mode", "hfree-saturated", "--n", "7", "--h", "K3", "--f", "C4")
    assert code == 1 and json.loads(out)["status"] == "none"
    code, out, _ = run(capsys, "--no-record", "search", "--mode", "builder", "--k", "7", "--h", "C4",
                       "--n-min", "8", "--n-max", "12", "--max-seconds", "120")
    assert code == 0 and json.loads(out)["builders"]


def test_builder_commands(capsys, tmp_path):
    b = tmp_path / "b.g6"
    b.write_text(to_graph6(c6_builder11()) + "\n")
    code, out, _ = run(capsys, "--no-record", "builder", "verify", "--input", str(b), "--v", "5", "--k", "6")
    assert code == 0 and json.loads(out)["builder"]
    code, out, _ = run(capsys, "--no-record", "builder", "glue", "--input", str(b), "--v", "5", "--k", "6", "--m1", "2")
    assert code == 0 and from_graph6(out.strip()).n == 21
    code, out, _ = run(capsys, "--no-record", "builder", "coverage", "--a", "11", "--b", "12")
    assert code == 0 and json.loads(out)["threshold"] == 111


def test_bounds(capsys):
    code, out, _ = run(capsys, "--no-record", "bounds", "--case", "QuadLB", "--param", "n=10", "--param", "H=C4",
                       "--param", "s=4")
    assert code == 0 and json.loads(out)["lower"] == "35/3"
    code, out, _ = run(capsys, "--no-record", "bounds", "--table", "--n", "10")
    assert code == 0 and len(out.strip().splitlines()) == 16


@pytest.mark.parametrize("argv", [
    ["count", "--pattern", "X9", "--input", "-"],
    ["bounds", "--case", "CrKs", "--param", "n=10", "--param", "r=9", "--param", "s=5"],
    ["construct", "--family", "G4k", "--param", "k=1"],
    ["builder", "coverage", "--a", "3"],
    ["verify", "--target", "K3", "--input", "/nonexistent.g6"],
])
def test_domain_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "satlab: error:" in err


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--out", "xml"])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "satlab.cli", "--no-record", "builder", "coverage", "--a", "2",
                           "--b", "4", "--limit", "20"], capture_output=True, text=True)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["threshold"] is None
