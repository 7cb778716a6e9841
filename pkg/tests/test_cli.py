import json
import subprocess
import sys
from pathlib import Path


from pathmodel import config
from pathmodel.cli import EXIT_BOUND, EXIT_FALSE, EXIT_OK, EXIT_USAGE, main

FIXTURE = str(Path(__file__).resolve().parent.parent / "fixtures" / "a2_hecke_not_ls.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_root_info(capsys):
    code, out, _ = run(capsys, "root-info", "G2")
    assert code == EXIT_OK
    assert "θ = 3α1 + 2α2" in out and "k_R             6" in out
    code, out, _ = run(capsys, "--json", "root-info", "E8")
    obj = json.loads(out)
    assert obj["k_R"] == 60 and obj["weyl_order"] == 696729600 and obj["positive_roots"] == 120


def test_dim_and_global_flag_placement(capsys):
    assert run(capsys, "dim", "G2", "0,1")[1].strip() == "7"
    code, out, _ = run(capsys, "dim", "B2", "1,0", "--json")
    assert json.loads(out) == {"lambda": ["1", "0"], "dim": 4}


def test_decompose(capsys, tmp_path):
    code, out, _ = run(capsys, "decompose", "A2", "1,1", "1,1", "--both", "--csv", str(tmp_path / "t.csv"))
    assert code == EXIT_OK and "equal: True" in out
    assert "(1,1)  x2" in out
    lines = (tmp_path / "t.csv").read_text().splitlines()
    assert lines[0] == "method,gamma,mult" and len(lines) == 1 + 2 * 5
    code, out, _ = run(capsys, "--json", "decompose", "B2", "1,0", "1,0")
    assert json.loads(out)["oracle"] == [
        {"gamma": [0, 0], "mult": 1},
        {"gamma": [0, 1], "mult": 1},
        {"gamma": [2, 0], "mult": 1},
    ]


def test_ls_paths(capsys):
    code, out, _ = run(capsys, "ls-paths", "A2", "1,0")
    assert code == EXIT_OK and out.startswith("3 LS paths")
    assert run(capsys, "ls-paths", "A2", "3,3", "--bound", "10")[0] == EXIT_BOUND


def test_check_path(capsys):
    assert run(capsys, "check-path", FIXTURE, "--hecke")[0] == EXIT_OK
    code, out, _ = run(capsys, "check-path", FIXTURE, "--ls")
    assert code == EXIT_FALSE and "W-maximal" in out
    assert run(capsys, "check-path", FIXTURE, "--chain")[0] == EXIT_OK
    assert run(capsys, "check-path", FIXTURE, "--gen-hecke")[0] == EXIT_FALSE
    code, out, _ = run(capsys, "--json", "check-path", FIXTURE)
    obj = json.loads(out)
    assert obj["check"] == "hecke" and obj["verdict"] is True and obj["witnesses"]


def test_check_path_generalized_ls(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"system": "A2", "segments": [{"dir": ["2", "0"], "dur": "1/2"}, {"dir": ["0", "2"], "dur": "1/2"}]}))
    assert run(capsys, "check-path", str(f), "--gen-ls", "--blocks", "1,0;0,1")[0] == EXIT_OK
    assert run(capsys, "check-path", str(f), "--gen-ls", "--blocks", "0,1;1,0")[0] == EXIT_FALSE


def test_hecke_exists(capsys):
    code, out, _ = run(capsys, "hecke-exists", "A2", "1,1", "1,1", "1,1")
    assert code == EXIT_OK and "complete: True" in out and "witness:" in out
    code, out, _ = run(capsys, "--json", "hecke-exists", "A2", "0,0", "1,0", "0,1")
    obj = json.loads(out)
    assert code == EXIT_FALSE and obj["exists"] is False and obj["complete"] is True
    code, out, _ = run(capsys, "hecke-exists", "A2", "0,0", "1,0", "0,1", "--denom-bound", "2")
    assert "complete: False" in out


def test_dilation_sweep(capsys):
    code, out, _ = run(capsys, "dilation-sweep", "B2", "1,0", "0,1", "--coord-bound", "1")
    assert code == EXIT_OK and "0 counterexamples (k_R = 2)" in out


def test_saturation_scan(capsys, tmp_path):
    code, out, _ = run(capsys, "saturation-scan", "A2", "--coord-bound", "1", "--n-max", "2", "--csv", str(tmp_path / "s.csv"))
    assert code == EXIT_OK and "violations at k=1: 0" in out and "theorem-backed" in out
    assert (tmp_path / "s.csv").exists()
    code, out, _ = run(capsys, "--json", "saturation-scan", "B2", "--coord-bound", "1", "--n-max", "2", "--k", "1")
    assert code == EXIT_FALSE and json.loads(out)["violations"]
    # default k for G2 is 36, which trips the scaling guard
    code, _, err = run(capsys, "saturation-scan", "G2", "--coord-bound", "1")
    assert code == EXIT_BOUND and "extended" in err


def test_errors_and_bounds(capsys):
    before = config.weyl_order_bound()
    e6 = ["decompose", "E6", "1,0,0,0,0,0", "0,0,0,0,0,1"]
    code, _, err = run(capsys, *e6)
    assert code == EXIT_BOUND and err.startswith("refused")
    code, out, _ = run(capsys, "--weyl-order-bound", "60000", *e6)
    assert code == EXIT_OK and "(1,0,0,0,0,1)  x1" in out
    # operators never enumerate the Weyl group, so listing paths is not refused
    code, out, _ = run(capsys, "ls-paths", "E6", "1,0,0,0,0,0")
    assert code == EXIT_OK and out.startswith("27 LS paths")
    assert config.weyl_order_bound() == before
    assert run(capsys, "dim", "A2", "1,0,0")[0] == EXIT_USAGE
    assert run(capsys, "dim", "A2", "-1,0")[0] == EXIT_USAGE
    assert run(capsys, "dim", "Q7", "1")[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "check-path", "/nonexistent.json")[0] == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pathmodel", "dim", "A2", "1,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "8"
