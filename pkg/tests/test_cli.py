import json
import os
import subprocess
import sys

import pytest

from comin.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_gr24(capsys):
    code, out, _ = run(capsys, "info", "--space", "Gr(2,4)", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert (rec["dim"], rec["index"], rec["r"]) == ("4", "4", "2")
    assert rec["vmrt"]["kind"] == "Segre" and rec["vmrt"]["params"] == ["1", "1"]
    code, out, _ = run(capsys, "info", "--root", "A,3,2")
    assert code == 0 and "Segre(P^1 x P^1)" in out


def test_delta(capsys):
    code, out, _ = run(capsys, "delta", "--space", "Gr(2,4)", "--i", "2", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["delta"] == "2" and rec["d_i"] == "2" and rec["basis_size"] == "6"
    code, out, err = run(capsys, "delta", "--space", "Gr(2,4)", "--i", "1")
    assert code == 2 and "d_1 = 1*(2+1) - 4 = -1 < 0" in err and out == ""


def test_input_errors(capsys):
    code, _, err = run(capsys, "info", "--space", "Sp(4)")
    assert code == 2 and "valid spaces" in err
    code, _, err = run(capsys, "lr", "--space", "Q(5)", "1", "1")
    assert code == 2
    code, _, _ = run(capsys, "bound", "--space", "E6", "--d", "0")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_lr_partition_and_bitstring(capsys):
    code, out, _ = run(capsys, "lr", "--space", "Gr(2,4)", "1", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and len(rec["product"]) == 2
    assert all(t["coefficient"] == "1" for t in rec["product"])
    code, out2, _ = run(capsys, "lr", "--space", "Gr(2,4)", "1110", "(1)", "--format", "json")
    assert json.loads(out2)["product"] == rec["product"]


def test_incidence_and_basis(capsys):
    code, out, _ = run(capsys, "incidence", "--space", "Gr(2,4)", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert {(e["sigma"], e["tau"], e["value"]) for e in rec["entries"]} == {("1111", "1110", "1"), ("1110", "1111", "1")}
    code, out, _ = run(capsys, "basis", "--space", "E6", "--format", "json")
    rec = json.loads(out)
    assert len(rec["classes"]) == 27 and rec["classes"][-1]["degree"] == "78"


def test_bound_json(capsys):
    code, out, _ = run(capsys, "bound", "--space", "Gr(2,4)", "--d", "1", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["case"] == "1"
    assert rec["components"]["smoothness_term"] == "2" and rec["components"]["index_term"] == "4"
    code, out, _ = run(capsys, "bound", "--space", "E6", "--d", "2", "--skip-delta", "--format", "json")
    rec = json.loads(out)
    assert rec["components"]["delta_term"] is None and rec["child"]["space"] == "OG(5)"


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--max-rank", "4", "--format", "json")
    ids = [s["id"] for s in json.loads(out)["spaces"]]
    assert code == 0 and "E7" in ids and "Gr(2,5)" in ids and "Gr(2,6)" not in ids


def _cli(args, cache_dir):
    env = dict(os.environ, COMIN_CACHE_DIR=str(cache_dir))
    return subprocess.run([sys.executable, "-m", "comin", *args], capture_output=True, env=env, check=True)


@pytest.mark.parametrize("args", [
    ["delta", "--space", "E6", "--i", "4"],
    ["bound", "--space", "OG(5)", "--d", "2", "--json"],
    ["incidence", "--space", "Gr(2,5)"],
    ["lr", "--space", "E7", "1" * 20 + "0" * 7, "1" * 26 + "0", "--format", "json"],
])
def test_cold_and_warm_cache_give_identical_bytes(tmp_path, args):
    cold = _cli(args, tmp_path)
    warm = _cli(args, tmp_path)
    off = _cli(args + ["--no-cache"], tmp_path / "unused")
    assert b"cache miss" in cold.stderr and b"cache hit" in warm.stderr
    assert cold.stdout == warm.stdout == off.stdout
    assert not (tmp_path / "unused").exists()


def test_corrupt_cache_entry_recomputed(tmp_path):
    args = ["delta", "--space", "Gr(2,5)", "--i", "3"]
    good = _cli(args, tmp_path).stdout
    (entry,) = tmp_path.glob("*.json")
    data = json.loads(entry.read_text())
    data["payload"]["delta"] = "999"
    entry.write_text(json.dumps(data))
    again = _cli(args, tmp_path)
    assert again.stdout == good
    assert b"checksum" in again.stderr
