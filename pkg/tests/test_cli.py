import json
import subprocess
import sys

import pytest

from k3clifford.certificates import SCHEMA_VERSION, CertificateDocument
from k3clifford.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--genus", "7", "--cliff", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["results"]["min_cliff"] == 2
    assert doc["surface"] == {"genus": 7, "d": 4, "gram": [[12, 4], [4, 0]]}
    assert doc["results"]["witnesses"] == [[0, 1], [1, -1]]
    assert doc["checks"]["oracle_agrees"] is True
    assert doc["assumptions"]


def test_verify_out_of_range(capsys):
    code, out, err = run(capsys, "verify", "--genus", "10", "--gonality", "7")
    assert code == 2
    assert out == ""
    assert "= 6" in err


def test_verify_genus_three(capsys):
    code, out, _ = run(capsys, "verify", "--genus", "3", "--cliff", "0", "--json")
    assert code == 0
    assert json.loads(out)["convention_branch"] == "hyperelliptic-g3"


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--genus", "9", "--gonality", "4")
    assert code == 0
    assert "Cliff C = 2, gon C = 4" in out


def test_verify_needs_exactly_one_target(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--genus", "7", "--cliff", "2", "--gonality", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--genus", "7"])
    assert exc.value.code == 2


def test_unknown_flag_is_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--genus", "7", "--cliff", "2", "--verbose"])
    assert exc.value.code == 2


def test_json_roundtrip_and_stability(capsys):
    _, a, _ = run(capsys, "verify", "--genus", "12", "--cliff", "3", "--json")
    _, b, _ = run(capsys, "verify", "--genus", "12", "--cliff", "3", "--json")
    assert a == b
    doc = CertificateDocument.from_json(a)
    assert doc.to_json() == a.rstrip("\n")
    assert CertificateDocument.from_dict(json.loads(a)) == doc


def test_from_dict_rejects_other_schema():
    with pytest.raises(ValueError):
        CertificateDocument.from_dict({"schema_version": "0.9"})


def test_table_tsv(capsys):
    code, out, _ = run(capsys, "table", "--genus-min", "3", "--genus-max", "20", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t")[0] == "genus"
    assert all(len(line.split("\t")) == 11 for line in lines)
    assert all(line.endswith("true") for line in lines[1:])


def test_table_md(capsys):
    code, out, _ = run(capsys, "table", "--genus-min", "4", "--genus-max", "4", "--format", "md")
    assert code == 0
    assert len(out.splitlines()) == 2 + 4


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--genus-min", "3", "--genus-max", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_verified"] is True and len(doc["rows"]) == 14


def test_table_inverted(capsys):
    code, _, err = run(capsys, "table", "--genus-min", "5", "--genus-max", "3")
    assert code == 2 and "g_min <= g_max" in err


def test_inspect(capsys):
    code, out, _ = run(capsys, "inspect", "--genus", "7", "--degree", "4", "--class", "1,-1")
    assert code == 0
    assert "D^2 = 4" in out and "chi = 4" in out and "cliff_value = 2" in out

    code, out, _ = run(capsys, "inspect", "--genus", "5", "--degree", "3", "--class", "0,0")
    assert "chi = 2" in out and "h0 =1, h1 =0, h2 =1" in out

    code, out, _ = run(capsys, "inspect", "--genus", "6", "--degree", "3", "--class", "1,-2")
    assert "D^2 = -2" in out and "root class" in out


@pytest.mark.parametrize("cls", ["1", "a,b", "1,2,3"])
def test_inspect_malformed(capsys, cls):
    code, _, err = run(capsys, "inspect", "--genus", "7", "--degree", "4", "--class", cls)
    assert code == 2 and err


def test_bruteforce(capsys):
    code, out, _ = run(capsys, "bruteforce", "--genus", "9", "--degree", "4")
    assert code == 0
    assert "minimum: 2" in out and "survivors: (0,1), (1,-1)" in out


def test_bruteforce_small_bound(capsys):
    code, _, err = run(capsys, "bruteforce", "--genus", "7", "--degree", "4", "--bound", "1")
    assert code == 2 and "safe radius" in err


def test_bruteforce_genus_three(capsys):
    code, out, _ = run(capsys, "bruteforce", "--genus", "3", "--degree", "2")
    assert code == 0 and "minimum: 0" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "k3clifford", "verify", "--genus", "5", "--gonality", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "gon C = 3" in proc.stdout
