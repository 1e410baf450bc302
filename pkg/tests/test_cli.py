import json

import pytest

from bridge_census import tables
from bridge_census.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "2,-4,2,2")
    assert code == 0
    assert "crossing_number: 8" in out and "braid_index: 4" in out


def test_invariants_negative_first_and_json(capsys):
    code, out, _ = run(capsys, "invariants", "-2,2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["crossing_number"], doc["braid_index"], doc["orbit_size"]) == (3, 2, 2)
    assert doc["schubert_p"] == 3
    code, out, _ = run(capsys, "invariants", "--format", "json", "-2,-4")
    assert code == 0 and json.loads(out)["crossing_number"] == 6


@pytest.mark.parametrize("bad", ["2,0,2,2", "2,3", "2,2,2", "x"])
def test_invariants_rejects(capsys, bad):
    code, _, err = run(capsys, "invariants", bad)
    assert code == 2 and err.startswith("bridge-census: error:")


def test_table_e_csv_row(capsys):
    code, out, _ = run(capsys, "table", "--quantity", "e", "--min", "3", "--max", "12", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "c,2,3,4,5,6,7,total"
    assert "12,0,18,112,280,240,32,682" in lines


def test_table_round_trip(capsys):
    want = tables.build_table("ep", 3, 15)
    _, out, _ = run(capsys, "table", "--quantity", "ep", "--max", "15", "--format", "csv")
    assert tables.parse_csv(out, quantity="ep") == want
    _, out, _ = run(capsys, "table", "--quantity", "ep", "--max", "15", "--format", "json")
    assert tables.parse_json(out) == want


def test_k_table_text_snapshot(capsys, data_dir):
    _, out, _ = run(capsys, "table", "--quantity", "k", "--max", "20")
    assert out == (data_dir / "k_table.txt").read_text()
    got = tables.parse_text(out)
    want = tables.parse_csv((data_dir / "golden_k.csv").read_text(), quantity="k")
    assert got.rows == want.rows


def test_table_bad_range(capsys):
    code, _, err = run(capsys, "table", "--min", "9", "--max", "4")
    assert code == 2 and "error" in err


def test_stats(capsys):
    _, out, _ = run(capsys, "stats", "--max", "8", "--format", "json")
    rows = {r["c"]: r for r in json.loads(out)}
    assert (rows[3]["mean"], rows[3]["variance"], rows[3]["mode"], rows[3]["median"]) == ("2", "0", 2, "2")
    assert (rows[4]["mean"], rows[4]["variance"]) == ("3", "0")
    assert (rows[8]["mean"], rows[8]["variance"], rows[8]["mode"], rows[8]["median"]) == ("4", "1/2", 4, "4")
    assert rows[8]["knots"] == 12


def test_stats_csv_has_all_columns(capsys):
    _, out, _ = run(capsys, "stats", "--min", "10", "--max", "12", "--format", "csv")
    assert out.splitlines()[0] == ",".join(tables.STAT_COLUMNS)


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--c", "6", "--b", "4")
    assert code == 0
    assert out.split() == ["-4,-2", "-2,-4", "2,4", "4,2"]
    _, out, _ = run(capsys, "enumerate", "--c", "7", "--dedupe")
    assert len(out.split()) == 7


def test_enumerate_cap(capsys):
    code, out, err = run(capsys, "enumerate", "--c", "7", "--cap", "5")
    assert code == 2 and len(out.split()) == 5 and "error" in err


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--c", "7")
    doc = json.loads(out)
    assert code == 0 and doc["k_total"] == 7 and doc["e"] == 22


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--enum-max", "10", "--theorem-max", "40", "--recursion-max", "40")
    assert code == 0 and out.count("[PASS]") == 3
    assert run(capsys, "verify", "--theorem-max", "7")[0] == 2
    assert run(capsys, "verify", "--enum-max", "99")[0] == 2


def test_verify_json(capsys):
    _, out, _ = run(capsys, "verify", "--enum-max", "6", "--theorem-max", "10",
                    "--recursion-max", "10", "--format", "json")
    assert [r["suite"] for r in json.loads(out)] == ["oracle", "recursion", "theorems"]


def test_conjecture(capsys):
    code, out, err = run(capsys, "conjecture", "--max", "250")
    assert code == 0 and "HOLDS" in out
    assert err.splitlines() == ["checked c <= 100", "checked c <= 200", "checked c <= 250"]
    code, out, err = run(capsys, "conjecture", "--max", "3", "--quiet", "--format", "json")
    assert code == 0 and err == "" and json.loads(out)["violations"] == []
    assert run(capsys, "conjecture", "--max", "2")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "enumerate", "--c", "2")[0] == 2
