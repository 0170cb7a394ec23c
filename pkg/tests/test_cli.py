import csv
import io
import json

import pytest

from ru4.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "--n", "7")
    assert code == 0
    for lift in ("[3,1]", "[3,1,2,1]", "[3,2,3,1]"):
        assert lift in out


def test_factor_json(capsys):
    code, out, _ = run(capsys, "factor", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert data["z4_lifts"] == ["3,1", "1,1,1"]


def test_even_length(capsys):
    code, _, err = run(capsys, "factor", "--n", "2")
    assert code == 2 and "even" in err


def test_code_info(capsys):
    code, out, _ = run(capsys, "code", "info", "--n", "3", "--gens", "2 ; 0:3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["log2_size"], data["d_lee"], data["paper_rank"]) == (9, 2, 3)


def test_code_info_text(capsys):
    code, out, _ = run(capsys, "code", "info", "--n", "3", "--gens", "2 ; 0:3")
    assert code == 0 and "rank n - deg f3     3" in out


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "code", "info", "--n", "7", "--gens", "3,1,2,1 ; 0:2", "--format", "json")
    first = json.loads(out)
    _, out, _ = run(capsys, "code", "info", "--n", "7", "--gens", first["generators"], "--format", "json")
    assert json.loads(out) == first


def test_bad_generators(capsys):
    code, _, err = run(capsys, "code", "info", "--n", "3", "--gens", "5:9")
    assert code == 2 and "error" in err


def test_gray_dump(capsys):
    code, out, _ = run(capsys, "code", "gray", "--n", "1", "--gens", "0:2", "--dump-words")
    assert code == 0 and out.split() == ["0000", "1111"]


def test_gray_params(capsys):
    code, out, _ = run(capsys, "code", "gray", "--n", "7", "--gens", "0:1", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(out)))
    assert (row["image_length"], row["image_log2_size"], row["image_d"], row["qc4"]) == ("28", "14", "2", "true")


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--which", "1")
    assert code == 0 and "11/11 instances match, 0 mismatches" in out


def test_tables_bad_choice(capsys):
    code, _, _ = run(capsys, "tables", "--which", "3")
    assert code == 2


def test_enumerate_formats_agree(capsys):
    _, csv_out, _ = run(capsys, "codes", "enumerate", "--n", "3", "--format", "csv")
    _, json_out, _ = run(capsys, "codes", "enumerate", "--n", "3", "--format", "json")
    rows = list(csv.DictReader(io.StringIO(csv_out)))
    data = json.loads(json_out)
    assert len(rows) == len(data) == 49
    for r, d in zip(rows, data):
        assert r["generators"] == d["generators"]
        assert r["log2_size"] == str(d["log2_size"])
        assert r["d_lee"] == ("inf" if d["d_lee"] is None else str(d["d_lee"]))


def test_enumerate_all_ideals(capsys):
    _, out, _ = run(capsys, "codes", "enumerate", "--n", "3", "--format", "csv", "--all-ideals")
    assert len(list(csv.DictReader(io.StringIO(out)))) == 63


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "--max-enum-bits", "4", "code", "info", "--n", "3", "--gens", "2 ; 0:3")
    assert code == 3 and "error" in err


def test_search_output(capsys, tmp_path):
    target = tmp_path / "ranked.csv"
    code, out, _ = run(capsys, "search", "--n", "3", "--top", "3", "--output", str(target))
    assert code == 0 and "Pareto front" in out
    rows = list(csv.DictReader(target.open()))
    assert len(rows) == 49


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
