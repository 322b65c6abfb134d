import json

import pytest

from bentbin import __version__
from bentbin.cli import CSV_COLUMNS, RECORD_KEYS, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_json_record(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--n", "6", "--d1", "3",
                           "--d2", "10", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert list(rec) == RECORD_KEYS
    assert rec["schema"] == 1
    assert rec["sf_size"] == 8
    assert rec["sf_equals_subfield"] is True
    assert rec["nonlinearity"] == 16
    assert rec["delta"] == 8
    assert rec["image_size"] == 57
    assert rec["nu"] == 3
    assert rec["class_label"].startswith("binomial-class")
    assert rec["tool_version"] == __version__
    # round trip
    assert json.loads(json.dumps(rec)) == rec


def test_analyze_csv_and_text(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--n", "6", "--d1", "3",
                           "--d2", "10", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == ",".join(CSV_COLUMNS)
    assert row.split(",")[0] == "6"
    code, out, _ = run_cli(capsys, "analyze", "--n", "6", "--d1", "3",
                           "--d2", "10", "--format", "text")
    assert code == 0 and "#S_F = 8" in out


def test_analyze_explicit_modulus(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--n", "6", "--d1", "3",
                           "--d2", "10", "--modulus", "0x6d",
                           "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["modulus"] == "0x6d"
    assert rec["sf_size"] == 8  # invariant under the modulus


def test_field_command(capsys):
    code, out, _ = run_cli(capsys, "field", "--n", "6", "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert info["N"] == 63 and info["m"] == 3 and info["modulus"] == "0x43"


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "analyze", "--n", "6", "--d1", "3",
                           "--d2", "3")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "field", "--n", "40")
    assert code == 2
    code, _, err = run_cli(capsys, "field", "--n", "6", "--modulus", "0x44")
    assert code == 2
    code, _, err = run_cli(capsys, "table1", "--n-max", "18")
    assert code == 2 and "--long-run" in err
    code, _, err = run_cli(capsys, "table1", "--n-max", "15")
    assert code == 2  # odd bound


def test_table1(capsys):
    code, out, _ = run_cli(capsys, "table1", "--n-max", "12")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln and ln[0].isdigit()]
    assert len(lines) == 5
    assert all("ok" in ln for ln in lines)


def test_ell_warning_at_12(capsys):
    code, out, err = run_cli(capsys, "ell", "--n", "12", "--method",
                             "lattice")
    assert code == 0
    assert "ell=5" in out
    assert "warning" in err


def test_stick_and_gauss(capsys):
    code, out, _ = run_cli(capsys, "stick", "--n", "8", "--d1", "5",
                           "--d2", "20")
    assert code == 0
    assert "nu(5,20) = 4" in out
    assert "j=3" in out
    code, out, _ = run_cli(capsys, "gauss", "--n", "4")
    assert code == 0
    assert "failures=0" in out


def test_verify_all_and_fault(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "6", "--suite", "all")
    assert code == 0
    assert "[ok]" in out and "[FAIL]" not in out
    code, out, _ = run_cli(capsys, "verify", "--n", "6", "--suite", "field",
                           "--inject-fault", "exp-table")
    assert code == 1
    assert "[FAIL]" in out
    code, _, err = run_cli(capsys, "verify", "--n", "6", "--suite", "nope")
    assert code == 2


def test_search_deterministic_across_jobs(capsys):
    outs = []
    for jobs in ("1", "2"):
        code, out, _ = run_cli(capsys, "search", "--n", "6", "--max-weight",
                               "2", "--jobs", jobs, "--format", "json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    records = [json.loads(ln) for ln in outs[0].splitlines()]
    assert len(records) == 37
    labels = {(r["d1"], r["d2"]): r["class_label"] for r in records
              if r["sf_size"] == 8}
    assert len(labels) == 5


def test_search_full_records(capsys):
    code, out, _ = run_cli(capsys, "search", "--n", "4", "--jobs", "1",
                           "--full", "--format", "json")
    assert code == 0
    for ln in out.splitlines():
        rec = json.loads(ln)
        assert list(rec) == RECORD_KEYS
        assert rec["nu"] is not None


def test_cache_roundtrip(tmp_path, capsys):
    args = ("analyze", "--n", "6", "--d1", "3", "--d2", "10",
            "--format", "json", "--cache", str(tmp_path))
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    cache_file = tmp_path / "bentbin-cache.jsonl"
    assert cache_file.exists()
    code, out2, _ = run_cli(capsys, *args)
    assert code == 0
    assert out1 == out2
    # a corrupted cache entry is re-verified and ignored, not trusted
    from bentbin.cache import ResultCache
    from bentbin import make_field
    cache = ResultCache(str(tmp_path))
    assert cache.lookup(make_field(6), 3, 10) is not None
    assert cache.hits == 1


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
