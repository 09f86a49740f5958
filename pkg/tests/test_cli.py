import json
import subprocess
import sys
import warnings
from fractions import Fraction

import pytest

from resmirror.cli import main
from resmirror.series import series_from_json


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_vsc_routes_agree(capsys):
    rc, out, _ = run(capsys, "vsc", "--N", "5", "--k", "5", "--d", "2", "--n", "1")
    assert rc == 0 and out == "1435650\n"
    rc, out, _ = run(capsys, "vsc", "--N", "5", "--k", "5", "--d", "2", "--n", "1",
                     "--route", "residue")
    assert rc == 0 and out == "1435650\n"
    rc, out, _ = run(capsys, "vsc", "--N", "5", "--k", "5", "--d", "2", "--n", "1",
                     "--route", "contour")
    assert rc == 0 and out == "1435650\n"


def test_two_point_table_and_json(capsys):
    rc, out, _ = run(capsys, "two-point", "--geometry", "f3",
                     "--d", "0,1", "--a", "w", "--b", "w2")
    assert rc == 0 and out == "3\n"
    rc, out, _ = run(capsys, "two-point", "--geometry", "cpn", "--N", "5", "--k", "5",
                     "--d", "1", "--a", "h0", "--b", "h2")
    assert rc == 0 and out == "3850\n"
    # bare integers are accepted as exponent labels
    rc, out, _ = run(capsys, "two-point", "--geometry", "cpn", "--N", "5", "--k", "5",
                     "--d", "1", "--a", "0", "--b", "2")
    assert rc == 0 and out == "3850\n"
    rc, out, _ = run(capsys, "two-point", "--geometry", "f3",
                     "--d", "0,1", "--a", "w", "--b", "w2", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["value"] == "3" and payload["degree"] == [0, 1]


def test_series_json_round_trips(capsys):
    rc, out, _ = run(capsys, "series", "--geometry", "cpn", "--N", "5", "--k", "5",
                     "--a", "z", "--b", "z", "--trunc", "2", "--format", "json")
    assert rc == 0
    s = series_from_json(json.loads(out))
    assert s.coefficient((1, 0)) == 6725
    assert s.coefficient((2, 0)) == Fraction(16482625, 2)
    rc, out, _ = run(capsys, "series", "--geometry", "kf0",
                     "--a", "1", "--b", "z2", "--trunc", "2")
    assert rc == 0 and "x1" in out  # classical-only series still prints


def test_mirror_map_forward_and_inverse(capsys):
    rc, out, _ = run(capsys, "mirror-map", "--geometry", "cpn", "--N", "5", "--k", "5",
                     "--trunc", "2")
    assert rc == 0
    assert out.splitlines()[0] == "t1 = x1 + 770*q + 717825*q^2"
    rc, out, _ = run(capsys, "mirror-map", "--geometry", "wp2", "--trunc", "2",
                     "--invert")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "t1 = x1 + 744*q + 473652*q^2"
    assert any(line.startswith("x1 = t1 - 744*q") for line in lines)


def test_gw_closed_form_route(capsys):
    rc, out, _ = run(capsys, "gw", "--N", "8", "--k", "9", "--dmax", "1")
    assert rc == 0
    assert "d=1 (1,3): 510463296" in out.splitlines()
    assert "d=1 (2,2): 815556357" in out.splitlines()
    assert "d=1 (0,4): 0" in out.splitlines()


def test_gw_transform_route(capsys):
    rc, out, _ = run(capsys, "gw", "--N", "5", "--k", "5", "--a", "z", "--b", "z",
                     "--dmax", "2")
    assert rc == 0
    assert out.splitlines() == ["d=1 (1,1): 2875", "d=2 (1,1): 4876875/2"]


def test_j_subcommand(capsys):
    rc, out, _ = run(capsys, "j", "--dmax", "2")
    assert rc == 0 and out == "j_1 = 744\nj_2 = 196884\n"
    rc, out, _ = run(capsys, "j", "--dmax", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["w"] == ["744", "473652"]


def test_check_theorem1(capsys):
    rc, out, _ = run(capsys, "check", "theorem1", "--N", "6", "--k", "4", "--d", "2")
    assert rc == 0 and "agree" in out
    rc, out, _ = run(capsys, "check", "theorem1", "--N", "5", "--k", "5", "--d", "2")
    assert rc == 0


def test_check_conjecture2(capsys):
    rc, out, _ = run(capsys, "check", "conjecture2")
    assert rc == 0
    assert "all agree" in out.splitlines()[-1]


def test_validation_failures_exit_2(capsys):
    bad = [
        ("two-point", "--geometry", "cpn", "--N", "5", "--k", "5",
         "--d", "1,1", "--a", "1", "--b", "z"),
        ("two-point", "--geometry", "f3", "--d", "1", "--a", "w", "--b", "w2"),
        ("two-point", "--geometry", "f3", "--N", "5", "--d", "0,1",
         "--a", "w", "--b", "w2"),
        ("two-point", "--geometry", "cpn", "--k", "5", "--d", "1",
         "--a", "1", "--b", "z"),
        ("two-point", "--geometry", "kf0", "--d", "1,0", "--a", "1", "--b", "z9"),
        ("series", "--geometry", "nowhere", "--a", "1", "--b", "z"),
        ("gw", "--N", "8", "--k", "9", "--dmax", "4"),
        ("gw", "--N", "5", "--k", "5"),
        ("check", "theorem1", "--N", "6", "--k", "4"),
        ("series", "--geometry", "cpn", "--N", "5", "--k", "5",
         "--a", "1", "--b", "z", "--config", "/no/such/config.json"),
        ("vsc", "--N", "5", "--k", "5", "--d", "2"),
    ]
    for argv in bad:
        rc, _, err = run(capsys, *argv)
        assert rc == 2, argv


def test_cache_stores_and_shares_symmetric_key(tmp_path, capsys):
    path = str(tmp_path / "memo.jsonl")
    rc, out, _ = run(capsys, "two-point", "--geometry", "cpn", "--N", "6", "--k", "6",
                     "--d", "1", "--a", "z", "--b", "h2", "--cache", path)
    assert rc == 0
    first = out
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    assert len(lines) == 1
    rec = json.loads(lines[0])
    assert rec["schema"] == 1 and rec["value"] == first.strip()
    # swapped insertions hit the same record, no second line appears
    rc, out, _ = run(capsys, "two-point", "--geometry", "cpn", "--N", "6", "--k", "6",
                     "--d", "1", "--a", "h2", "--b", "z", "--cache", path)
    assert rc == 0 and out == first
    with open(path, "r", encoding="utf-8") as fh:
        assert len(fh.read().splitlines()) == 1


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    path = str(tmp_path / "memo.jsonl")
    monkeypatch.setenv("RESMIRROR_CACHE", path)
    rc, _, _ = run(capsys, "two-point", "--geometry", "wp1",
                   "--d", "0,1", "--a", "1", "--b", "zw")
    assert rc == 0
    with open(path, "r", encoding="utf-8") as fh:
        assert len(fh.read().splitlines()) == 1


def test_cache_unreadable_line_warns_and_recomputes(tmp_path, capsys):
    path = str(tmp_path / "memo.jsonl")
    rc, out, _ = run(capsys, "two-point", "--geometry", "f3",
                     "--d", "0,1", "--a", "w", "--b", "w2", "--cache", path)
    assert rc == 0
    with open(path, "a", encoding="utf-8") as fh:
        fh.write("{mangled\n")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rc, out, _ = run(capsys, "two-point", "--geometry", "f3",
                         "--d", "0,1", "--a", "w", "--b", "w2", "--cache", path)
    assert rc == 0 and out == "3\n"
    assert any("unreadable" in str(w.message) for w in caught)


def test_cache_conflict_fails_with_exit_1(tmp_path, capsys):
    path = str(tmp_path / "memo.jsonl")
    rc, _, _ = run(capsys, "two-point", "--geometry", "f3",
                   "--d", "0,1", "--a", "w", "--b", "w2", "--cache", path)
    assert rc == 0
    with open(path, "r", encoding="utf-8") as fh:
        rec = json.loads(fh.readline())
    rec["value"] = "17"
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(rec, sort_keys=True) + "\n")
    rc, _, err = run(capsys, "two-point", "--geometry", "f3",
                     "--d", "0,1", "--a", "w", "--b", "w2", "--cache", path)
    assert rc == 1 and "conflict" in err


def test_config_supplies_truncation_and_cache(tmp_path, capsys):
    cache = tmp_path / "memo.jsonl"
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"truncation": {"cpn": 3, "default": 2},
                               "cache": str(cache)}))
    rc, out, _ = run(capsys, "series", "--geometry", "cpn", "--N", "5", "--k", "5",
                     "--a", "z", "--b", "z", "--config", str(cfg), "--format", "json")
    assert rc == 0
    assert json.loads(out)["trunc"] == 3
    assert cache.exists()
    # explicit --trunc wins over the config default
    rc, out, _ = run(capsys, "series", "--geometry", "cpn", "--N", "5", "--k", "5",
                     "--a", "z", "--b", "z", "--config", str(cfg),
                     "--trunc", "1", "--format", "json")
    assert json.loads(out)["trunc"] == 1


def test_warm_cache_rerun_is_byte_identical(tmp_path):
    path = str(tmp_path / "memo.jsonl")
    argv = [sys.executable, "-m", "resmirror.cli", "series", "--geometry", "cpn",
            "--N", "5", "--k", "5", "--a", "z", "--b", "z", "--trunc", "2",
            "--format", "json", "--cache", path]
    cold = subprocess.run(argv, capture_output=True)
    warm = subprocess.run(argv, capture_output=True)
    assert cold.returncode == 0 and warm.returncode == 0
    assert cold.stdout == warm.stdout
    with open(path, "rb") as fh:
        stored = fh.read()
    rerun = subprocess.run(argv, capture_output=True)
    with open(path, "rb") as fh:
        assert fh.read() == stored  # warm run appends nothing
    assert rerun.stdout == cold.stdout


def test_no_arguments_is_a_usage_error(capsys):
    assert main([]) == 2
