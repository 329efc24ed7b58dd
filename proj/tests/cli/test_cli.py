import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("HWEYL_CLI", "hweyl")


def run(*args, check=True):
    r = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    if check and r.returncode != 0:
        raise AssertionError(f"exit {r.returncode}: {r.stderr}")
    return r


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return p


def test_gen_group():
    assert json.loads(run("gen", "group", "--orders", "4,2").stdout) == {"orders": [4, 2]}


def test_gen_is_deterministic():
    a = run("gen", "function", "--orders", "3", "--seed", "5").stdout
    b = run("gen", "function", "--orders", "3", "--seed", "5").stdout
    c = run("gen", "function", "--orders", "3", "--seed", "6").stdout
    assert a == b
    assert a != c
    assert len(json.loads(a)["values"]) == 9


def test_gen_measure_shape():
    m = json.loads(run("gen", "measure", "--orders", "2,2", "--dim", "3", "--field", "real").stdout)
    assert len(m["atoms"]) == 16
    assert all(len(row) == 3 for row in m["atoms"])


def test_weyl_round_trip(tmp_path):
    f = tmp_path / "f.json"
    run("gen", "function", "--orders", "3", "--out", f)
    w = tmp_path / "w.json"
    run("weyl", f, "--out", w)
    back = json.loads(run("weyl", w, "--inverse").stdout)
    orig = json.loads(f.read_text())
    assert back["group"] == orig["group"]
    assert len(back["values"]) == len(orig["values"])


def test_tconv_paths_agree(tmp_path):
    f = tmp_path / "f.json"
    g = tmp_path / "g.json"
    run("gen", "function", "--orders", "4", "--seed", "1", "--out", f)
    run("gen", "function", "--orders", "4", "--seed", "2", "--out", g)
    outs = [run("tconv", f, g, "--path", p).stdout for p in ("direct", "weyl_factorized", "fft")]
    docs = [json.loads(o) for o in outs]
    assert all(len(d["values"]) == 16 for d in docs)


def test_vmeas_sv(tmp_path):
    m = tmp_path / "m.json"
    run("gen", "measure", "--orders", "2", "--dim", "2", "--field", "real", "--out", m)
    out = json.loads(run("vmeas", "sv", "--measure", m).stdout)
    assert out["quantity"] == "semivariation"
    est = out["estimate"]
    assert est["lower"] <= est["value"] <= est["upper"]


def test_parse_error_exit_code(tmp_path):
    bad = write(tmp_path, "bad.json", {"group": {"orders": [2]}, "values": [1, 2, "x", 4]})
    r = run("weyl", bad, check=False)
    assert r.returncode == 2
    assert "$.values[2]" in r.stderr


def test_unknown_option_exit_code():
    assert run("weyl", "--no-such-flag", check=False).returncode == 2


def test_bench_csv():
    r = run("bench", "--orders", "4", "--trials", "1")
    rows = list(csv.reader(io.StringIO(r.stdout)))
    assert rows[0] == ["group", "path", "mean_ns", "stddev_ns", "agreement_err"]
    assert len(rows) == 4
    assert {row[1] for row in rows[1:]} == {"direct", "weyl_factorized", "fft"}


def test_verify_zero_trials(tmp_path):
    out = tmp_path / "r.json"
    r = run("verify", "all", "--trials", "0", "--out", out)
    assert r.returncode == 0
    rep = json.loads(out.read_text())
    assert rep["schema"] == 1
    assert rep["pass"] is True
    assert all(c["trials"] == 0 for c in rep["checks"])


@pytest.mark.parametrize("fmt", ["table", "csv"])
def test_verify_formats(fmt):
    r = run("verify", "core", "--trials", "1", "--orders", "2", "--format", fmt)
    assert "core.plancherel" in r.stdout
