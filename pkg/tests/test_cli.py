import json

from tapegroups import framework as fw
from tapegroups.cli import run


def test_mul_matches_library(capsys):
    assert run(["mul", "--group", "z2wrz2", "--nf", "C0", "--gen", "a"]) == 0
    out = capsys.readouterr().out.splitlines()
    rep = fw.representation_z2wrz2()
    nf, report = rep.apply_report("C0", "a")
    assert out[0] == nf == "0C0"
    assert out[1] == f"steps={report.steps}"


def test_mul_json(capsys):
    assert run(["mul", "--group", "thompson-f", "--nf", "b", "--gen", "x1-",
                "--format", "json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["nf"] == "b##b" and blob["steps"] > 0


def test_normalize_and_wp(capsys):
    assert run(["normalize", "--group", "z2wrf2", "--word", ""]) == 0
    assert capsys.readouterr().out.strip() == "B0"
    word = "x1 x0- x0- x1- x0 x0 x1- x0- x1 x0"
    assert run(["wp", "--group", "thompson-f", "--word", word]) == 0
    assert capsys.readouterr().out.strip() == "trivial"
    assert run(["wp", "--group", "z2wrz2", "--word", "c a c a-"]) == 0
    assert capsys.readouterr().out.strip() == "nontrivial"


def test_exit_codes(capsys):
    assert run(["mul", "--group", "z2wrz2", "--nf", "zz", "--gen", "a"]) == 1
    capsys.readouterr()
    assert run(["normalize", "--group", "z2wrz2", "--word", "x9"]) == 1
    capsys.readouterr()


def test_fuzz_json_report(capsys):
    assert run(["fuzz", "--group", "z2wrz2", "--trials", "10",
                "--max-len", "15", "--seed", "1"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["passed"] and blob["group"] == "z2wrz2"


def test_bench_and_probe_json(capsys, tmp_path):
    out = tmp_path / "bench.json"
    assert run(["bench", "--group", "z2wrz2", "--gen", "a",
                "--sizes", "64,256,1024", "--samples", "3", "--out", str(out)]) == 0
    blob = json.loads(out.read_text())
    assert blob["verdict"] is True
    assert set(blob) == {"group", "gen", "sizes", "slope", "verdict"}
    assert run(["probe", "--group", "thompson-f", "--trials", "2",
                "--max-walk", "60"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert "max_ratio" in blob


def test_demo_nonqg(capsys):
    assert run(["demo-nonqg", "--group", "z2wrz2", "--ks", "5,50"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("k")
    assert len(lines) == 3
