import json
import os
import subprocess

import pytest

import gallai_fans as gf


def test_graph_basics():
    g = gf.ColoredCompleteGraph(3, 2)
    g.set_color(0, 2, 2)
    assert g.order == 3 and g.palette == 2
    assert g.color(2, 0) == 2
    assert g.to_gcg() == "gcg 1\n3 2\n1 2\n1\n"
    assert gf.ColoredCompleteGraph.from_gcg(g.to_gcg()) == g
    with pytest.raises(gf.PaletteError):
        g.set_color(0, 1, 3)
    with pytest.raises(gf.LengthError):
        gf.ColoredCompleteGraph.from_gcg("gcg 1\n3 2\n1 2\n")
    with pytest.raises(gf.FormatError):
        gf.ColoredCompleteGraph.from_gcg("gcg 9\n3 2\n1 2 1\n")
    assert issubclass(gf.PaletteError, gf.GflError)


def test_detectors():
    g = gf.ColoredCompleteGraph(3, 3)
    g.set_color(0, 2, 2)
    g.set_color(1, 2, 3)
    assert gf.find_rainbow_triangle(g) == (0, 1, 2)
    k5 = gf.ColoredCompleteGraph(5, 1)
    fan = gf.find_mono_fan(k5, 2, 1)
    assert fan == {"color": 1, "center": 0, "edges": [(1, 2), (3, 4)]}
    p = gf.pentagon_coloring(1, 2)
    assert gf.max_fan_order(p, 1) == 0
    assert gf.find_mono_fan(p, 1, 2) is None
    assert gf.count_useful_colors(p) == 2
    assert gf.embeds_in_c4_c5_2k3([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert not gf.embeds_in_c4_c5_2k3([(0, 1), (2, 3), (4, 5)])


def test_constructions_and_partition():
    g = gf.construct("f3", 5)
    assert g.order == 164 == gf.expected_order("f3", 5)
    assert gf.is_fan_free_gallai(g, 3)
    assert gf.construct("fn", 2, n=2).order == 8
    part = gf.find_gallai_partition(gf.construct("f2-odd", 3))
    assert len(part["parts"]) == 5
    assert part["between_colors"] == [2, 3]
    assert part["reduced"].order == 5
    with pytest.raises(gf.ParamError):
        gf.construct("f2-odd", 4)


def test_bound_table():
    rows = gf.bound_table("f2", 6)
    assert [r["exact"] for r in rows] == [9, 21, 42, 101, 208]
    f3 = gf.bound_table("f3", 7)
    assert (f3[-1]["lower"], f3[-1]["upper"], f3[-1]["exact"]) == (825, 828, None)


def test_search():
    assert gf.ramsey2_decide(1, 6)["verdict"] == "Exhausted"
    r = gf.ramsey2_decide(1, 5)
    assert r["verdict"] == "Witness" and r["witness"].order == 5
    assert gf.ramsey2_decide(2, 9, max_nodes=100)["verdict"] == "BudgetExceeded"
    assert gf.check_fact_k7()["verdict"] == "Exhausted"
    assert gf.check_claim_f1(max_nodes=10)["verdict"] == "BudgetExceeded"


# ---- command line ----

GFL = os.environ.get("GFL_BIN")
needs_cli = pytest.mark.skipif(not GFL, reason="GFL_BIN not set")


def gfl(*args):
    return subprocess.run([GFL, *map(str, args)], capture_output=True, text=True)


@needs_cli
def test_cli_construct_and_verify(tmp_path):
    out = tmp_path / "f3.gcg"
    r = gfl("construct", "--family", "f3", "--k", 4, "--verify", "-o", out, "--deterministic")
    assert r.returncode == 0, r.stderr
    report = json.loads(r.stdout)
    assert report["order"] == 68 and report["verdict"] == "ok"

    a = gfl("verify", out, "--fan", 3, "--rainbow", "--deterministic")
    b = gfl("verify", out, "--fan", 3, "--rainbow", "--deterministic")
    assert a.returncode == 0 and a.stdout == b.stdout
    assert json.loads(a.stdout)["input_digest"].startswith("sha256:")

    # F2 is present in the F3-free coloring; the certificate must re-check.
    r = gfl("verify", out, "--fan", 2, "--deterministic")
    assert r.returncode == 2
    cert = json.loads(r.stdout)["certificates"][0]
    g = gf.ColoredCompleteGraph.from_gcg(out.read_text())
    c, v = cert["color"], cert["center"]
    used = {v}
    for x, y in cert["edges"]:
        assert g.color(x, y) == c and g.color(v, x) == c and g.color(v, y) == c
        assert x not in used and y not in used
        used |= {x, y}


@needs_cli
def test_cli_partition_and_rainbow(tmp_path):
    good = tmp_path / "p.gcg"
    good.write_text(gf.construct("f2-odd", 3).to_gcg())
    r = gfl("partition", good)
    assert r.returncode == 0
    assert len(json.loads(r.stdout)["partition"]["parts"]) == 5

    bad = tmp_path / "r.gcg"
    bad.write_text("gcg 1\n3 3\n1 2\n3\n")
    r = gfl("partition", bad)
    assert r.returncode == 2
    assert json.loads(r.stdout)["certificates"][0]["kind"] == "rainbow_triangle"


@needs_cli
def test_cli_table_and_search():
    r = gfl("table", "--family", "f2", "--k-max", 6, "--format", "json")
    assert r.returncode == 0
    rows = json.loads(r.stdout)["table"]["rows"]
    assert [row["exact"] for row in rows] == [9, 21, 42, 101, 208]

    r = gfl("search", "ramsey", "--fan", 1, "--order", 6, "--deterministic")
    assert r.returncode == 0 and json.loads(r.stdout)["verdict"] == "Exhausted"
    r = gfl("search", "ramsey", "--fan", 1, "--order", 5, "--deterministic")
    assert r.returncode == 2
    r = gfl("search", "ramsey", "--fan", 2, "--order", 9, "--budget-nodes", 50)
    assert r.returncode == 3
    r = gfl("check", "claim", "--name", "fact-k7", "--deterministic")
    assert r.returncode == 0


@needs_cli
def test_cli_errors(tmp_path):
    assert gfl("verify", tmp_path / "missing.gcg", "--fan", 2).returncode == 1
    assert gfl("construct", "--family", "f9", "--k", 2, "-o", tmp_path / "x").returncode == 1
    assert gfl("bogus").returncode == 1
