import json
import subprocess
import sys

import pytest

from regcurv import families
from regcurv.census import CensusRequest, enumerate_regular
from regcurv.cli import main
from regcurv.io import emit_edge_list, emit_graph6
from regcurv.graphcore import Graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def summary(csv_text):
    line = csv_text.strip().splitlines()[-1]
    assert line.startswith("# summary ")
    return {k: int(v) for k, v in (kv.split("=") for kv in line.split()[2:])}


def write_g6(tmp_path, graphs, name="in.g6"):
    p = tmp_path / name
    p.write_text("".join(emit_graph6(g).decode() + "\n" for g in graphs))
    return str(p)


def test_edge_petersen(capsys):
    code, out, _ = run(capsys, "edge", "--family", "petersen", "0", "1")
    assert code == 0
    assert "kappa=0\n" in out and "kappa_0=-1/3\n" in out


def test_edge_cocktail_alpha_json(capsys):
    code, out, _ = run(capsys, "edge", "--family", "cocktail:4", "0", "2", "--alpha", "1/2", "--json")
    assert code == 0
    rec = json.loads(out)
    assert (rec["kappa"]["num"], rec["kappa"]["den"]) == (1, 1)
    val = rec["kappa_alpha"][0]["value"]
    assert (val["num"], val["den"]) == (1, 2)
    assert val["decimal"] == "0.500000"


def test_edge_from_edge_list_file(capsys, tmp_path):
    # Example 1 with its designated edge relabeled to (0, 5)
    g = families.figure_fixture("example1")
    swap = {1: 5, 5: 1}
    h = Graph.from_edges(g.n, [(swap.get(u, u), swap.get(v, v)) for u, v in g.edges()])
    path = tmp_path / "g.el"
    path.write_text(emit_edge_list(h))
    code, out, _ = run(capsys, "edge", "--file", str(path), "0", "5")
    assert code == 0
    assert "kappa=1/6\n" in out and "kappa_0=-1/6\n" in out
    assert "optimal transport" in out


def test_edge_from_graph6(capsys):
    code, out, _ = run(capsys, "edge", "--graph6", "C~", "0", "1")
    assert code == 0 and "kappa=4/3" in out


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "edge", "--family", "cycle:6", "0", "3")[0] == 3
    assert run(capsys, "edge", "--family", "cycle:6", "0", "17")[0] == 3
    code, _, err = run(capsys, "edge", "--family", "nosuch:3", "0", "1")
    assert code == 2 and "grammar" in err
    assert run(capsys, "edge", "--graph6", "C", "0", "1")[0] == 2
    assert run(capsys, "edge", "--family", "cycle:6", "0", "1", "--alpha", "2")[0] == 3
    assert run(capsys, "edge", "--file", str(tmp_path / "missing.el"), "0", "1")[0] == 2
    code, _, err = run(capsys, "census", "12", "3")
    assert code == 4 and "d=3: n<=10" in err
    with pytest.raises(SystemExit) as e:
        main(["edge"])
    assert e.value.code == 2


def test_report(capsys):
    code, out, _ = run(capsys, "report", "--family", "bi:6")
    assert code == 0 and "bone_idle=true" in out
    code, out, _ = run(capsys, "report", "--family", "petersen", "--json", "--detail")
    rec = json.loads(out)
    assert rec["ricci_flat"] and len(rec["edges"]) == 15


@pytest.mark.parametrize(
    "n, d, total, pos", [(6, 3, 2, 2), (4, 3, 1, 1), (9, 4, 16, 15)]
)
def test_census(capsys, n, d, total, pos):
    code, out, _ = run(capsys, "census", str(n), str(d), "--json")
    assert code == 0
    rec = json.loads(out)
    assert (rec["total"], rec["ric_positive"]) == (total, pos)


def test_census_graph6_out_feeds_scan(capsys, tmp_path):
    path = tmp_path / "c10.g6"
    assert run(capsys, "census", "10", "3", "--graph6-out", str(path))[0] == 0
    code, out, _ = run(capsys, "scan", str(path))
    assert code == 0
    s = summary(out)
    assert s["total"] == 19 and s["ric_positive"] == 1 and s["failed"] == 0


def test_scan_header_and_rows(capsys, tmp_path):
    p = write_g6(tmp_path, [families.hypercube(3), families.petersen()])
    code, out, _ = run(capsys, "scan", p)
    lines = out.strip().splitlines()
    assert lines[0] == "id,n,regular_degree,ric_min_num,ric_min_den,ricci_flat,zero_ricci_flat,bone_idle"
    assert lines[1] == "1,8,3,2,3,0,1,0"  # Q_3 is 0-Ricci-flat
    assert lines[2] == "2,10,3,0,1,1,0,0"


def test_scan_empty_file(capsys, tmp_path):
    p = tmp_path / "empty.g6"
    p.write_text("")
    code, out, _ = run(capsys, "scan", str(p))
    assert code == 0 and summary(out)["total"] == 0


def test_scan_bone_idle(capsys, tmp_path):
    graphs = [families.bone_idle_ring(6), families.bone_idle_ring(7), families.cycle(12)]
    code, out, _ = run(capsys, "scan", write_g6(tmp_path, graphs))
    assert code == 0 and summary(out)["bone_idle"] == 3


def test_scan_malformed_lines(capsys, tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("C~\nC\n@\n")
    code, out, err = run(capsys, "scan", str(p))
    s = summary(out)
    assert code == 2 and s["total"] == 1 and s["failed"] == 2
    assert "line 2" in err and "line 3" in err
    code, _, _ = run(capsys, "scan", str(p), "--no-strict")
    assert code == 0


def test_scan_json_and_parallel_determinism(capsys, tmp_path):
    graphs = enumerate_regular(CensusRequest(8, 3)) + [families.cycle(n) for n in range(3, 12)]
    p = write_g6(tmp_path, graphs)
    serial = run(capsys, "scan", p, "--emit", "json", "--detail")[1]
    parallel = run(capsys, "scan", p, "--emit", "json", "--detail", "--jobs", "2")[1]
    assert serial == parallel
    recs = [json.loads(ln) for ln in serial.splitlines()]
    assert [r["id"] for r in recs[:-1]] == [str(i) for i in range(1, len(graphs) + 1)]
    assert recs[-1]["summary"]["total"] == len(graphs)


def test_jobs_from_environment(capsys, tmp_path, monkeypatch):
    p = write_g6(tmp_path, [families.cycle(6), families.complete(4)])
    base = run(capsys, "scan", p)[1]
    monkeypatch.setenv("RICCI_JOBS", "2")
    assert run(capsys, "scan", p)[1] == base


def test_family_formats(capsys):
    code, out, _ = run(capsys, "family", "bi:6", "--format", "edgelist")
    assert code == 0 and out.splitlines()[0] == "12 24"
    code, out, _ = run(capsys, "family", "product", "cycle:5", "cycle:5", "--format", "edgelist")
    assert out.splitlines()[0] == "25 50"
    assert run(capsys, "family", "kbipartite:3,3")[1] == emit_graph6(families.complete_bipartite(3, 3)).decode() + "\n"
    code, _, err = run(capsys, "family", "cycle:x")
    assert code == 2 and "grammar" in err


def test_family_hypercube_round_trip(capsys, tmp_path):
    g6 = run(capsys, "family", "hypercube:3", "--format", "graph6")[1]
    p = tmp_path / "q3.g6"
    p.write_text(g6)
    out = run(capsys, "scan", str(p), "--emit", "json", "--detail")[1]
    rec = json.loads(out.splitlines()[0])
    assert {(e["kappa"]["num"], e["kappa"]["den"]) for e in rec["edges"]} == {(2, 3)}


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "regcurv", "edge", "--family", "petersen", "0", "1"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and "kappa_0=-1/3" in res.stdout
