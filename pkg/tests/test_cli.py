import io as _io
import json

import pytest

from lattice_helly.cli import run
from lattice_helly.reports import RegressionTable, emit_table, plain

SQUARE_HREP = "4 2\n1 0 | 1\n-1 0 | 0\n0 1 | 1\n0 -1 | 0\n"


def call(*argv):
    out, err = _io.StringIO(), _io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_bounds_text():
    code, out, _ = call("bounds", "2", "4")
    assert code == 0
    assert "result.entries.averkov_linear=8" in out.splitlines()


def test_witness_size():
    doc = call_json("witness", "k1", "--n", "3")
    assert doc["result"]["size"] == 14
    assert doc["result"]["pointset"].startswith("3 14\n")
    assert doc["ok"] is True


def test_ball_r5():
    r = call_json("ball", "--r", "5")["result"]
    assert (r["N"], r["v"], r["k"]) == (81, 12, 69)
    assert r["inner_ball_check"] and r["max_edge_check"]


def test_ball_rational_center():
    doc = call_json("ball", "--r", "7/2", "--center", "1/3,1/5")
    assert doc["manifest"]["params"]["r"] == "7/2"
    assert doc["manifest"]["params"]["center"] == ["1/3", "1/5"]


def test_ball_table(tmp_path):
    f = tmp_path / "ball.csv"
    doc = call_json("ball", "2", "--rmax", "12", "--csv", str(f))
    res = doc["result"]
    assert res["columns"] == ["r", "N_r", "v_r", "k_r", "max_edge_sq", "inner_margin"]
    assert res["rows"][4][:5] == [5, 81, 12, 69, 10]
    assert res["fit"]["target"] == "2/3"
    lines = f.read_text().splitlines()
    assert lines[0] == "r,N_r,v_r,k_r,max_edge_sq,inner_margin"
    assert lines[5].startswith("5,81,12,69,10,")
    assert call_json("ball", "--rmax", "5")["result"]["fit"] is None


def test_ball_center_seed():
    doc = call_json("ball", "2", "--center-seed", "3", "--r", "4")
    assert doc["manifest"]["params"]["center_seed"] == 3
    assert doc["manifest"]["params"]["center"] != ["0", "0"]


def test_alpha_and_bracket():
    assert call_json("alpha", "5")["result"]["alpha"] == 7
    br = call_json("bracket", "0")["result"]
    assert (br["lower"], br["upper"]) == (4, 4)


def test_mu_grid():
    res = call_json("mu", "2", "3", "--grid", "6")["result"]
    assert res["value"] == 3
    assert res["witness_pointset"].startswith("2 3\n")


def test_expand_roundtrip(tmp_path):
    src = tmp_path / "square.hrep"
    src.write_text(SQUARE_HREP)
    pts = tmp_path / "v.pts"
    code, out, err = call("expand", str(src), "--out-points", str(pts), "--shrink", "0", "--json")
    assert code == 0, err
    doc = json.loads(out)
    assert all(doc["result"]["checks"].values())
    assert pts.read_text().startswith("2 4\n")
    assert "shrunk_hrep" in doc["result"]


def test_selftest_passes():
    code, out, _ = call("selftest")
    assert code == 0
    assert "ok=true" in out.splitlines()


def test_malformed_file_exits_2(tmp_path):
    bad = tmp_path / "bad.hrep"
    bad.write_text("2 2\n1 0 | x\n0 1 | 1\n")
    code, _, err = call("expand", str(bad))
    assert code == 2
    assert "line 2" in err


def test_missing_file_exits_2(tmp_path):
    assert call("expand", str(tmp_path / "nope.hrep"))[0] == 2


def test_usage_errors_exit_2():
    assert call("bounds", "0", "1")[0] == 2
    assert call("nosuchcommand")[0] == 2
    assert call("table", "nosuchtable")[0] == 2
    assert call("witness", "nosuchwitness")[0] == 2


def test_redundant_input_exits_2(tmp_path):
    f = tmp_path / "red.hrep"
    f.write_text(SQUARE_HREP.replace("4 2", "5 2") + "1 1 | 5\n")
    assert call("expand", str(f))[0] == 2


def test_shrink_out_of_range_exits_2(tmp_path):
    f = tmp_path / "sq.hrep"
    f.write_text(SQUARE_HREP)
    assert call("expand", str(f), "--shrink", "9")[0] == 2


@pytest.mark.parametrize("argv", [["alpha", "4"], ["ball", "--r", "6"], ["ball", "--rmax", "25", "--center-seed", "4"], ["table", "ball_n2"]])
def test_output_independent_of_threads(argv):
    outs = {call(*argv, "--json", "--threads", t)[1] for t in ("1", "2", "8")}
    assert len(outs) == 1


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("LATTICE_HELLY_THREADS", "3")
    code, out, _ = call("bounds", "2", "1", "--json", "--timings")
    assert code == 0
    assert json.loads(out)["manifest"]["runtime"]["threads"] == 3
    monkeypatch.setenv("LATTICE_HELLY_THREADS", "2")
    assert json.loads(call("bounds", "2", "1", "--json", "--threads", "5", "--timings")[1])["manifest"]["runtime"]["threads"] == 5


def test_timings_only_on_request():
    assert "runtime" not in call_json("bounds", "3", "2")["manifest"]


def test_seed_recorded():
    assert call_json("bounds", "2", "2", "--seed", "7")["manifest"]["seed"] == 7


def test_table_csv(tmp_path):
    f = tmp_path / "alpha.csv"
    code, _, _ = call("table", "alpha2", "--csv", str(f))
    assert code == 0
    lines = f.read_text().splitlines()
    assert lines[0] == "key,value,provenance"
    assert "5,7,published" in lines
    assert "3,6,derived" in lines


def test_tables_content():
    assert emit_table("alpha2")[5] == 7
    assert emit_table("c2_bracket")[0] == {"lower": 4, "upper": 4}
    ball = emit_table("ball_n2")
    assert ball[5]["N"] == 81 and ball[5]["v"] == 12
    assert ball.provenance(5) == "derived"


def test_regression_table_guards():
    t = RegressionTable("x")
    t.add("a", 1, "trivial")
    t.add("a", 1, "trivial")
    with pytest.raises(ValueError):
        t.add("a", 2, "trivial")
    with pytest.raises(ValueError):
        t.add("b", 1, "guessed")
    assert len(t) == 1


def test_plain_rejects_unknown():
    with pytest.raises(TypeError):
        plain(object())
