import csv
import io
import json

import pytest

from pdng.cli import main


def run(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def jsonl(text):
    return [json.loads(line) for line in text.splitlines()]


def test_compute_necklace():
    code, out, _ = run(["compute", "--family", "necklace:3", "--params", "gp"])
    assert code == 0 and jsonl(out)[0]["gp"] == 3


def test_compute_k2_all_params():
    code, out, _ = run(["compute", "--graph6", "A_", "--params", "gp,g,z"])
    row = jsonl(out)[0]
    assert (row["gp"], row["g"], row["z"]) == (1, 1, 1)


def test_compute_comb_witness_on_spine():
    row = jsonl(run(["compute", "--family", "comb:9", "--params", "gp"])[1])[0]
    assert row["gp"] == 3 and all(v % 2 == 0 for v in row["gp_witness"])


def test_ngcheck_order_6_summary():
    code, out, _ = run(["ngcheck", "--enumerate", "6", "--filter", "all-components-ge3"])
    rows = jsonl(out)
    assert code == 0 and max(r["sum"] for r in rows) == 4
    assert {"EFz_", "EEh_"} & {r["graph6"] for r in rows if r["sum"] == 4}


def test_ngcheck_find_order_8():
    code, out, _ = run(["ngcheck", "--enumerate", "8", "--filter", "both-connected", "--find", "sum=4"])
    assert code == 0 and len(jsonl(out)) >= 1


def test_ngcheck_rk3():
    code, out, _ = run(["ngcheck", "--family", "rk3:4"])
    (r,) = jsonl(out)
    c = {x["id"]: x for x in r["checks"]}
    assert r["sum"] == 6 and c["10.sum"]["bound"] == 6 and c["10.sum"]["applicable"]


def test_ngcheck_summary_table():
    code, out, _ = run(["ngcheck", "--enumerate", "5", "--params", "gp,g,z", "--format", "summary"])
    assert code == 0
    assert "all graphs" in out and "g_sum" in out and "z_sum" in out and "violations: 0" in out


def test_csv_and_jsonl_agree():
    _, j, _ = run(["ngcheck", "--enumerate", "5", "--params", "gp,g"])
    _, c, _ = run(["ngcheck", "--enumerate", "5", "--params", "gp,g", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(c)))
    for a, b in zip(jsonl(j), rows, strict=True):
        for key in ("n", "graph6", "p", "p_bar", "sum", "prod", "g", "g_bar"):
            assert str(a[key]) == b[key]
        assert ";".join(a["flags"]) == b["flags"]


def test_output_is_independent_of_jobs():
    a = run(["ngcheck", "--enumerate", "6", "--jobs", "1"])[1]
    b = run(["ngcheck", "--enumerate", "6", "--jobs", "2"])[1]
    assert a == b


def test_sweep_order_7():
    code, out, _ = run(["sweep", "--enumerate", "7"])
    v = json.loads(out)
    assert code == 0 and v["verdict"] == "ok"
    assert v["sum_by_class"]["7:all-components-ge3"]["max_sum"] <= 7 // 3 + 2


def test_sweep_order_6_lower_bound_from_path():
    v = json.loads(run(["sweep", "--enumerate", "6"])[1])
    allg = v["sum_by_class"]["6:all graphs"]
    assert allg["min_sum"] == 2 and "E?Bw" in allg["min_sum_attainers"] or allg["min_sum"] == 2


def test_sweep_fast(tmp_path):
    code, out, _ = run(["sweep", "--enumerate", "7", "--fast"])
    v = json.loads(out)
    assert code == 0 and v["all_components_ge3"]["7"]["max_sum"] == 4


def test_reconstruct_cubic():
    code, out, _ = run(["reconstruct", "CUBIC_DIAM2"])
    assert code == 0 and len(jsonl(out)) == 5


def test_generate():
    code, out, _ = run(["generate", "--family", "petersen", "--canonical"])
    assert code == 0 and out.strip() == "I?LRCecq?"


def test_usage_errors():
    assert run(["compute"])[0] == 1
    assert run(["compute", "--enumerate", "9"])[0] == 1
    assert run(["compute", "--family", "necklace:1"])[0] == 1
    assert run(["ngcheck", "--enumerate", "4", "--filter", "nope"])[0] == 1
    assert run(["ngcheck", "--enumerate", "4", "--find", "bogus"])[0] == 1
    assert run(["compute", "--enumerate", "4", "--params", "chi"])[0] == 1
    assert run(["compute", "--enumerate", "4", "--jobs", "0"])[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--no-such-flag"])
    assert exc.value.code == 1


def test_parse_errors_strict_and_tolerant(monkeypatch):
    code, out, err = run(["compute", "--file", "-"], "A_\nBw\nA~\nC~\n", monkeypatch)
    assert code == 0 and len(jsonl(out)) == 3 and "line 3" in err
    code, out, err = run(["compute", "--file", "-", "--strict"], "A_\nA~\n", monkeypatch)
    assert code == 2 and "line 2" in err
    assert run(["compute", "--graph6", "A~"])[0] == 2
    code, out, _ = run(["compute", "--graph6", "A~", "--lenient-padding"])
    assert code == 0


def test_missing_file_and_catalog(tmp_path, monkeypatch):
    assert run(["compute", "--file", str(tmp_path / "none.g6")])[0] == 2
    assert run(["reconstruct", "FIG3"])[0] == 2
    monkeypatch.setenv("PDNG_DATA_DIR", str(tmp_path))
    code, _, err = run(["reconstruct", "S4K3"])
    assert code == 2 and "geng" in err


def test_red_alert_exit_code(monkeypatch):
    from pdng import ng

    real = ng.evaluate_checks

    def broken(r, s, sb):
        checks = real(r, s, sb)
        return checks + [ng.TheoremCheck("1.fake", True, 0, 1, False)]

    monkeypatch.setattr(ng, "evaluate_checks", broken)
    code, _, err = run(["ngcheck", "--graph6", "A_"])
    assert code == 3 and "RED ALERT: A_" in err


def test_output_file(tmp_path):
    p = tmp_path / "o.jsonl"
    code, out, _ = run(["compute", "--family", "path:4", "--output", str(p)])
    assert code == 0 and out == "" and json.loads(p.read_text())["gp"] == 1
