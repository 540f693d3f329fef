import json

import pytest

from crossratio.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "tables", "--which", "zz")[0] == 2
    assert run(capsys, "verify", "--only", "no.such")[0] == 2
    assert run(capsys, "fan", "--star", "eps9")[0] == 2
    assert run(capsys, "riemann-roch", "--n-range", "x")[0] == 2


def test_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "gram", "--which", "b2", "--dump-matrix", str(tmp_path / "no" / "dir" / "m.csv"))
    assert code == 2 and "I/O" in err


def test_dump_matrix(capsys, tmp_path):
    p = tmp_path / "b2.csv"
    code, out, _ = run(capsys, "gram", "--which", "b2", "--dump-matrix", str(p))
    assert code == 0
    rows = p.read_text().strip().splitlines()
    assert len(rows) == 36 and rows[0].split(",")[0] == "-3"


def test_geometry(capsys):
    code, out, _ = run(capsys, "geometry", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["cusp"]["count"] == 40 and d["boundary"]["perp_profile"]["cusp"] == 10


def test_fan_and_ledger(capsys):
    code, out, _ = run(capsys, "fan", "--chow-ranks")
    assert code == 0 and "1, 44, 102, 44, 1" in out
    code, out, _ = run(capsys, "fan", "--star", "eps1", "--format", "json")
    assert code == 0
    code, out, _ = run(capsys, "ledger", "--trace", "--format", "json")
    assert json.loads(out)[-1]["euler"] == 271


def test_chow_eval(capsys):
    code, out, _ = run(capsys, "chow", "--ring", "INV", "--eval", "H^4")
    assert code == 0 and out.strip() == "27"
    assert run(capsys, "chow", "--ring", "INV", "--eval", "X^4")[0] == 2


def test_riemann_roch(capsys):
    code, out, _ = run(capsys, "riemann-roch", "--n-range", "0..2", "--format", "json")
    assert code == 0 and json.loads(out)["values"] == {"0": 1, "1": 10, "2": 55}


def test_verify_only(capsys):
    code, out, _ = run(capsys, "verify", "--only", "gram.b2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS  geometry.sizes")
    assert any(l.startswith("PASS  gram.b2") for l in lines)
    assert "0 fail" in out


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--only", "chow.t0_euler", "--json")
    objs = [json.loads(l) for l in out.splitlines()]
    assert code == 0
    for o in objs[:-1]:
        assert {"id", "description", "expected", "computed", "provenance", "status", "ms"} <= set(o)
        assert o["provenance"] in ("STATED", "DERIVED", "TRIVIAL")
    assert objs[-2]["status"] == "flagged-discrepancy"
    assert objs[-1]["summary"]["flagged_ids"] == ["chow.t0_euler"]


def test_verify_text_is_reproducible(capsys):
    a = run(capsys, "verify", "--only", "chow.b0_triples")
    b = run(capsys, "verify", "--only", "chow.b0_triples")
    assert a == b


def test_explain_and_list(capsys):
    code, out, _ = run(capsys, "verify", "--only", "fan.f_vector", "--explain")
    assert code == 0 and "reference:" in out and "expected" in out
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and len(out.split()) >= 40


def test_tables_text(capsys):
    code, out, _ = run(capsys, "tables", "--which", "td")
    assert code == 0 and len(out.strip().splitlines()) == 45
