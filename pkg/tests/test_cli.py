import copy
import json
import subprocess
import sys

import jsonschema
import pytest

from pellfrac import _tables
from pellfrac.cli import SCHEMA_PATH, main

SCHEMA = json.loads(SCHEMA_PATH.read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    data = json.loads(out) if out.strip() else None
    if data is not None:
        jsonschema.validate(data, SCHEMA)
    return code, data, err


def elem(z):
    return (z["a"], z["b"], z["d"])


def test_expand_examples(capsys):
    code, data, _ = run_json(capsys, "expand", "--f", "1,0,0,0,4")
    assert code == 0 and (data["period"], data["r"], elem(data["k"])) == (2, 1, ("4", "0", 1))
    code, data, _ = run_json(capsys, "expand", "--f", "1,0,0,0,1", "--mu", "1")
    assert code == 0 and data["period"] == 1
    code, data, _ = run_json(capsys, "expand", "--f", "1, 0, 4, 8, 4")
    assert code == 0 and data["period"] == 10


def test_expand_not_detected_exit_code(capsys):
    code, data, _ = run_json(capsys, "expand", "--f", "1,0,4,-32,4", "--max-steps", "40")
    assert code == 2 and data["period"] is None and data["steps_computed"] == 41


def test_expand_trace_and_quadratic_coefficients(capsys):
    code, data, _ = run_json(capsys, "expand", "--f", "1,0,0,0,8", "--mu", "1/4*sqrt(2)", "--trace")
    assert code == 0 and data["period"] == 1
    assert data["steps"][0]["h"] == 0 and elem(data["mu"]) == ("0", "1/4", 2)


@pytest.mark.parametrize("argv", [
    ("expand", "--f", "1,x,0"),
    ("expand", "--f", "1,0,1"),
    ("expand", "--f", "1,,0,0,1"),
    ("expand", "--f", "2,0,0,0,1"),
    ("expand", "--f", "1,0,sqrt(2),0,sqrt(3)"),
    ("order", "--model", "1,0,3"),
    ("order", "--f", "1,0,0,0,1", "--tate", "1,1"),
])
def test_malformed_input_exits_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_family_examples(capsys):
    for extra in ((), ("--s", "sqrt")):
        code, data, _ = run_json(capsys, "family", "--tag", "per12_X13", "--d", "17", "--t", "2", *extra)
        assert code == 0 and (data["period"], data["order"]) == (12, 13)
    code, data, _ = run_json(capsys, "family", "--tag", "ord10", "--t", "2")
    assert (data["period"], data["r"], elem(data["k"])) == (18, 9, ("8", "0", 1))


def test_family_inadmissible_reports_condition(capsys):
    code, out, err = run(capsys, "family", "--tag", "per14_i", "--t", "1")
    assert code == 1 and "t*(t-1)*(2t-1) != 0" in err
    code, out, err = run(capsys, "family", "--tag", "per26_X14", "--t", "1", "--d", "5")
    assert code == 1 and "(t-1)" in err


def test_certify_example(capsys):
    code, data, _ = run_json(capsys, "certify", "--n", "13", "--d", "33", "--height", "4")
    assert code == 0
    pts = {(elem(c["point"]["t"]), elem(c["point"]["s"])) for c in data["certificates"]}
    assert (("2", "0", 33), ("-3/2", "1/2", 33)) in pts
    assert (("2", "0", 33), ("-3/2", "-1/2", 33)) in pts
    assert all(c["period"] == 26 and not c["k_is_square"] for c in data["certificates"])


def test_certify_single_point(capsys):
    code, data, _ = run_json(capsys, "certify", "--n", "13", "--d", "33", "--t", "2", "--s=-3/2+1/2*sqrt(33)")
    assert code == 0 and len(data["certificates"]) == 1


def test_certify_reports_corrupted_alpha_table(capsys, monkeypatch):
    broken = copy.deepcopy(_tables.ALPHA_FACTORS)
    del broken[13][3]
    monkeypatch.setattr(_tables, "ALPHA_FACTORS", broken)
    code, out, err = run(capsys, "certify", "--n", "13", "--d", "33", "--height", "4")
    assert code == 1 and "certificate cross-check failed" in err


def test_points_example(capsys):
    code, data, _ = run_json(capsys, "points", "--curve", "14", "--d", "-7", "--height", "6")
    assert code == 0
    usable = [p for p in data["points"] if p["usable"]]
    assert usable and all(not p["cusp"] for p in usable)


def test_points_deterministic_across_thread_caps(capsys, monkeypatch):
    outs = []
    for n in ("1", "3"):
        monkeypatch.setenv("PELLFRAC_THREADS", n)
        outs.append(run(capsys, "points", "--curve", "13", "--d", "17", "--height", "4")[1])
    assert outs[0] == outs[1]


def test_order_inputs(capsys):
    code, data, _ = run_json(capsys, "order", "--tate", "24,6")
    assert code == 0 and data["order"] == 10
    code, data, _ = run_json(capsys, "order", "--model", "2,-2,0")
    assert code == 0 and data["order"] == 6
    code, data, _ = run_json(capsys, "order", "--f", "1,0,4,-32,4")
    assert code == 2 and data["order"] is None
    code, data, _ = run_json(capsys, "order", "--f", "4,0,16,32,16")
    assert code == 0 and data["order"] == 6


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nd = 17\nheight = 2\nformat = json\n")
    code, data, _ = run_json(capsys, "points", "--curve", "13", "--config", str(cfg))
    assert code == 0 and data["d"] == 17 and data["height"] == 2
    code, data, _ = run_json(capsys, "points", "--curve", "13", "--config", str(cfg), "--height", "1")
    assert data["height"] == 1
    cfg.write_text("bogus = 1\n")
    assert run(capsys, "points", "--curve", "13", "--config", str(cfg))[0] == 1
    cfg.write_text("max_steps = 0\n")
    assert run(capsys, "points", "--curve", "13", "--config", str(cfg))[0] == 1


def test_table_format(capsys):
    code, out, _ = run(capsys, "family", "--tag", "per14_i", "--t", "2", "--format", "table")
    assert code == 0
    assert "period: 14" in out and "order: 8" in out


def test_selftest_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "selftest", "--seed", "7", "--format", "table")
    code2, out2, _ = run(capsys, "selftest", "--seed", "7", "--format", "table")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.count("[PASS]") == 10


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pellfrac", "expand", "--f", "1,0,0,0,1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["period"] == 1
