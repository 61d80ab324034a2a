import json
from pathlib import Path

import jsonschema
import pytest

from psl2rp import cli
from psl2rp.gf import make_field

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report.schema.json").read_text())


def run(argv):
    report, code = cli.run(argv)
    jsonschema.validate(report, SCHEMA)
    assert report["exit_code"] == code
    return report, code


def test_witness_ok():
    report, code = run(["witness", "--theorem", "2.6", "--p", "7"])
    assert code == 0 and report["status"] == "pass"
    assert report["rp"]["satisfies_rp"] is False
    assert report["meta"]["version"] and "wall_time" in report["meta"]
    assert report["meta"]["config"]["closure_cap"] == 3_000_000


def test_witness_precondition():
    report, code = run(["witness", "--theorem", "2.1", "--p", "17"])
    assert code == 2 and report["error"] == "PreconditionError"


def test_s4_construction_reports_failed_claims():
    report, code = run(["witness", "--theorem", "2.1", "--p", "11"])
    assert code == 1
    assert report["rp"]["satisfies_rp"] is None
    assert {c["name"] for c in report["claims"] if not c["passed"]} == {"irredundant_generating", "rp_fails"}


def test_rp_q8_witness():
    report, code = run(["rp", "--p", "3", "--kind", "SL", "--within-span",
                        "--elements", "0,-1,1,0", "1,1,1,-1"])
    assert code == 1 and report["group_order"] == 8
    assert report["witness"]["label"] == "-1"


def test_rp_redundant_sequence():
    report, code = run(["rp", "--p", "7", "--elements", "0,-1,1,0", "1,1,0,1", "1,2,0,1"])
    assert code == 1 and report["irredundant"] is False


def test_rp_echoes_witness_sequence():
    w, _ = run(["witness", "--theorem", "2.6", "--p", "7"])
    elements = [",".join(row) for row in w["sequence"]]
    r, code = run(["rp", "--p", "7", "--degree", "2", "--elements", *elements])
    assert code == 1 and r["satisfies_rp"] is False
    assert r["witness"] == {**w["rp"]["witness"], "label": None,
                            "matrix": r["witness"]["matrix"]}


@pytest.mark.parametrize("bad", [["1,1,1,1"], ["1,2,3"], ["a,0,0,1"], ["1+x,0,0,1"]])
def test_rp_parse_errors(bad):
    report, code = run(["rp", "--p", "7", "--elements", *bad])
    assert code == 2 and report["status"] == "error"


def test_parse_elem():
    F = make_field(7, 2)
    assert cli.parse_elem(F, "3+2x") == F(3, 2)
    assert cli.parse_elem(F, "-x") == F(0, 6)
    assert cli.parse_elem(F, "4x - 1") == F(6, 4)
    assert cli.parse_elem(F, "10") == F(3)


def test_survey_suites():
    report, code = run(["survey", "--p", "7", "--suites", "mlen", "jambor"])
    assert code == 0
    by = {r["suite"]: r["report"] for r in report["results"]}
    assert by["mlen"]["m"] == 4 and by["jambor"]["count"] == 2


def test_survey_isolates_errors():
    report, code = run(["survey", "--p", "23", "7", "--suites", "jambor"])
    assert code == 1
    first, second = report["results"]
    assert "error" in first and second["passed"]


def test_config_file_and_env(tmp_path, monkeypatch):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# seeds for the sampled searches\nrng_seed = 5\nseeds = 1, 2\ntiming = false\n")
    monkeypatch.setenv(cli.CONFIG_ENV, str(cfg))
    report, _ = run(["survey", "--p", "5", "--suites", "mlen"])
    assert report["meta"]["config"]["rng_seed"] == 5
    assert report["meta"]["config"]["seeds"] == [1, 2]
    assert "wall_time" not in report["meta"]


@pytest.mark.parametrize("text", ["closure_cap = 0", "bogus = 1", "rng_seed = x", "timing = maybe"])
def test_bad_config(tmp_path, text):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(text + "\n")
    report, code = run(["witness", "--config", str(cfg), "--theorem", "2.6", "--p", "7"])
    assert code == 2


def test_closure_cap_enforced(tmp_path):
    cfg = tmp_path / "cap.cfg"
    cfg.write_text("closure_cap = 1000\n")
    report, code = run(["rp", "--config", str(cfg), "--p", "7", "--degree", "2",
                        "--elements", "0,-1,1,0"])
    assert code == 2 and report["error"] == "CapExceeded"


def test_byte_identical_reruns(tmp_path, capsys):
    cfg = tmp_path / "det.cfg"
    cfg.write_text("timing = false\n")
    argv = ["witness", "--config", str(cfg), "--theorem", "2.4", "--p", "29", "--pretty"]
    outs = []
    for _ in range(2):
        assert cli.main(argv) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] and outs[0].startswith("{\n")


def test_output_file(tmp_path):
    out = tmp_path / "r.json"
    cfg = tmp_path / "o.cfg"
    cfg.write_text(f"output = {out}\n")
    assert cli.main(["survey", "--config", str(cfg), "--p", "5", "--suites", "prop34"]) == 0
    assert json.loads(out.read_text())["status"] == "pass"
