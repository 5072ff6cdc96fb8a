import json
from fractions import Fraction as F

import jsonschema
import pytest

from reczeros import serialize
from reczeros.cli import main, parse_values, parse_width


# ---------------------------------------------------------------------------
# flag parsing
# ---------------------------------------------------------------------------

def test_parse_values_forms():
    assert parse_values("5") == [5]
    assert parse_values("2..5") == [2, 3, 4, 5]
    assert parse_values("1,3,9") == [1, 3, 9]
    assert parse_values("4..6,2,5") == [2, 4, 5, 6]  # sorted, deduplicated
    assert parse_values("7..7") == [7]


def test_parse_values_rejects_garbage():
    for bad in ("", "3..1", "1,,2", "a..b", "2.5"):
        with pytest.raises(ValueError):
            parse_values(bad)


def test_parse_width_accepts_rational_and_decimal():
    assert parse_width("1/100") == F(1, 100)
    assert parse_width("1e-20") == F(1, 10**20)
    assert parse_width("0.5") == F(1, 2)
    with pytest.raises(ValueError):
        parse_width("0")
    with pytest.raises(ValueError):
        parse_width("-1/3")


def test_unknown_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_bad_range_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--k", "3..1", "--ell", "1"])
    assert exc.value.code == 2
    capsys.readouterr()


@pytest.mark.parametrize("argv", [
    ["construct", "--k", "0", "--ell", "1"],
    ["certify", "--k", "2", "--ell", "1", "--prec", "32"],
    ["certify", "--k", "2", "--ell", "1", "--jobs", "0"],
])
def test_invalid_config_exits_2(argv, capsys):
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# documents against their shipped schemas
# ---------------------------------------------------------------------------

def run_json(argv, capsys):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def validate(kind, doc):
    jsonschema.validate(instance=doc, schema=serialize.load_schema(kind))


def test_construct_document_schema(capsys):
    code, doc = run_json(["construct", "--k", "1..4", "--ell", "1..2"],
                         capsys)
    assert code == 0
    validate("construct", doc)
    assert doc["format"] == "reczeros.construct"
    first = doc["instances"][0]
    assert first["recip"] == ["-1/720", "1/144", "-1/720"]
    # interior-weight fields only show up from k = 3 on
    assert "approx" not in first
    assert "approx" in doc["instances"][4]


def test_certify_document_schema(capsys):
    code, doc = run_json(["certify", "--k", "2..5", "--ell", "1..3"],
                         capsys)
    assert code == 0
    validate("certify", doc)
    for inst in doc["instances"]:
        assert inst["conforms"] is True
        assert F(inst["alpha"]["lo"]) < F(inst["alpha"]["hi"])


def test_verify_document_schema(capsys):
    code, doc = run_json(["verify", "--k-max", "5", "--ell-max", "2"],
                         capsys)
    assert code == 0
    validate("verify", doc)
    assert doc["grid"] == {"k_max": "5", "ell_max": "2",
                           "precision": "128", "suite": "all"}
    assert doc["ok"] is True
    assert doc["counts"]["fail"] == "0"


def test_analyze_document_schema(capsys):
    code, doc = run_json(["analyze", "--k", "1..4", "--ell", "1..2"],
                         capsys)
    assert code == 0
    validate("analyze", doc)
    assert all(i["mahler_inequality_ok"] for i in doc["instances"])
    assert all(i["alpha_in_interval"] for i in doc["instances"])


def test_scan_document_schema(capsys):
    code, doc = run_json(["scan", "--k", "1..6", "--ell", "1..2"], capsys)
    assert code == 0
    validate("scan", doc)
    by_key = {(i["k"], i["ell"]): i["unity_root_orders"]
              for i in doc["instances"]}
    assert by_key[("3", "1")] == ["3"]   # a genuine cube-root-of-unity zero
    assert by_key[("2", "2")] == ["1"]
    assert by_key[("1", "1")] == []


# ---------------------------------------------------------------------------
# behavior and exit codes
# ---------------------------------------------------------------------------

def test_verify_suite_filters_claims(capsys):
    _, doc = run_json(["verify", "--k-max", "6", "--ell-max", "2",
                       "--suite", "lemmas"], capsys)
    ids = {r["claim"] for r in doc["results"]}
    assert ids == {"zeta-bounds", "zeta-quotient-bound", "index-ratio-bound",
                   "zeta-sum-half", "q-monotone", "delta-majorant"}
    _, doc = run_json(["verify", "--k-max", "6", "--ell-max", "2",
                       "--suite", "intervals"], capsys)
    assert {r["claim"] for r in doc["results"]} == {"alpha-interval",
                                                    "alpha-interval-k2"}


def test_verify_finding_is_exit_zero_with_note(capsys):
    # k_max = 8 reaches the first stated-endpoint violations at k = 7
    code = main(["verify", "--k-max", "8", "--ell-max", "1",
                 "--suite", "intervals", "--format", "json"])
    captured = capsys.readouterr()
    assert code == 0
    assert "finding" in captured.err
    statuses = {r["claim"]: r["status"]
                for r in json.loads(captured.out)["results"]}
    assert statuses["alpha-interval"] == "finding"


def test_analyze_cap_refusal_and_force(capsys):
    assert main(["analyze", "--k", "16", "--ell", "1"]) == 2
    assert "--force" in capsys.readouterr().err
    code, doc = run_json(["analyze", "--k", "16", "--ell", "1", "--force"],
                         capsys)
    assert code == 0
    validate("analyze", doc)
    assert doc["instances"][0]["alpha_in_interval"] is False


def test_analyze_notes_window_defect(capsys):
    code = main(["analyze", "--k", "7", "--ell", "1", "--format", "json"])
    captured = capsys.readouterr()
    assert code == 0
    assert "stated window" in captured.err


def test_out_writes_file_and_stdout_stays_clean(tmp_path, capsys):
    target = tmp_path / "doc.json"
    code = main(["construct", "--k", "2", "--ell", "2",
                 "--format", "json", "--out", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(target.read_text())
    validate("construct", doc)


def test_jobs_do_not_change_bytes(tmp_path):
    paths = []
    for jobs in ("1", "3"):
        p = tmp_path / ("certify_%s.json" % jobs)
        assert main(["certify", "--k", "2..5", "--ell", "1..2",
                     "--jobs", jobs, "--format", "json",
                     "--out", str(p)]) == 0
        paths.append(p.read_bytes())
    assert paths[0] == paths[1]


def test_csv_and_table_render(capsys):
    assert main(["scan", "--k", "2..3", "--ell", "1", "--format",
                 "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,ell,unity_root_orders"
    assert lines[1] == "2,1,2"

    assert main(["certify", "--k", "2", "--ell", "1"]) == 0
    table = capsys.readouterr().out.splitlines()
    assert table[0].startswith("k  ell  sigma")
    assert table[1].split()[:3] == ["2", "1", "1"]


def test_certify_width_controls_alpha_enclosure(capsys):
    code, doc = run_json(["certify", "--k", "2", "--ell", "1",
                          "--width", "1/10"], capsys)
    assert code == 0
    alpha = doc["instances"][0]["alpha"]
    gap = F(alpha["hi"]) - F(alpha["lo"])
    assert F(1, 10**6) < gap <= F(1, 10)
