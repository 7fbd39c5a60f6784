import json

import pytest

from walshforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert out, err
    return code, json.loads(out)


def test_analyze_happy_path(capsys):
    code, doc = run_json(capsys, "analyze", "--m", "5", "--g", '{"a7":"0x1"}')
    assert code == 0
    assert doc["schema"] == "walsh-forge/1"
    assert doc["summary"]["sigma4_spectrum"] == doc["summary"]["sigma4_autocorr"] == 2048
    assert all(c["pass"] for c in doc["checks"] if c["hard"])
    assert "determinism_hash" in doc and "meta" in doc


def test_analyze_requires_g(capsys):
    code, out, err = run(capsys, "analyze", "--m", "5")
    assert code == 2 and "--g" in err


def test_even_m_rejected_with_check_name(capsys):
    code, out, err = run(capsys, "analyze", "--m", "4", "--g", '{"a7":"0x1"}')
    assert code == 2
    assert "odd m" in err and ("autocorr" in err or "predictor" in err)


def test_even_m_spectrum_only_allowed(capsys):
    code, doc = run_json(capsys, "analyze", "--m", "4", "--g", '{"a7":"0x1"}',
                         "--checks", "spectrum,bounds")
    assert code == 0
    assert doc["config"]["checks"] == ["spectrum", "bounds"]


def test_unknown_check_rejected(capsys):
    code, out, err = run(capsys, "analyze", "--m", "5", "--g", '{"a7":"0x1"}',
                         "--checks", "spectru")
    assert code == 2 and "spectru" in err


def test_g_from_file(tmp_path, capsys):
    p = tmp_path / "g.json"
    p.write_text('{"a7":"0x3","b":{"1":"0x5"},"s":1}')
    code, doc = run_json(capsys, "analyze", "--m", "7", "--g", str(p))
    assert code == 0
    assert doc["config"]["g"]["a7"] == "0x3"


def test_malformed_g_exits_2(capsys):
    code, out, err = run(capsys, "analyze", "--m", "5", "--g", '{"a7":"0x0"}')
    assert code == 2


def test_coefficient_outside_field_exits_2(capsys):
    code, out, err = run(capsys, "analyze", "--m", "5", "--g", '{"a7":"0xFF"}')
    assert code == 2 and "field" in err


def test_scan_deterministic(capsys):
    args = ("scan", "--m", "7", "--count", "10", "--s", "1", "--seed", "42")
    code1, doc1 = run_json(capsys, *args)
    code2, doc2 = run_json(capsys, *args)
    assert code1 == code2 == 0
    assert doc1["determinism_hash"] == doc2["determinism_hash"]
    assert len(doc1["summary"]["rows"]) == 10


def test_verify_threads_do_not_change_hash(capsys):
    base = ("verify", "--m", "7", "--count", "2", "--seed", "11")
    _, doc1 = run_json(capsys, *base, "--threads", "1")
    _, doc4 = run_json(capsys, *base, "--threads", "4")
    assert doc1["determinism_hash"] == doc4["determinism_hash"]
    assert doc1["meta"]["threads"] == 1 and doc4["meta"]["threads"] == 4


def test_verify_selftest_negative_exits_1(capsys):
    code, doc = run_json(capsys, "verify", "--m", "5", "--count", "1",
                         "--selftest-negative")
    assert code == 1
    assert doc["summary"]["mismatches"]
    first = doc["checks"][0]
    assert first["name"] == "predictor_oracle_agreement" and not first["pass"]


def test_verify_single_g(capsys):
    code, doc = run_json(capsys, "verify", "--m", "7", "--g",
                         '{"a7":"0x1","b":{"1":"0x1"},"s":1}')
    assert code == 0
    assert doc["summary"]["alphas_checked"] == 127
    assert doc["summary"]["mismatches"] == []


def test_curve_subcommand(capsys):
    code, doc = run_json(capsys, "curve", "--m", "3", "--curve",
                         '{"a":"0x1","b":"0x0","c":"0x0","d":"0x0"}')
    assert code == 0
    assert doc["summary"]["w"] == 1
    assert doc["summary"]["actual_count"] == 9
    assert doc["summary"]["predicted_counts"] == [9]


def test_curve_a_zero_exits_2(capsys):
    code, out, err = run(capsys, "curve", "--m", "5", "--curve",
                         '{"a":"0x0","b":"0x1","c":"0x0","d":"0x0"}')
    assert code == 2


def test_curve_malformed_json_exits_2(capsys):
    code, out, err = run(capsys, "curve", "--m", "5", "--curve", "{broken")
    assert code == 2


def test_slow_gate(capsys):
    code, out, err = run(capsys, "analyze", "--m", "13", "--g", '{"a7":"0x1"}')
    assert code == 2 and "--slow" in err
    # spectrum-only analysis is cheap and stays available without the flag
    code, doc = run_json(capsys, "analyze", "--m", "13", "--g", '{"a7":"0x1"}',
                         "--checks", "spectrum,bounds")
    assert code == 0


def test_csv_format(capsys):
    code, out, err = run(capsys, "analyze", "--m", "5", "--g", '{"a7":"0x1"}',
                         "--format", "csv")
    assert code == 0
    header = out.splitlines()[0]
    assert header == "name,lhs,rhs,relation,pass,hard,note"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, err = run(capsys, "analyze", "--m", "5", "--g", '{"a7":"0x1"}',
                         "--out", str(target))
    assert code == 0
    assert "PASS" in out and "hash=" in out
    doc = json.loads(target.read_text())
    assert doc["schema"] == "walsh-forge/1"


def test_custom_modulus(capsys):
    _, doc1 = run_json(capsys, "analyze", "--m", "5", "--g", '{"a7":"0x1"}')
    _, doc2 = run_json(capsys, "analyze", "--m", "5", "--modulus", "0x29",
                       "--g", '{"a7":"0x1"}')
    assert doc1["config"]["modulus"] == "0x25"
    assert doc2["config"]["modulus"] == "0x29"
    # structural invariants agree across representations
    assert doc1["summary"]["nl"] == doc2["summary"]["nl"]
    assert doc1["summary"]["sigma4_spectrum"] == doc2["summary"]["sigma4_spectrum"]


def test_bad_modulus_exits_2(capsys):
    code, out, err = run(capsys, "analyze", "--m", "5", "--modulus", "0x27",
                         "--g", '{"a7":"0x1"}')
    assert code == 2
