import json
import re
from fractions import Fraction

import pytest

from multiharm import cli, identities
from multiharm.identities import IdentityDescriptor, int_axis


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_seq_harmonic_like_exact_table(capsys):
    code, out = run(capsys, "seq", "--family", "harmonic_like", "--m", "2", "--n", "5")
    assert code == 0
    assert out == "n,value\n0,0\n1,0\n2,1\n3,2\n4,35/12\n5,15/4\n"


def test_seq_stirling_table(capsys):
    code, out = run(capsys, "seq", "--family", "stirling1", "--k", "2", "--n", "5")
    assert code == 0
    assert out.endswith("5,-50\n")


def test_seq_rejects_bad_parameters(capsys):
    code, _ = run(capsys, "seq", "--family", "harmonic_like", "--m", "-1", "--n", "3")
    assert code == 2
    code, _ = run(capsys, "seq", "--family", "stirling1", "--n", "3")
    assert code == 2
    code, _ = run(capsys, "seq", "--family", "no_such", "--n", "3")
    assert code == 2


def test_seq_csv_and_json_share_rational_strings(capsys):
    code, csv_out = run(capsys, "seq", "--family", "harmonic", "--n", "6")
    assert code == 0
    code, json_out = run(capsys, "seq", "--family", "harmonic", "--n", "6", "--format", "json")
    assert code == 0
    csv_values = [line.split(",")[1] for line in csv_out.strip().splitlines()[1:]]
    json_values = [row["value"] for row in json.loads(json_out)]
    assert csv_values == json_values


def test_seq_decimal_adds_a_column_without_replacing_exact(capsys):
    code, out = run(capsys, "seq", "--family", "harmonic", "--n", "2", "--decimal", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,value,approx"
    assert lines[3].startswith("2,3/2,1.5")


def test_verify_single_identity_with_bounds(capsys):
    code, out = run(capsys, "verify", "--id", "cor_id1", "--n-max", "10", "--m-max", "3")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1
    report = reports[0]
    assert report["identity"] == "cor_id1"
    assert report["cases"] == 44
    assert report["passed"] is True
    assert report["first_failure"] is None
    assert set(report) == {"identity", "anchor", "cases", "passed", "first_failure", "elapsed_ms"}


def test_verify_unknown_id_is_usage_error(capsys):
    code, _ = run(capsys, "verify", "--id", "no_such")
    assert code == 2


def test_verify_unknown_tag_yields_empty_list(capsys):
    code, out = run(capsys, "verify", "--tag", "no_such_tag")
    assert code == 0
    assert json.loads(out) == []


def test_verify_tag_filter(capsys):
    code, out = run(capsys, "verify", "--tag", "section1")
    assert code == 0
    reports = json.loads(out)
    assert reports and all(r["passed"] for r in reports)


def test_verify_section4_tag(capsys):
    code, out = run(capsys, "verify", "--tag", "section4")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) >= 20
    assert all(r["passed"] for r in reports)


def test_verify_failure_sets_exit_one(capsys, monkeypatch):
    broken = IdentityDescriptor(
        id="zz_broken_fixture",
        title="broken on purpose",
        anchor="n = n + 1",
        tags=("fixture",),
        axes=(int_axis("n", 1, 5),),
        lhs=lambda n: Fraction(n),
        rhs=lambda n: Fraction(n + 1),
    )
    monkeypatch.setitem(identities._REGISTRY, broken.id, broken)
    code, out = run(capsys, "verify", "--id", "zz_broken_fixture")
    assert code == 1
    report = json.loads(out)[0]
    assert report["passed"] is False
    assert report["first_failure"]["binding"] == {"n": 1}


def test_gf_check_harmonic_like(capsys):
    code, out = run(capsys, "gf-check", "--family", "harmonic_like", "--m", "3", "--order", "40")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,recurrence_value,gf_value,equal"
    assert len(lines) == 42
    assert all(line.endswith(",true") for line in lines[1:])


def test_gf_check_odd_central(capsys):
    code, out = run(capsys, "gf-check", "--family", "odd_central", "--order", "30")
    assert code == 0
    assert ",false" not in out


def test_gf_check_rejects_unsupported_family(capsys):
    code, _ = run(capsys, "gf-check", "--family", "fibonacci", "--order", "5")
    assert code == 2


def test_transform_binomial_sum_rows(capsys):
    code, out = run(capsys, "transform", "--a", "1", "--b", "1", "--m", "1", "--n", "2")
    assert code == 0
    assert out == "n,value\n2,7/2\n"
    code, out = run(capsys, "transform", "--a", "-1", "--b", "1", "--m", "2", "--n", "3")
    assert code == 0
    assert out == "n,value\n3,1\n"
    code, out = run(capsys, "transform", "--a", "0", "--b", "0", "--m", "0", "--n", "0")
    assert code == 0
    assert out == "n,value\n0,1\n"


def test_transform_family_mode(capsys):
    code, out = run(capsys, "transform", "--family", "harmonic", "--n", "3", "--signed")
    assert code == 0
    assert out == "n,value\n0,0\n1,-1\n2,-1/2\n3,-1/3\n"


def test_transform_rejects_mixed_modes(capsys):
    code, _ = run(capsys, "transform", "--family", "harmonic", "--a", "1", "--b", "1", "--n", "2")
    assert code == 2
    code, _ = run(capsys, "transform", "--n", "2")
    assert code == 2
    code, _ = run(capsys, "transform", "--a", "1", "--n", "2")
    assert code == 2


def test_transform_rejects_bad_rational(capsys):
    code, _ = run(capsys, "transform", "--a", "x", "--b", "1", "--n", "2")
    assert code == 2


def test_output_file_and_output_dir_env(tmp_path, monkeypatch, capsys):
    target = tmp_path / "direct.csv"
    code, out = run(capsys, "seq", "--family", "harmonic", "--n", "3", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().endswith("3,11/6\n")

    monkeypatch.setenv("MULTIHARM_OUTPUT_DIR", str(tmp_path / "sub"))
    code, _ = run(capsys, "seq", "--family", "harmonic", "--n", "3", "--output", "rel.csv")
    assert code == 0
    assert (tmp_path / "sub" / "rel.csv").read_text() == target.read_text()


def test_usage_error_exit_code(capsys):
    assert cli.main(["seq"]) == 2  # missing required flags
    capsys.readouterr()
    assert cli.main([]) == 2
    capsys.readouterr()


def test_verify_output_is_deterministic(capsys):
    strip = lambda text: re.sub(r'"elapsed_ms": [0-9.]+', '"elapsed_ms": X', text)
    code1, out1 = run(capsys, "verify", "--tag", "section1")
    code2, out2 = run(capsys, "verify", "--tag", "section1")
    assert code1 == code2 == 0
    assert strip(out1) == strip(out2)
