import json

import pytest

from curvehilb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def coefficients(text):
    return [int(line.split("\t")[1]) for line in text.splitlines() if line and not line.startswith("#")]


def test_zseries_methods_agree(capsys):
    outs = []
    for method in ("closed", "partitions", "flag-oracle"):
        code, out, _ = run(capsys, "zseries", "--r", "5", "--s", "4", "--n", "2", "--order", "6",
                           "--method", method)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]
    assert coefficients(outs[0])[2:5] == [1, 1, 3]


def test_zseries_zero_below_minimal(capsys):
    code, out, _ = run(capsys, "zseries", "--r", "7", "--s", "5", "--n", "2", "--order", "3",
                       "--method", "partitions")
    assert code == 0 and coefficients(out) == [0, 0, 0, 0]


def test_zseries_hypotheses(capsys):
    code, _, err = run(capsys, "zseries", "--r", "6", "--s", "4", "--n", "2", "--order", "3")
    assert code == 1 and "gcd" in err
    code, out, _ = run(capsys, "zseries", "--r", "6", "--s", "4", "--n", "2", "--order", "3",
                       "--force", "--format", "json")
    assert code == 0 and json.loads(out)["unsupported"] is True


def test_hilb(capsys):
    code, out, _ = run(capsys, "hilb", "--gens", "2,3", "--order", "4", "--method", "oracle")
    assert code == 0 and coefficients(out) == [1, 1, 2, 2, 2]
    code, out, _ = run(capsys, "hilb", "--r", "5", "--t", "2", "--n", "2", "--order", "2",
                       "--method", "formula")
    assert coefficients(out) == [1, 1, 3]
    code, out, _ = run(capsys, "hilb", "--gens", "1", "--order", "3")
    assert coefficients(out) == [1, 1, 1, 1]
    code, out, _ = run(capsys, "hilb", "--r", "5", "--t", "2", "--n", "2", "--order", "8")
    _, formula, _ = run(capsys, "hilb", "--r", "5", "--t", "2", "--n", "2", "--order", "8",
                        "--method", "formula")
    assert out == formula


def test_csv_format(capsys):
    code, out, _ = run(capsys, "zseries", "--r", "5", "--s", "4", "--n", "2", "--order", "4",
                       "--format", "csv")
    assert out.splitlines() == ["exponent,coefficient", "0,0", "1,0", "2,1", "3,1", "4,3"]


def test_json_format(capsys):
    code, out, _ = run(capsys, "hilb", "--gens", "4,5,6", "--order", "2", "--format", "json")
    obj = json.loads(out)
    assert obj["series"] == {"offset": 0, "coeffs": ["1", "1", "3"], "order": 3}


def test_semigroup(capsys):
    code, out, _ = run(capsys, "semigroup", "--gens", "4,5")
    assert code == 0 and "genus: 6" in out and "conductor: 12" in out
    code, out, _ = run(capsys, "semigroup", "--gens", "4,5,6", "--format", "json")
    assert json.loads(out) == {"generators": [4, 5, 6], "conductor": 8, "genus": 4, "gaps": [1, 2, 3, 7]}
    code, _, _ = run(capsys, "semigroup", "--gens", "2,4")
    assert code == 1


def test_partitions(capsys):
    code, out, _ = run(capsys, "partitions", "--r", "7", "--s", "5", "--n", "2", "--check", "8,5,3,3,1")
    assert code == 0 and "is a member" in out
    code, out, _ = run(capsys, "partitions", "--r", "7", "--s", "5", "--n", "2", "--check", "8,8,3,3,1")
    assert "is not a member" in out
    code, out, _ = run(capsys, "partitions", "--r", "5", "--s", "4", "--n", "2", "--budget", "2",
                       "--format", "json")
    assert json.loads(out)["members"] == [[2, 2, 1, 1]]
    code, out, _ = run(capsys, "partitions", "--t", "2", "--m", "1", "--format", "json")
    assert json.loads(out)["members"] == [[], [1], [2], [2, 1]]
    code, _, _ = run(capsys, "partitions", "--r", "7", "--s", "5")
    assert code == 1


@pytest.mark.parametrize("argv", [[], ["nonsense"], ["zseries", "--r", "5"],
                                  ["hilb", "--gens", "2,x", "--order", "3"],
                                  ["zseries", "--r", "5", "--s", "4", "--n", "2", "--order", "-1"]])
def test_argument_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 1


def test_semantic_errors_exit_1(capsys):
    assert run(capsys, "hilb", "--gens", "2,3", "--r", "5", "--order", "3")[0] == 1
    assert run(capsys, "hilb", "--gens", "2,3", "--order", "3", "--method", "formula")[0] == 1
    assert run(capsys, "partitions", "--r", "7", "--s", "5", "--n", "2", "--check", "1,2")[0] == 1


def test_verify_default(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "default", "--report", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert data and all(r["status"] == "PASS" for r in data)


def test_verify_max_order(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "default", "--max-order", "2", "--format", "json")
    assert code == 0
    assert all(r["order"] <= 2 for r in json.loads(out) if "gens" not in r["params"])


def test_verify_bad_suite(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"name": "x", "params": {"r": 6, "s": 4, "n": 2}, "order": 4,
                                "routes": ["closed_form", "partition_enum"]}]))
    assert run(capsys, "verify", "--suite", str(bad))[0] == 1
    bad.write_text("{not json")
    assert run(capsys, "verify", "--suite", str(bad))[0] == 1
    bad.write_text(json.dumps([{"name": "x", "params": {"r": 5, "s": 4, "n": 2}, "order": 4,
                                "routes": ["closed_form", "mystery"]}]))
    assert run(capsys, "verify", "--suite", str(bad))[0] == 1


def test_verify_batch_file(capsys, tmp_path):
    suite = tmp_path / "suite.json"
    suite.write_text(json.dumps([
        {"name": "plus", "params": {"r": 7, "s": 5, "n": 2}, "order": 8, "routes": ["closed_form", "flag_oracle"]},
        {"name": "lci", "params": {"r": 7, "t": 2, "n": 3}, "order": 6, "routes": ["lci_formula", "semigroup_oracle"]},
        {"name": "forced", "params": {"r": 6, "s": 4, "n": 2}, "order": 5,
         "routes": ["closed_form", "partition_enum"], "force": True},
    ]))
    code, out, _ = run(capsys, "verify", "--suite", str(suite), "--format", "json", "--no-timing")
    assert code == 0
    data = json.loads(out)
    assert [r["status"] for r in data] == ["PASS"] * 3
    assert data[2]["unsupported"] is True and "unsupported" not in data[0]
    _, again, _ = run(capsys, "verify", "--suite", str(suite), "--format", "json", "--no-timing")
    assert again == out


def test_verify_exit_codes_for_fail_and_resource(capsys, tmp_path, monkeypatch):
    from curvehilb import verify
    from curvehilb.qseries import LaurentPoly
    from curvehilb.semigroup import ResourceError

    suite = tmp_path / "suite.json"
    suite.write_text(json.dumps([
        {"name": "plus", "params": {"r": 5, "s": 4, "n": 2}, "order": 6, "routes": ["closed_form", "flag_oracle"]}]))

    def broken(p, order):
        return verify.semigroup.flag_series_oracle(p, order) + LaurentPoly.monomial(3)

    monkeypatch.setitem(verify.ROUTES, "flag_oracle", verify.Route("rsn", broken))
    assert run(capsys, "verify", "--suite", str(suite))[0] == 2

    def exhausted(p, order):
        raise ResourceError("out of room")

    monkeypatch.setitem(verify.ROUTES, "flag_oracle", verify.Route("rsn", exhausted))
    assert run(capsys, "verify", "--suite", str(suite))[0] == 3


def test_output_is_reproducible(capsys):
    a = run(capsys, "hilb", "--gens", "4,9,14", "--order", "12", "--format", "csv")[1]
    b = run(capsys, "hilb", "--gens", "4,9,14", "--order", "12", "--format", "csv")[1]
    assert a == b
