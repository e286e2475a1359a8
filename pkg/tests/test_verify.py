import json

import pytest

from curvehilb.formulas import LciParams
from curvehilb.partitions import RsnParams
from curvehilb.qseries import LaurentPoly
from curvehilb.semigroup import ResourceError
from curvehilb.verify import (ROUTES, CheckSpec, HypothesisError, Route, Status, all_passed,
                              default_suite, render_table, run_check, run_suite, verify_decomposition,
                              verify_lci, verify_minimal_size, verify_plus_curve, verify_stabilization)


@pytest.mark.parametrize("p", [RsnParams(5, 4, 2), RsnParams(7, 5, 2)], ids=str)
def test_plus_curve(p):
    reports = verify_plus_curve(p, 8)
    assert [r.status for r in reports] == [Status.PASS] * 3


def test_plus_curve_hypotheses():
    assert all_passed(verify_plus_curve(RsnParams(5, 4, 3), 6))
    with pytest.raises(HypothesisError):
        verify_plus_curve(RsnParams(6, 4, 2), 6)
    # r > s fails here but every route is still computable
    forced = verify_plus_curve(RsnParams(5, 6, 2), 8, force=True)
    assert all_passed(forced)
    assert all(not r.supported for r in forced)
    assert all(r.to_json()["unsupported"] for r in forced)


def test_decomposition():
    assert all_passed(verify_decomposition(RsnParams(5, 4, 2), 8))
    assert all_passed(verify_decomposition(RsnParams(7, 5, 2), 6))
    split = CheckSpec("split", {"r": 7, "s": 5, "n": 2}, 10, ("partition_enum_split", "partition_enum"))
    assert run_check(split).passed


def test_lci():
    assert verify_lci(LciParams(5, 2, 2), 8).passed
    a = verify_lci(LciParams(5, 3, 2), 6)
    assert a.passed and a.lhs == verify_lci(LciParams(5, 2, 2), 6).lhs
    assert verify_lci(LciParams(7, 2, 3), 6).passed
    with pytest.raises(HypothesisError):
        verify_lci(LciParams(6, 2, 2), 4)


def test_minimal_size():
    r = verify_minimal_size(RsnParams(5, 4, 2))
    assert r.passed and r.lhs == LaurentPoly.constant(6)
    assert verify_minimal_size(RsnParams(7, 6, 2)).passed
    assert verify_minimal_size(RsnParams(7, 3, 3)).passed
    with pytest.raises(HypothesisError):
        verify_minimal_size(RsnParams(7, 5, 2))


def test_stabilization():
    assert verify_stabilization((2, 3), 8).passed
    assert verify_stabilization((4, 5, 6), 12).passed
    assert verify_stabilization((1,), 5).passed
    with pytest.raises(HypothesisError):
        verify_stabilization((4, 5), 12)


def test_empty_suite_passes():
    reports = run_suite([])
    assert reports == [] and all_passed(reports)


def corrupt(series):
    return series + LaurentPoly.monomial(5)


def test_corrupted_route_gives_one_fail():
    routes = dict(ROUTES)
    routes["flag_oracle"] = Route("rsn", lambda p, order: corrupt(ROUTES["flag_oracle"].compute(p, order)))
    specs = [
        CheckSpec("a", {"r": 5, "s": 4, "n": 2}, 8, ("closed_form", "partition_enum")),
        CheckSpec("b", {"r": 5, "s": 4, "n": 2}, 8, ("closed_form", "flag_oracle")),
        CheckSpec("c", {"r": 5, "t": 2, "n": 2}, 6, ("lci_formula", "semigroup_oracle")),
    ]
    reports = run_suite(specs, routes=routes)
    assert [r.status for r in reports] == [Status.PASS, Status.FAIL, Status.PASS]
    bad = reports[1]
    assert bad.first_mismatch == 5
    assert bad.mismatch_coefficients == (bad.lhs.coeff(5), bad.lhs.coeff(5) + 1)
    assert "first mismatch at q^5" in render_table(reports)


def test_resource_is_reported_not_raised():
    def exhausted(p, order):
        raise ResourceError("table too small")
    routes = dict(ROUTES, flag_oracle=Route("rsn", exhausted))
    spec = CheckSpec("x", {"r": 5, "s": 4, "n": 2}, 8, ("closed_form", "flag_oracle"))
    (report,) = run_suite([spec], routes=routes)
    assert report.status is Status.RESOURCE and not report.passed


def test_short_window_is_never_pass():
    routes = dict(ROUTES, partition_enum=Route("rsn", lambda p, order: LaurentPoly.zero(2)))
    spec = CheckSpec("x", {"r": 7, "s": 5, "n": 2}, 3, ("closed_form", "partition_enum"))
    assert run_check(spec, routes).status is Status.RESOURCE


def test_pass_is_monotone_in_order():
    p = RsnParams(7, 4, 3)
    for order in range(0, 10):
        assert all_passed(verify_plus_curve(p, order))


def test_spec_validation():
    with pytest.raises(ValueError):
        CheckSpec("x", {"r": 5, "s": 4, "n": 2}, 4, ("closed_form", "closed_form")).validate()
    with pytest.raises(ValueError):
        CheckSpec("x", {"r": 5, "s": 4, "n": 2}, 4, ("closed_form", "nope")).validate()
    with pytest.raises(ValueError):
        CheckSpec("x", {"r": 5, "t": 2, "n": 2}, 4, ("closed_form", "lci_formula")).validate()
    with pytest.raises(ValueError):
        CheckSpec("x", {"r": 5, "n": 2}, 4, ("closed_form", "partition_enum")).validate()
    with pytest.raises(ValueError):
        CheckSpec.from_json({"name": "x"})


def test_spec_json_roundtrip():
    spec = CheckSpec("x", {"r": 5, "s": 4, "n": 2}, 4, ("closed_form", "partition_enum"))
    assert CheckSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec


def test_report_schema():
    report = verify_lci(LciParams(5, 2, 2), 4)
    obj = report.to_json()
    for key in ("name", "params", "order", "status", "lhs", "rhs", "first_mismatch", "elapsed_ms"):
        assert key in obj
    assert obj["status"] == "PASS" and obj["first_mismatch"] is None
    assert LaurentPoly.from_json(obj["lhs"]) == report.lhs


def test_reports_are_deterministic():
    specs = default_suite()[:12]
    a = [r.to_json(timing=False) for r in run_suite(specs)]
    b = [r.to_json(timing=False) for r in run_suite(specs, workers=2)]
    assert a == b


def test_capping():
    specs = [s.capped(2) for s in default_suite()]
    for s in specs:
        if s.kind == "stab":
            continue
        assert s.order <= 2
    assert all_passed(run_suite(specs))
