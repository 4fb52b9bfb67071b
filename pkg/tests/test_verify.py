import json

import pytest

from oddhooks.verify import (
    REGISTRY,
    SUITES,
    Bounds,
    ClaimResult,
    VerificationReport,
    brute_F,
    brute_G,
    brute_omega,
    brute_T,
    claim_ids,
    run_claims,
    verify_all,
    verify_structure_lemmas,
    workers_from_env,
)


@pytest.fixture(scope="module")
def report24():
    return verify_all(24)


def test_brute_counts():
    assert brute_G(24, 2) == 112
    assert brute_F(6, 0, 1) == 0
    assert brute_T(9, 0, 1) + brute_F(9, 0, 1) == 8
    assert brute_omega(16, 2) == (4, 4, 8)


def test_verify_all_24_passes(report24):
    assert report24.ok, report24.to_text()
    assert report24.summary["fail"] == 0
    assert {c.id for c in report24.claims} == set(REGISTRY)


def test_counterexample_claim_is_included(report24):
    rows = report24.by_id()["char.counterexample"]
    assert {r.params["what"] for r in rows} >= {"|chi|", "in_G k=1"}
    assert all(r.passed for r in rows)


def test_report_round_trip(report24):
    text = report24.to_json()
    again = VerificationReport.from_json(text)
    assert again.to_json() == text
    d = json.loads(text)
    assert set(d) == {"version", "bounds", "claims", "summary"}
    assert set(d["claims"][0]) == {"id", "params", "expected", "actual", "pass", "ms"}


def test_report_is_deterministic_and_worker_independent():
    ids = ["counts.G", "counts.omega", "lemma.good_core_runners", "char.good_iff_unit_value"]
    b = Bounds().capped(16)
    serial = run_claims(ids, b, workers=1)
    again = run_claims(ids, b, workers=1)
    parallel = run_claims(ids, b, workers=2)
    canon = serial.to_json(timings=False)
    assert canon == again.to_json(timings=False) == parallel.to_json(timings=False)


def test_failures_are_data():
    rep = VerificationReport(bounds={}, claims=[ClaimResult("x", {}, 1, 2, False)])
    assert not rep.ok and rep.summary == {"pass": 0, "fail": 1}
    assert "FAIL x" in rep.to_text()
    assert rep.to_csv().splitlines()[0] == "id,params,expected,actual,pass,ms"


def test_suites_and_bounds():
    assert set(SUITES) == {fam.suite for fam in REGISTRY.values()}
    assert all(REGISTRY[c].suite == "lemmas" for c in claim_ids("lemmas"))
    assert Bounds().capped(20) == Bounds(20, 20, 20, 20)
    with pytest.raises(ValueError):
        verify_all(7)
    with pytest.raises(ValueError):
        claim_ids("nope")


def test_structure_lemmas_small():
    rep = verify_structure_lemmas(20)
    assert rep.ok
    assert all(c.id.startswith("lemma.") for c in rep.claims)
    assert "lemma.good_core_runners" in rep.by_id()


def test_workers_env(monkeypatch):
    monkeypatch.setenv("ODDHOOKS_WORKERS", "3")
    assert workers_from_env() == 3
    monkeypatch.setenv("ODDHOOKS_WORKERS", "zero")
    assert workers_from_env() == 1
