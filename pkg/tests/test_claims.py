import json

import pytest

from turan_lab.claims import MANIFEST, acceptance_claims, monotonicity_violations, tiny_quadruples, verify_claim
from turan_lab.errors import UnknownClaim

FINE_GRAINED = [cid for cid, c in MANIFEST.items() if c.criterion is None]


def test_acceptance_ids_in_criterion_order():
    assert [MANIFEST[c].criterion for c in acceptance_claims()] == list(range(1, 11))


def test_every_claim_has_anchor_and_check():
    for claim in MANIFEST.values():
        assert claim.anchor and callable(claim.check)


@pytest.mark.parametrize("claim_id", FINE_GRAINED)
def test_fine_grained_claims_pass(claim_id):
    rep = verify_claim(claim_id)
    assert rep.status == "pass", rep.details
    assert rep.details and json.dumps(rep.to_dict(), default=str)


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        verify_claim("no-such-claim")


def test_eta_closed_form_r4():
    rep = verify_claim("eta-remark", {"r": 4})
    assert rep.status == "pass"
    assert rep.details[0]["expected"] == "29/32"


def test_frp_alpha_r3_p5():
    rep = verify_claim("frp-alpha", {"r": 3, "p": 5})
    assert rep.status == "pass"
    got = {d["check"]: d["got"] for d in rep.details}
    assert any("16" == v for v in got.values()) and any("10" == v for v in got.values())


def test_K_property_instance():
    rep = verify_claim("K-property", {"r": 3, "a": 1, "k": 2, "p": 4, "n": 11})
    assert rep.status == "pass"


def test_failing_tolerance_reports_fail_with_seed():
    rep = verify_claim("rho-k2", {"n": 60, "tol": "1/10000"}, seed=5)
    assert rep.status == "fail" and rep.seed == 5


def test_errors_become_fail_reports():
    rep = verify_claim("K-property", {"r": 3, "a": 1, "k": 2, "p": 4, "n": 11, "k": 0})
    assert rep.status == "fail"
    assert rep.details[-1]["check"] == "raised"


def test_same_seed_same_details():
    a = verify_claim("hole-removal-suite", {"trials": 200}, seed=3)
    b = verify_claim("hole-removal-suite", {"trials": 200}, seed=3)
    assert a.details == b.details


def test_monotonicity_helpers():
    quads = list(tiny_quadruples())
    assert len(quads) == 139
    # T_3(n,3,3) = C(n,3) and T_3(n,n,3) = 1 for n = 4, 5
    good = {(4, 3, 3, 3): 4, (5, 3, 3, 3): 10, (4, 3, 4, 3): 1, (5, 3, 5, 3): 1}
    assert monotonicity_violations(good) == []
    bad = {(4, 3, 3, 3): 4, (5, 3, 3, 3): 3}
    assert monotonicity_violations(bad)
