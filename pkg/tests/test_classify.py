import importlib
import json
import random

import pytest

classify_mod = importlib.import_module("curveclass.classify")
from curveclass import (
    CharacteristicClash,
    InconsistentInput,
    MarkedInstance,
    UnknownClosedPoint,
    UnsupportedCase,
    classify,
    closed_points,
    euler_bookkeeping,
    fundamental_group_case,
    mu_p_in_field,
    resolve_point_ids,
)
from curveclass.errors import CurveClassError
from util import E_H3_F3, E_H6_F3, E_Z4_F3, G2_X5PX, build


def run(curve, p, S=(), T=()):
    return classify(MarkedInstance(curve, S, T, p))


# ---------------------------------------------------------------------------
# helpers

def test_mu_p():
    assert mu_p_in_field(4, 3)
    assert not mu_p_in_field(2, 3)
    assert mu_p_in_field(3, 2)
    with pytest.raises(CharacteristicClash):
        mu_p_in_field(9, 3)


def test_fundamental_group_case():
    assert fundamental_group_case([1], 2) == 0
    assert fundamental_group_case([2, 4], 2) == 1
    assert fundamental_group_case([4, 8], 2) == 2
    assert fundamental_group_case([6, 9], 3) == 1
    with pytest.raises(CurveClassError):
        fundamental_group_case([], 2)


def test_euler_examples():
    assert euler_bookkeeping(0, 1, 0) == {
        "s": 0, "t": 1, "h1": 0, "rho": 1, "h2": 0,
        "chi_ok": True, "rho_in_range": True}
    assert euler_bookkeeping(0, 2, 0) == {
        "s": 0, "t": 2, "h1": 0, "rho": 1, "h2": 1,
        "chi_ok": True, "rho_in_range": True}
    assert euler_bookkeeping(0, 1, 1) == {
        "s": 0, "t": 1, "h1": 1, "rho": 0, "h2": 1,
        "chi_ok": True, "rho_in_range": True}


def test_euler_rejects_bad_dims():
    with pytest.raises(InconsistentInput):
        euler_bookkeeping(0, 1, 2)  # h1 > 1 + s
    with pytest.raises(InconsistentInput):
        euler_bookkeeping(-1, 1, 0)


def test_resolve_point_ids():
    c = build(2)
    pts = resolve_point_ids(c, ["d1#0", "d2#0"])
    assert [pt.degree for pt in pts] == [1, 2]
    with pytest.raises(UnknownClosedPoint):
        resolve_point_ids(c, ["d1#7"])
    with pytest.raises(UnknownClosedPoint):
        resolve_point_ids(c, ["bogus"])


# ---------------------------------------------------------------------------
# the seven cases

def test_case1_punctured():
    rep = run(build(2), 2, S=["d1#0"])
    assert rep.case == 1
    assert rep.justification == "thm1.2(i)"
    assert rep.verdict == "KPI1_TRUE"
    assert rep.cd_bound == "=1"
    # no arithmetic was consulted
    assert rep.invariants["h"] is None
    assert rep.invariants["s"] == "unknown"
    assert rep.euler is None


def test_case1_never_computes_zeta(monkeypatch):
    def boom(*a, **k):
        raise AssertionError("zeta consulted in case 1")

    monkeypatch.setattr(classify_mod, "l_polynomial", boom)
    monkeypatch.setattr(classify_mod, "jacobian_group", boom)
    rng = random.Random(0xCA5E1)
    pool = [
        build(2),
        build(3),
        build(3, f=list(E_Z4_F3)),
        build(2, f=[1, 0, 0, 1], h=[0, 1]),
        build(3, f=list(G2_X5PX)),
    ]
    for _ in range(50):
        curve = rng.choice(pool)
        pts = [pt.id for pt in closed_points(curve, 2)]
        rng.shuffle(pts)
        k = rng.randrange(1, min(3, len(pts)) + 1)
        S = pts[:k]
        rest = pts[k:]
        T = rest[: rng.randrange(0, 3)]
        rep = run(curve, curve.field.p, S=S, T=T)
        assert rep.case == 1
        assert rep.verdict == "KPI1_TRUE"


def test_case2_proper_unmarked():
    rep = run(build(3), 3)
    assert rep.case == 2
    assert rep.justification == "thm1.2(ii)"
    assert rep.verdict == "KPI1_TRUE"
    assert rep.cd_bound == "≤2"
    assert rep.invariants["h"] == 1
    assert rep.invariants["s"] == 0
    assert rep.euler["h1"] == 1
    assert rep.euler["chi_ok"] and rep.euler["rho_in_range"]


def test_case2_oracle_out_of_reach():
    # char-2 model: oracle unsupported, s stays unknown, verdict unaffected
    rep = run(build(2, f=[1, 0, 0, 1], h=[0, 1]), 2)
    assert rep.case == 2
    assert rep.verdict == "KPI1_TRUE"
    assert rep.invariants["h"] == 4
    assert rep.invariants["s"] == "unknown"
    assert rep.euler is None


def test_case3_single_tame_point_true():
    rep = run(build(3), 3, T=["d1#0"])
    assert rep.case == 3
    assert rep.justification == "thm1.3(i)"
    assert rep.verdict == "KPI1_TRUE"
    assert rep.pi1_description == "trivial"
    assert rep.pi1_r == 0
    assert rep.cd_bound == "=0 (trivial group)"
    assert rep.invariants["s"] == 0
    assert rep.euler == {
        "s": 0, "t": 1, "h1": 0, "rho": 1, "h2": 0,
        "chi_ok": True, "rho_in_range": True}


def test_case3_p_divides_degree_false():
    rep = run(build(2), 2, T=["d2#0"])
    assert rep.case == 3
    assert rep.verdict == "KPI1_FALSE"
    assert rep.pi1_description == "cyclic of order p^r"
    assert rep.pi1_r == 1
    assert rep.cd_bound == "∞ (finite nontrivial group)"
    assert rep.euler["h1"] == 1


def test_case3_two_points_false_with_trivial_group():
    rep = run(build(2), 2, T=["d1#0", "d1#1"])
    assert rep.case == 3
    assert rep.verdict == "KPI1_FALSE"
    assert rep.pi1_r == 0
    assert rep.cd_bound == "=0 (trivial group)"
    assert rep.euler == {
        "s": 0, "t": 2, "h1": 0, "rho": 1, "h2": 1,
        "chi_ok": True, "rho_in_range": True}


def test_case3_on_elliptic_curve():
    # h = 4, p = 3 coprime: single degree-1 marked point is decisive
    rep = run(build(3, f=list(E_Z4_F3)), 3, T=["d1#1"])
    assert rep.case == 3
    assert rep.verdict == "KPI1_TRUE"
    assert rep.invariants["h"] == 4


def test_case4_ihara_refutes():
    rep = run(build(3, f=list(E_H3_F3)), 3, T=["d1#0"])
    assert rep.case == 4
    assert rep.justification == "thm1.3(ii)"
    assert rep.verdict == "KPI1_FALSE"
    assert rep.pi1_description == "finite (Ihara)"
    assert rep.invariants["h"] == 3
    ih = rep.invariants["ihara"]
    assert ih["exceeds"] is True
    assert ih["threshold"] == 0
    # the degree-1 term 1/(sqrt3 - 1) = (1 + sqrt3)/2
    assert ih["value"]["a"] == "1/2"
    assert ih["value"]["b"] == "1/2"
    assert rep.euler is None


def test_case5_open():
    rep = run(build(3, f=list(G2_X5PX)), 3, T=["d2#0"])
    assert rep.case == 5
    assert rep.justification == "open"
    assert rep.verdict == "UNDETERMINED"
    assert rep.invariants["h"] == 12
    assert rep.invariants["ihara"]["exceeds"] is False
    assert rep.invariants["ihara"]["threshold"] == 1
    assert rep.cd_bound == "unknown"


def test_case6_no_roots_of_unity():
    # p = 5 does not divide q - 1 = 2
    rep = run(build(3, f=list(E_Z4_F3)), 5)
    assert rep.case == 6
    assert rep.justification == "thm1.4"
    assert rep.verdict == "KPI1_TRUE"
    assert rep.invariants["mu_p"] is False


def test_case6_nontrivial_pic():
    # mu_2 in F_3, and 2 | h = 4
    rep = run(build(3, f=list(E_Z4_F3)), 2)
    assert rep.case == 6
    assert rep.verdict == "KPI1_TRUE"
    assert rep.invariants["mu_p"] is True
    assert rep.invariants["pic_p_nontrivial"] is True
    assert rep.invariants["s"] == 1  # Z/4 has one Z/2 factor
    assert rep.cd_bound == "unknown"


def test_case7_zp_quotient():
    rep = run(build(3, f=list(E_H3_F3)), 2)
    assert rep.case == 7
    assert rep.justification == "thm1.4(remaining)"
    assert rep.verdict == "KPI1_FALSE"
    assert rep.pi1_description == "≅ Z_p"
    assert rep.cd_bound == "=1"
    assert rep.invariants["pic_p_nontrivial"] is False
    assert rep.invariants["s"] == 0
    assert rep.note is not None


def test_unsupported_marked_away_from_char():
    with pytest.raises(UnsupportedCase):
        run(build(3, f=list(E_Z4_F3)), 2, S=["d1#0"])
    with pytest.raises(UnsupportedCase):
        run(build(3, f=list(E_Z4_F3)), 2, T=["d1#1"])


def test_overlapping_s_t_rejected():
    with pytest.raises(InconsistentInput):
        run(build(2), 2, S=["d1#0"], T=["d1#0"])


def test_nonprime_p_rejected():
    with pytest.raises(CurveClassError):
        run(build(2), 6)


def test_unknown_id_rejected():
    with pytest.raises(UnknownClosedPoint):
        run(build(2), 2, S=["d1#99"])


# ---------------------------------------------------------------------------
# report wire format

def test_report_key_order():
    rep = run(build(3), 3, T=["d1#0"])
    data = rep.to_json()
    assert list(data) == [
        "case_tag", "justification", "verdict", "cd_bound",
        "pi1_description", "pi1_r", "invariants", "euler", "note"]
    assert list(data["invariants"]) == [
        "q", "g", "h", "pic_p_nontrivial", "s", "ihara", "mu_p"]


def test_report_deterministic():
    a = json.dumps(run(build(3, f=list(G2_X5PX)), 3, T=["d2#0"]).to_json())
    b = json.dumps(run(build(3, f=list(G2_X5PX)), 3, T=["d2#0"]).to_json())
    assert a == b
