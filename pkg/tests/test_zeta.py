from fractions import Fraction

import pytest

from curveclass import (
    BudgetExceeded,
    LPolynomial,
    class_number,
    count_points,
    l_polynomial,
    pic_p_nontrivial,
)
from curveclass.errors import CurveClassError
from util import E_H3_F3, E_H6_F3, E_Z4_F3, G2_X5PX, build


def test_projective_line_trivial():
    lp = l_polynomial(build(3))
    assert lp.coeffs == (1,)
    assert lp.class_number == 1


def test_pinned_elliptic():
    lp = l_polynomial(build(3, f=E_Z4_F3))
    assert lp.coeffs == (1, 0, 3)       # supersingular, trace 0
    assert lp.class_number == 4
    lp = l_polynomial(build(3, f=E_H3_F3))
    assert lp.coeffs == (1, -1, 3)
    assert lp.class_number == 3
    lp = l_polynomial(build(3, f=E_H6_F3))
    assert lp.coeffs == (1, 2, 3)
    assert lp.class_number == 6


def test_pinned_char2():
    lp = l_polynomial(build(2, f=[1, 0, 0, 1], h=[0, 1]))
    assert lp.coeffs == (1, 1, 2)
    assert lp.class_number == 4
    lp = l_polynomial(build(2, f=[0, 0, 0, 0, 0, 1], h=[1]))
    assert lp.coeffs == (1, 0, 0, 0, 4)
    assert lp.class_number == 5


def test_pinned_genus2_family():
    for q, want_l, want_h in [
        (3, (1, 0, 2, 0, 9), 12),
        (5, (1, 0, 10, 0, 25), 36),
        (7, (1, 0, 14, 0, 49), 64),
    ]:
        lp = l_polynomial(build(q, f=G2_X5PX))
        assert lp.coeffs == want_l
        assert lp.class_number == want_h


def test_functional_equation_enforced():
    # a_2 must equal q for genus 1; 5 violates it for q = 3
    with pytest.raises(CurveClassError):
        LPolynomial(q=3, genus=1, coeffs=(1, 0, 5))


def test_weil_bound_enforced():
    # |a_1| <= 2 sqrt(3) < 4
    with pytest.raises(CurveClassError):
        LPolynomial(q=3, genus=1, coeffs=(1, 4, 3))


def test_positive_class_number_enforced():
    with pytest.raises(CurveClassError):
        LPolynomial(q=2, genus=1, coeffs=(1, -4, 2))


def test_predicted_counts_match_direct():
    for kwargs in [
        dict(p=3, f=list(E_Z4_F3)),
        dict(p=3, f=list(G2_X5PX)),
        dict(p=2, f=[1, 0, 0, 1], h=[0, 1]),
    ]:
        c = build(**kwargs)
        lp = l_polynomial(c)
        for n in range(1, 2 * c.genus + 3):
            assert lp.predicted_count(n) == count_points(c, n), (kwargs, n)


def test_evaluate_exact():
    lp = l_polynomial(build(3, f=E_Z4_F3))
    assert lp.evaluate(1) == 4
    assert lp.evaluate(Fraction(1, 3)) == Fraction(4, 3)


def test_class_number_helper():
    assert class_number(build(2)) == 1
    assert class_number(build(3, f=E_H6_F3)) == 6


def test_pic_p():
    lp = l_polynomial(build(3, f=E_H6_F3))
    assert pic_p_nontrivial(lp, 2)
    assert pic_p_nontrivial(lp, 3)
    assert not pic_p_nontrivial(lp, 5)


def test_zeta_budget():
    with pytest.raises(BudgetExceeded):
        l_polynomial(build(3, f=G2_X5PX), budget=5)


def test_json_shape():
    lp = l_polynomial(build(3, f=E_Z4_F3))
    data = lp.to_json()
    assert data == {
        "q": 3,
        "genus": 1,
        "coefficients": [1, 0, 3],
        "class_number": 4,
    }
