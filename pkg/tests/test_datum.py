from fractions import Fraction

import pytest

from qtwist.datum import build_dj_datum, dj_twist_bicharacter, is_twist_equivalent, validate_reduced_datum
from qtwist.errors import CartanCompatibility, QiiOne, RootMismatch

A2 = [[2, -1], [-1, 2]]
Q = [[4, 6], [Fraction(1, 24), 4]]


def test_a2_default_linking():
    d = validate_reduced_datum(A2, Q)
    assert d.linking == (Fraction(4, 3), Fraction(4, 3))
    assert d.to_json()["q"] == [["4", "6"], ["1/24", "4"]]


def test_rejections():
    with pytest.raises(QiiOne):
        validate_reduced_datum(A2, [[1, 6], [Fraction(1, 24), 4]])
    with pytest.raises(CartanCompatibility):
        validate_reduced_datum(A2, [[4, 6], [1, 4]])


def test_zero_linking_warns():
    d = validate_reduced_datum(A2, Q, [0, 0])
    assert d.warnings


def test_twist_equivalence():
    half = Fraction(1, 2)
    assert is_twist_equivalent(Q, Q)
    assert is_twist_equivalent(Q, [[4, half], [half, 4]])
    assert not is_twist_equivalent(Q, [[9, half], [half, 4]])


def test_dj_datum():
    d = validate_reduced_datum(A2, Q)
    dj = build_dj_datum(d, [2])
    assert [list(r) for r in dj.qhat] == [[4, Fraction(1, 2)], [Fraction(1, 2), 4]]
    b2 = validate_reduced_datum([[2, -1], [-2, 2]], [[16, 2], [Fraction(1, 32), 4]])
    assert [list(r) for r in build_dj_datum(b2, [2]).qhat] == [[16, Fraction(1, 4)], [Fraction(1, 4), 4]]
    with pytest.raises(RootMismatch):
        build_dj_datum(d, [3])


def test_dj_bicharacter_is_lower_trivial():
    d = validate_reduced_datum(A2, Q)
    b = dj_twist_bicharacter(d, build_dj_datum(d, [2]))
    m = b.matrix
    assert all(m[i][j] == 1 for i in range(len(m)) for j in range(i))
    # sigma(K_1, K_2) on Z^4 ordered (L_1, L_2, K_1, K_2)
    assert b((0, 0, 1, 0), (0, 0, 0, 1)) == Fraction(1, 12)
