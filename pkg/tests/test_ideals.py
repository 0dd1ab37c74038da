from fractions import Fraction

import pytest

from qtwist.errors import DegreeBudgetExceeded, InhomogeneousRelations
from qtwist.ideals import Presentation, equal_mod, graded_dimension, ideal_member
from qtwist.qgroups import build_ured, quotient_dj, ured_model
from qtwist.racks import fk_relations
from qtwist.smash import SmashModel
from qtwist.yd import FreeAbelianGroup, diagonal_yd

from _support import A2, SL2, datum


def qplane(q=6):
    G = FreeAbelianGroup(["g1", "g2"])
    # x_1 acts on x_2 by q through the degree g_1
    V = diagonal_yd(G, [(1, 0), (0, 1)], [[1, 1], [q, 1]])
    M = SmashModel(V, "qplane")
    x1, x2 = M.gen(0), M.gen(1)
    return M, x1, x2, Presentation(M, [x1 * x2 - (x2 * x1).scale(q)], ["r"], 3)


def test_relation_is_member():
    M, x1, x2, P = qplane()
    cert = ideal_member(P.relations[0], P)
    assert cert and len(cert.combination) == 1


def test_worked_example():
    M, x1, x2, P = qplane()
    u = x1 * x1 * x2 - (x2 * x1 * x1).scale(36)
    cert = ideal_member(u, P)
    assert cert
    assert cert.resum(P) == u
    assert cert.to_json(P)["decision"] is True
    v = x1 * x1 * x2 - x2 * x1 * x1
    for D in (3, 4, 5):
        assert not ideal_member(v, P, D)


def test_budget():
    M, x1, x2, P = qplane()
    with pytest.raises(DegreeBudgetExceeded):
        ideal_member(x1 * x1 * x1 * x1, P, 3)


def test_linking_relation_equal_mod():
    d = datum(SL2)
    P = build_ured(d)
    U = ured_model(d)
    lhs = U.x(0) * U.y(0)
    ell = d.linking[0]
    rhs = (U.y(0) * U.x(0)).scale(Fraction(1, 4)) + (U.K(0) * U.L(0) - U.smash.one()).scale(ell)
    assert equal_mod(lhs, lhs, P)
    assert equal_mod(lhs, rhs, P)


def test_free_model_separates():
    M, x1, x2, _ = qplane()
    P = Presentation(M, [], [], 2)
    assert not equal_mod(x1 * x2, x2 * x1, P)


def test_quotient_identifies_k_and_l_inverse():
    d = datum(A2)
    U = ured_model(d)
    Q = quotient_dj(build_ured(d))
    assert equal_mod(U.K(0), U.L(0, -1), Q, 2)
    assert not equal_mod(U.K(0), U.L(0, -1), build_ured(d), 2)


def test_graded_dimensions():
    M, x1, x2, P = qplane()
    assert graded_dimension(Presentation(M, [], [], 3), 3) == 8
    assert graded_dimension(P, 2) == 3
    assert graded_dimension(fk_relations(3, "minus_one"), 2) == 4


def test_inhomogeneous_rejected():
    M, x1, x2, _ = qplane()
    P = Presentation(M, [x1 * x2 - x1], [], 2)
    with pytest.raises(InhomogeneousRelations):
        graded_dimension(P, 2)
