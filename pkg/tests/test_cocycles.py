import json
from fractions import Fraction

import pytest

from qtwist import cocycles as cc
from qtwist.errors import CocycleViolation, ModelMismatch, NotInvariant
from qtwist.qgroups import ured_model
from qtwist.racks import load_phi_table, rack_model, transposition_rack

from _support import A2, SL2, datum, dj_sigma

d = datum(A2)
U = ured_model(d)
M = U.smash
e = U.group.identity


def test_induced_values():
    s = dj_sigma(d)
    assert s.value(((), U.Kg(0)), ((), U.Kg(1))) == Fraction(1, 12)
    assert s.value(((0,), e), ((), U.Kg(1))) == 0
    assert s(U.x(0), U.K(1)) == 0


def test_inverse_is_convolution_inverse():
    s = dj_sigma(d)
    one = cc.convolve(s, s.inverse())
    monos = [((), e), ((), U.Kg(0)), ((0,), e), ((0, 2), U.Lg(1))]
    for a in monos:
        for b in monos:
            assert one.value(a, b) == (0 if a[0] or b[0] else 1)


def test_twisted_action_identity():
    s = dj_sigma(d)
    assert cc.twisted_action(s, e, U.x(0) * U.y(1)) == U.x(0) * U.y(1)


def test_table_cocycle_validation():
    phi = load_phi_table(validate=True)
    G = phi.group
    bad = dict(phi.values)
    g = G.parse("(123)")
    bad[(g, g)] = -phi(g, g)
    with pytest.raises(CocycleViolation) as ei:
        cc.GroupCocycleTable(G, bad)
    assert len(ei.value.witness) == 3


def test_table_json_roundtrip():
    phi = load_phi_table()
    again = cc.GroupCocycleTable.from_json(json.loads(json.dumps(phi.to_json())))
    assert again.values == phi.values


def test_exp_cocycle_invariance():
    A = rack_model(3, "chi")
    T = transposition_rack(3)
    # a single nonzero entry is not invariant under the S_3 action
    with pytest.raises(NotInvariant):
        cc.exp_cocycle(A, {(0, 0): 1})
    sigma = cc.exp_cocycle(rack_model(3, "minus_one"), [[1] * 3] * 3, Fraction(1, 3))
    a = ((T.pair_index(1, 2),), T.group.identity)
    assert sigma.value(a, a) == Fraction(1, 3)


def test_deformed_antipode_trivial_for_counit():
    eps = cc.counit_cocycle(M)
    for u in (U.x(0), U.K(1), U.x(0) * U.y(1)):
        assert cc.deform_product(eps, u, U.x(1)) == u * U.x(1)
        from qtwist.smash import antipode

        assert cc.deform_antipode(eps, u) == antipode(u)


def test_model_mismatch():
    s = dj_sigma(d)
    other = ured_model(datum(SL2)).smash
    with pytest.raises(ModelMismatch):
        s(other.one(), other.one())


def test_json_dispatch():
    s = dj_sigma(d)
    again = cc.cocycle_from_json(M, s.to_json())
    assert again.value(((), U.Kg(0)), ((), U.Kg(1))) == Fraction(1, 12)
    inv = cc.cocycle_from_json(M, {"kind": "inverse", "of": s.to_json()})
    assert inv.value(((), U.Kg(0)), ((), U.Kg(1))) == 12


def test_defect_detects_non_cocycle():
    class Bad(cc.HopfCocycle):
        def _value(self, a, b):
            return Fraction(2) if (a[1] == U.Kg(0) and b[1] == U.Kg(0)) else (0 if a[0] or b[0] else 1)

    bad = Bad(M)
    k, kinv = ((), U.Kg(0)), ((), U.Kg(0, -1))
    assert cc.cocycle_identity_defect(bad, k, k, kinv) != 0
