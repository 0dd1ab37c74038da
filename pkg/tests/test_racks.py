import random
from fractions import Fraction

import pytest

from qtwist import racks as R
from qtwist.cocycles import GroupCocycleTable
from qtwist.errors import BadTwistTable, CocycleViolation, NotBijective, NotSelfDistributive, UnsupportedN
from qtwist.yd import SymmetricGroup


def test_rack_validation():
    T = R.transposition_rack(3)
    assert T.rack.size == 3
    with pytest.raises(NotBijective):
        R.validate_rack([[0, 0], [0, 1]])
    with pytest.raises(NotSelfDistributive) as ei:
        R.validate_rack([[1, 0], [0, 1]])
    assert len(ei.value.witness) == 3


def test_cocycles_validate():
    for n in (3, 4):
        T = R.transposition_rack(n)
        for q in T.cocycles.values():
            R.validate_rack_cocycle(T.rack, q)


def test_cocycle_violation_witness():
    T = R.transposition_rack(3)
    rng = random.Random(3)
    while True:
        q = [[rng.choice((1, -1)) for _ in range(3)] for _ in range(3)]
        if R.rack_cocycle_violation(T.rack, q) is not None:
            break
    with pytest.raises(CocycleViolation) as ei:
        R.validate_rack_cocycle(T.rack, q)
    assert len(ei.value.witness) == 3


def test_twist_identity_and_restriction():
    T = R.transposition_rack(3)
    q = T.cocycles["chi"]
    qphi, valid, _ = R.twist_rack_cocycle(T.rack, q, lambda x, y: Fraction(1))
    assert valid and qphi == q
    # restriction of a group cocycle on S_3: the Pin-type sign table
    from importlib import util
    from pathlib import Path

    spec = util.spec_from_file_location("mk", Path(__file__).parents[1] / "scripts" / "make_phi_table.py")
    mk = util.module_from_spec(spec)
    spec.loader.exec_module(mk)
    G, vals = mk.table(3)
    tab = GroupCocycleTable.from_json({"group": "S3", "values": vals})
    _, valid, _ = R.twist_rack_cocycle(T.rack, q, lambda a, b: tab(T.perms[a], T.perms[b]))
    assert valid


def test_shipped_table_twists_chi_to_minus_one():
    T = R.transposition_rack(4)
    phi = R.load_phi_table(validate=True)
    qphi, valid, _ = R.twist_rack_cocycle(T.rack, T.cocycles["chi"], lambda a, b: phi(T.perms[a], T.perms[b]))
    assert valid
    assert all(v == -1 for row in qphi for v in row)


def test_search_tables():
    T = R.transposition_rack(4)
    for tab in R.search_twist_tables(4, 3):
        qphi, valid, _ = R.twist_rack_cocycle(T.rack, T.cocycles["chi"], lambda a, b: Fraction(tab[(a, b)]))
        assert valid and all(v == -1 for row in qphi for v in row)


def test_fk_counts():
    assert len(R.fk_relations(3, "minus_one").relations) == 3 + 2
    assert len(R.fk_relations(4, "minus_one").relations) == 6 + 3 + 8
    with pytest.raises(UnsupportedN):
        R.fk_relations(6, "chi")


def test_hilbert_degree_one():
    assert R.nichols_hilbert(4, "chi", 1) == [1, 6]


def test_hq_relations():
    P = R.build_hq(4, 2, 3)
    T = R.transposition_rack(4)
    G = T.group
    idx = P.labels.index("Lambda(12,34)")
    r = P.relations[idx]
    assert r.coefficient((), G.identity) == -2
    assert r.coefficient((), G.mul(G.transposition(1, 2), G.transposition(3, 4))) == 2
    idx = P.labels.index("Gamma(123)")
    assert P.relations[idx].coefficient((), G.identity) == -3
    P0 = R.build_hq(4, 0, 0)
    assert all(not any(m[0] == () for m in rel.terms) for rel in P0.relations)


def test_exp_deformation_and_undeformed():
    rep = R.verify_exp_deformation(4, 0)
    assert rep["pass"]
    rep = R.verify_exp_deformation(4, Fraction(5, 3))
    assert rep["pass"] and rep["Lambda"] == "10/3" and rep["Gamma"] == "5"


def test_compose_checks():
    phi = R.load_phi_table()
    rep0 = R.compose_with_group_twist(4, phi, 0)
    assert rep0["pass"]
    names = {c["family"] for c in rep0["checks"]}
    assert {"phi_step_matches_minus_one_model", "undeformed_products"} <= names
    with pytest.raises(BadTwistTable):
        R.compose_with_group_twist(4, R.load_phi_table("phi_s4_bad.json"), 1)


def test_compose_rejects_non_cocycle_passing_remark():
    phi = R.load_phi_table()
    G = SymmetricGroup(4)
    vals = dict(phi.values)
    g = G.parse("(123)")
    vals[(g, g)] = -phi(g, g)
    bad = GroupCocycleTable(G, vals, validate=False)
    with pytest.raises(CocycleViolation):
        R.compose_with_group_twist(4, bad, 1)
