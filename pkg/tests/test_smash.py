import itertools
from fractions import Fraction

import pytest

from qtwist.errors import NotHomogeneous
from qtwist.qgroups import ured_model
from qtwist.racks import rack_model
from qtwist.smash import (
    antipode,
    braided_adjoint,
    coproduct,
    counit,
    multiply,
    tensor_multiply,
    tensor_of,
    weight,
)

from _support import A2, datum

U = ured_model(datum(A2))
M = U.smash
e = U.group.identity


def _sum(*ts):
    out = {}
    for t in ts:
        for k, v in t.items():
            out[k] = out.get(k, 0) + v
            if not out[k]:
                del out[k]
    return out


def test_multiply_examples():
    assert U.K(0) * U.x(1) == M.mono((1,), U.Kg(0), 6)
    assert U.x(0) * U.x(1) == M.mono((0, 1))
    assert U.K(0) * U.K(0, -1) == M.one()


def test_coproduct_examples():
    assert coproduct(U.x(0)) == _sum(tensor_of(U.x(0), M.one()), tensor_of(U.K(0), U.x(0)))
    g = U.K(1) * U.L(0, 2)
    assert coproduct(g) == tensor_of(g, g)
    assert len(coproduct(U.x(0) * U.x(1))) == 4


def test_antipode_examples():
    assert antipode(U.K(0)) == U.K(0, -1)
    assert antipode(U.x(0)) == M.mono((0,), U.Kg(0, -1), Fraction(-1, 4))


def test_braided_adjoint_examples():
    assert braided_adjoint(0, U.x(1)) == U.x(0) * U.x(1) - (U.x(1) * U.x(0)).scale(6)
    assert braided_adjoint(0, U.x(0)) == (U.x(0) * U.x(0)).scale(-3)
    assert braided_adjoint(2, U.y(1)) == U.y(0) * U.y(1) - (U.y(1) * U.y(0)).scale(24)


def test_weight_and_counit():
    assert weight(U.K(0)) == (U.Kg(0), U.Kg(0))
    assert weight(U.x(0)) == (U.Kg(0), e)
    assert weight(M.mono((0, 1), U.Kg(0))) == ((0, 0, 2, 1), U.Kg(0))
    with pytest.raises(NotHomogeneous):
        weight(U.x(0) + U.x(1))
    assert counit(U.K(0)) == 1
    assert counit(M.mono((0,), U.Kg(1))) == 0
    assert counit(M.one().scale(3) + U.x(0)) == 3


def _monos(model, maxlen, groups):
    N = model.yd.N
    for n in range(maxlen + 1):
        for w in itertools.product(range(N), repeat=n):
            for g in groups:
                yield model.mono(w, g)


MODELS = [
    (M, [e, U.Kg(0), U.Lg(1, -1)]),
    (rack_model(3, "chi"), [(0, 1, 2), (1, 0, 2), (1, 2, 0)]),
]


@pytest.mark.parametrize("model,groups", MODELS)
def test_associativity(model, groups):
    ms = list(_monos(model, 1, groups))
    for a, b, c in itertools.product(ms, repeat=3):
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@pytest.mark.parametrize("model,groups", MODELS)
def test_coassociativity_and_bialgebra(model, groups):
    for u in _monos(model, 2, groups[:2]):
        rhs = {}
        for (a1, a2), c in coproduct(u).items():
            for (b1, b2), d in coproduct(model.mono(*a2)).items():
                rhs[(a1, b1, b2)] = rhs.get((a1, b1, b2), 0) + c * d
        assert {k: v for k, v in rhs.items() if v} == coproduct(u, parts=3)
        lhs = {}
        for (a1, a2), c in coproduct(u).items():
            for (b1, b2), d in coproduct(model.mono(*a1)).items():
                lhs[(b1, b2, a2)] = lhs.get((b1, b2, a2), 0) + c * d
        lhs = {k: v for k, v in lhs.items() if v}
        assert lhs == coproduct(u, parts=3)
    small = list(_monos(model, 1, groups[:2]))
    for u, v in itertools.product(small, repeat=2):
        assert coproduct(u * v) == tensor_multiply(model, coproduct(u), coproduct(v))


@pytest.mark.parametrize("model,groups", MODELS)
def test_antipode_axiom(model, groups):
    for u in _monos(model, 2, groups[:2]):
        left = model.zero()
        right = model.zero()
        for (a, b), c in coproduct(u).items():
            left = left + (antipode(model.mono(*a)) * model.mono(*b)).scale(c)
            right = right + (model.mono(*a) * antipode(model.mono(*b))).scale(c)
        assert left == right == model.one().scale(counit(u))
    small = list(_monos(model, 1, groups[:2]))
    for u, v in itertools.product(small, repeat=2):
        assert antipode(u * v) == antipode(v) * antipode(u)
