"""Acceptance criteria 1-14, exact (tolerance zero).

Each criterion is a function returning True/False.  Under pytest every one is
a test; the outcome line per criterion is printed in the terminal summary.
Run directly (python3 tests/test_acceptance.py) for the plain listing.
"""
import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from _support import A2, B2, G2, SL2, datum, dj_sigma, suite_failures  # noqa: E402
from qtwist import cocycles as cc  # noqa: E402
from qtwist import racks as R  # noqa: E402
from qtwist.datum import build_dj_datum, dj_twist_bicharacter  # noqa: E402
from qtwist.errors import BadTwistTable  # noqa: E402
from qtwist.exactnum import q_binom, q_factorial  # noqa: E402
from qtwist.qgroups import (  # noqa: E402
    hpr_halfroot_cocycle,
    iterated_adjoint,
    serre_expand,
    twist_to_dj,
    ured_model,
    verify_halfroot,
    verify_isomorphism,
)
from qtwist.smash import coproduct, tensor_of  # noqa: E402

RESULTS = {}


def record(n):
    def deco(fn):
        fn.criterion = n
        return fn
    return deco


# ------------------------------------------------------------ 1

@record(1)
def crit_qpascal():
    rng = random.Random(1)
    qs = set()
    while len(qs) < 10:
        q = Fraction(rng.randint(-40, 40), rng.randint(1, 40))
        if q not in (0, 1, -1):
            qs.add(q)

    def oracle(n, k, q):
        # product formula over polynomials (q^m - 1), independent of q_binom
        if k < 0 or k > n:
            return Fraction(0)
        num = den = Fraction(1)
        for m in range(1, k + 1):
            num *= q ** (n - k + m) - 1
            den *= q ** m - 1
        return num / den

    def B(n, k, q):
        return q_binom(n, k, q) if 0 <= k <= n else Fraction(0)

    for q in qs:
        for n in range(1, 9):
            for k in range(1, n + 1):
                b = B(n, k, q)
                if b != oracle(n, k, q):
                    return False
                if b != q ** k * B(n - 1, k, q) + B(n - 1, k - 1, q):
                    return False
                if b != B(n - 1, k, q) + q ** (n - k) * B(n - 1, k - 1, q):
                    return False
                if b != q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q)):
                    return False
    return True


# ------------------------------------------------------------ 2

@record(2)
def crit_serre_closed_form():
    for pair in (A2, B2, G2):
        d = datum(pair)
        for kind in ("x", "y"):
            for i, j in ((0, 1), (1, 0)):
                for n in range(1, 5):
                    if serre_expand(kind, i, j, n, d) != iterated_adjoint(kind, i, j, n, d):
                        return False
    return True


# ------------------------------------------------------------ 3

def _add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if not out[k]:
            del out[k]
    return out


@record(3)
def crit_skew_primitive():
    cases = [A2, ([[2, -2], [-1, 2]], [[4, 2], [Fraction(1, 32), 16]])]
    for pair in cases:
        d = datum(pair)
        U = ured_model(d)
        n = 1 - d.cartan[0][1]
        z = serre_expand("x", 0, 1, n, d)
        g = U.K(0, n) * U.K(1)
        want = _add(tensor_of(z, U.smash.one()), tensor_of(g, z))
        if coproduct(z) != want:
            return False
    return True


# ------------------------------------------------------------ 4

@record(4)
def crit_isomorphism():
    for pair in (SL2, A2):
        rep = verify_isomorphism(datum(pair), 4)
        if not rep["pass"] or rep["bound"] != 4:
            return False
    neg = verify_isomorphism(datum(A2), 4, r5_constant=7)
    return not neg["pass"]


# ------------------------------------------------------------ 5

@record(5)
def crit_twist_to_dj():
    d = datum(A2)
    sigma, _, rep = twist_to_dj(d, [2])
    if not rep["pass"]:
        return False
    U = ured_model(d)
    if sigma.value(((), U.Kg(0)), ((), U.Kg(1))) != Fraction(1, 12):
        return False
    items = {c["item"].split("[")[0] for c in rep["checks"]}
    if not {"twisted_braiding", "serre_x", "serre_y", "link"} <= items:
        return False
    _, _, rep_b = twist_to_dj(datum(B2), [2])
    return rep_b["pass"]


# ------------------------------------------------------------ 6

@record(6)
def crit_cocycle_suite():
    d = datum(A2)
    U = ured_model(d)
    if suite_failures(dj_sigma(d), [U.group.identity, (1, -2, 2, 1)]):
        return False
    h = hpr_halfroot_cocycle(datum(SL2), [[2]])
    if suite_failures(h, [h.model.group.identity, (2, -1)]):
        return False
    T = R.transposition_rack(4)
    G = T.group
    sample = [G.identity, (1, 2, 3, 0)]
    phi = R.load_phi_table(validate=True)
    B = R.rack_model(4, "chi")
    A = R.rack_model(4, "minus_one")
    if suite_failures(cc.InducedCocycle(B, phi), sample):
        return False
    if suite_failures(R.exp_cocycle_lambda(4, 1, A), sample):
        return False
    sig = cc.RescaledCocycle(B, R.exp_cocycle_lambda(4, 1, A), R._phi_weight(T, phi))
    return not suite_failures(cc.convolve(sig, cc.InducedCocycle(B, phi)), sample)


# ------------------------------------------------------------ 7

def _generators(U):
    t = U.theta
    return [U.x(i) for i in range(t)] + [U.y(i) for i in range(t)] + [U.K(i) for i in range(t)] + [U.L(i) for i in range(t)]


@record(7)
def crit_groupoid():
    d = datum(A2)
    U = ured_model(d)
    M = U.smash
    sigma = dj_sigma(d)
    tau = cc.InducedCocycle(M, cc.Bicharacter([[1, 2, 1, 3], [5, 1, 1, 1], [1, 1, 7, 1], [Fraction(1, 2), 1, 1, 1]]))
    after = cc.DeformedAlgebra(tau, cc.DeformedAlgebra(sigma))
    composite = cc.convolve(tau, sigma)
    gens = _generators(U)
    # the composite must differ from tau alone, or the check says nothing
    if all(after.mul(u, v) == cc.deform_product(tau, u, v) for u in gens for v in gens):
        return False
    for u in gens:
        for v in gens:
            if after.mul(u, v) != cc.deform_product(composite, u, v):
                return False
    unit = cc.convolve(sigma.inverse(), sigma)
    e = U.group.identity
    monos = [((), e), ((), U.Kg(0)), ((), U.Lg(1, -2)), ((0,), e), ((2, 1), U.Kg(1))]
    return all(unit.value(a, b) == (1 if not a[0] and not b[0] else 0) for a in monos for b in monos)


# ------------------------------------------------------------ 8

@record(8)
def crit_star_product():
    d = datum(A2)
    U = ured_model(d)
    M = U.smash
    bich = dj_twist_bicharacter(d, build_dj_datum(d, [2]))
    phit = cc.InducedCocycle(M, bich)
    N = M.yd.N
    groups = [U.group.identity, U.Kg(0), U.Lg(1, -1), (1, 2, -1, 1)]
    monos = [(w, g) for n in range(3) for w in itertools.product(range(N), repeat=n) for g in groups]
    pairs = 0
    for a in monos:
        for b in monos:
            if len(a[0]) + len(b[0]) > 2:
                continue
            u, v = M.mono(*a), M.mono(*b)
            if cc.star_product(bich, u, v) != cc.deform_product(phit, u, v):
                return False
            pairs += 1
    return pairs > 0


# ------------------------------------------------------------ 9

@record(9)
def crit_racks():
    for n in (3, 4):
        T = R.transposition_rack(n)
        R.validate_rack(T.rack.op)
        for name in ("minus_one", "chi"):
            R.validate_rack_cocycle(T.rack, T.cocycles[name])
    T = R.transposition_rack(3)
    X = T.rack
    rng = random.Random(9)
    valid_seen = 0
    tables = [{(x, y): rng.choice((1, -1)) for x in range(3) for y in range(3)} for _ in range(96)]
    tables += R.search_twist_tables(3, 4)
    for tab in tables:
        def phi(x, y, tab=tab):
            return Fraction(tab[(x, y)])
        for q in (T.cocycles["chi"], T.cocycles["minus_one"]):
            qphi, valid, _ = R.twist_rack_cocycle(X, q, phi)
            direct = R.rack_cocycle_violation(X, qphi) is None
            if valid != direct:
                return False
            valid_seen += valid
    return len(tables) == 100 and valid_seen > 0


# ------------------------------------------------------------ 10

@record(10)
def crit_fk_kernels():
    for n in (3, 4):
        for c in ("minus_one", "chi"):
            rep = R.fk_matches_kernel(n, c)
            if not rep["pass"]:
                return False
            if n == 3 and rep["kernel_dim"] != 5:
                return False
    return True


# ------------------------------------------------------------ 11

@record(11)
def crit_nichols_hilbert():
    s = R.nichols_hilbert(3, "minus_one", 4)
    if s != [1, 3, 4, 3, 1] or sum(s) != 12:
        return False
    if s != R.fk_hilbert(3, "minus_one", 4):
        return False
    return R.nichols_hilbert(3, "chi", 4) == R.fk_hilbert(3, "chi", 4) == s


# ------------------------------------------------------------ 12

@record(12)
def crit_exp_deformation():
    for lam in (1, Fraction(5, 3)):
        rep = R.verify_exp_deformation(4, lam)
        if not rep["pass"] or rep["generator_rescaling"] != "3":
            return False
        if rep["Lambda"] != str(2 * lam) or rep["Gamma"] != str(3 * lam):
            return False
    rep0 = R.verify_exp_deformation(4, 0)
    return rep0["pass"] and any(c["family"] == "undeformed_products" and c["pass"] for c in rep0["checks"])


# ------------------------------------------------------------ 13

@record(13)
def crit_compose_twist():
    T = R.transposition_rack(4)
    phi = R.load_phi_table()
    if R.remark_identity_violation(T, phi) is not None:
        return False
    if not R.compose_with_group_twist(4, phi, 1)["pass"]:
        return False
    bad = R.load_phi_table("phi_s4_bad.json")
    try:
        R.compose_with_group_twist(4, bad, 1)
    except BadTwistTable as e:
        return e.witness is not None and len(e.witness) == 2
    return False


# ------------------------------------------------------------ 14

@record(14)
def crit_halfroot():
    rep = verify_halfroot(datum(SL2), [[2]], span=3)
    items = {c["item"] for c in rep["checks"]}
    return rep["pass"] and {"group_values", "vanishes_off_group", "R3_R4", "R5[1,1]"} <= items


CRITERIA = sorted(
    (fn for fn in list(globals().values()) if callable(fn) and hasattr(fn, "criterion")),
    key=lambda fn: fn.criterion,
)


@pytest.mark.parametrize("fn", CRITERIA, ids=[f"criterion_{fn.criterion:02d}" for fn in CRITERIA])
def test_criterion(fn):
    t0 = time.perf_counter()
    ok = bool(fn())
    RESULTS[fn.criterion] = (ok, time.perf_counter() - t0)
    assert ok, f"criterion {fn.criterion} failed"


def summary_lines():
    return [
        f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({dt:.1f} s)"
        for n, (ok, dt) in sorted(RESULTS.items())
    ]


if __name__ == "__main__":
    for fn in CRITERIA:
        t0 = time.perf_counter()
        try:
            ok = bool(fn())
        except Exception as e:  # report and keep going
            print(f"criterion {fn.criterion:2d}: ERROR {type(e).__name__}: {e}")
            continue
        RESULTS[fn.criterion] = (ok, time.perf_counter() - t0)
        print(f"criterion {fn.criterion:2d}: {'PASS' if ok else 'FAIL'} ({RESULTS[fn.criterion][1]:.1f} s)")
