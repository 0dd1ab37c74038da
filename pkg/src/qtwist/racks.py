"""Racks, rack 2-cocycles, the transposition rack of S_n and its Nichols algebras.

Transpositions are ordered lexicographically by (a, b) with a < b and labelled
"(ab)".  All tables are indexed in that order.
"""
from __future__ import annotations

import itertools
import json
import time
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from . import cocycles as cc
from . import linalg
from .errors import (
    BadTwistTable,
    CocycleViolation,
    NotBijective,
    NotSelfDistributive,
    UnsupportedN,
)
from .exactnum import format_rational, rat
from .ideals import Presentation, ideal_member
from .smash import SmashElement, SmashModel
from .yd import MonomialYD, SymmetricGroup, quantum_symmetrizer


# ------------------------------------------------------------ racks

class Rack:
    def __init__(self, elements, op):
        self.elements = list(elements)
        self.op = [list(r) for r in op]
        self.size = len(self.elements)

    def __call__(self, i, j):
        return self.op[i][j]

    def label(self, i):
        return str(self.elements[i])

    def to_json(self):
        return {"elements": [str(e) for e in self.elements], "op": self.op}


def validate_rack(table, elements=None) -> Rack:
    n = len(table)
    elements = list(elements) if elements is not None else list(range(n))
    if any(len(r) != n for r in table):
        raise ValueError("rack table must be square")
    for i in range(n):
        if sorted(table[i]) != list(range(n)):
            raise NotBijective(f"{elements[i]} |> (.) is not a bijection", elements[i])
    for i in range(n):
        for j in range(n):
            ij = table[i][j]
            for k in range(n):
                if table[i][table[j][k]] != table[ij][table[i][k]]:
                    raise NotSelfDistributive(
                        "self-distributivity fails", (elements[i], elements[j], elements[k])
                    )
    return Rack(elements, table)


class RackCocycle:
    def __init__(self, rack: Rack, q):
        self.rack = rack
        self.q = [[rat(a) for a in r] for r in q]

    def __call__(self, i, j):
        return self.q[i][j]

    def to_json(self):
        return [[format_rational(a) for a in r] for r in self.q]


def rack_cocycle_violation(X: Rack, q):
    """First triple (i, j, k) breaking q_{i,j|>k} q_{j,k} = q_{i|>j,i|>k} q_{i,k}, or None."""
    n = X.size
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if q[i][X(j, k)] * q[j][k] != q[X(i, j)][X(i, k)] * q[i][k]:
                    return (i, j, k)
    return None


def validate_rack_cocycle(X: Rack, q) -> RackCocycle:
    q = [[rat(a) for a in r] for r in q]
    if any(a == 0 for r in q for a in r):
        raise ValueError("rack cocycle values must be nonzero")
    bad = rack_cocycle_violation(X, q)
    if bad is not None:
        raise CocycleViolation("rack 2-cocycle identity fails", tuple(X.label(t) for t in bad))
    return RackCocycle(X, q)


def twist_condition_violation(X: Rack, phi):
    """First triple breaking the long condition that makes q^φ a rack cocycle."""
    n = X.size
    for x in range(n):
        for y in range(n):
            xy = X(x, y)
            for z in range(n):
                yz = X(y, z)
                xz = X(x, z)
                xyz = X(x, yz)
                lhs = phi(x, z) * phi(xy, xz) * phi(xyz, x) * phi(yz, y)
                rhs = phi(y, z) * phi(x, yz) * phi(xyz, xy) * phi(xz, x)
                if lhs != rhs:
                    return (x, y, z)
    return None


def twist_rack_cocycle(X: Rack, q, phi):
    """(q^φ, valid, witness) with q^φ_xy = φ(x, y) φ(x|>y, x)^{-1} q_xy.

    ``phi`` is a callable on rack indices.  ``valid`` comes from the long
    condition; it is cross-checked against direct validation of q^φ.
    """
    n = X.size
    qq = q.q if isinstance(q, RackCocycle) else [[rat(a) for a in r] for r in q]
    qphi = [[phi(x, y) / phi(X(x, y), x) * qq[x][y] for y in range(n)] for x in range(n)]
    w = twist_condition_violation(X, phi)
    direct = rack_cocycle_violation(X, qphi)
    if (w is None) != (direct is None):
        raise AssertionError("twist condition and direct rack-cocycle check disagree")
    return qphi, w is None, None if w is None else tuple(X.label(t) for t in w)


# ------------------------------------------------------------ transposition rack

def sign(g) -> int:
    s, seen = 1, set()
    for i in range(len(g)):
        if i in seen:
            continue
        j, L = i, 0
        while j not in seen:
            seen.add(j)
            j = g[j]
            L += 1
        if L % 2 == 0:
            s = -s
    return s


class TranspositionRack:
    def __init__(self, n: int):
        if n < 3:
            raise UnsupportedN("transposition racks need n >= 3")
        self.n = n
        self.group = G = SymmetricGroup(n)
        self.pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
        self.perms = [G.transposition(a, b) for a, b in self.pairs]
        self.index = {p: k for k, p in enumerate(self.perms)}
        self.labels = [f"({a}{b})" if n < 10 else f"({a},{b})" for a, b in self.pairs]
        N = len(self.perms)
        op = [[self.index[G.conj(self.perms[i], self.perms[j])] for j in range(N)] for i in range(N)]
        self.rack = validate_rack(op, self.labels)
        self.cocycles = {
            "minus_one": [[Fraction(-1)] * N for _ in range(N)],
            "chi": [[self.chi(self.perms[x], y) for y in range(N)] for x in range(N)],
        }

    def pair_index(self, a, b):
        return self.pairs.index((min(a, b), max(a, b)))

    def chi(self, g, i) -> Fraction:
        """χ_i(g): +1 iff g(a) < g(b) for i = (a, b), a < b."""
        a, b = self.pairs[i]
        return Fraction(1) if g[a - 1] < g[b - 1] else Fraction(-1)

    def act(self, cocycle: str):
        G, index, perms = self.group, self.index, self.perms
        if cocycle == "minus_one":
            def f(g, i):
                return Fraction(sign(g)), index[G.conj(g, perms[i])]
        elif cocycle == "chi":
            def f(g, i):
                return self.chi(g, i), index[G.conj(g, perms[i])]
        else:
            raise ValueError(f"unknown cocycle {cocycle!r}")
        return f

    def yd(self, cocycle: str) -> MonomialYD:
        return MonomialYD(self.group, self.perms, self.act(cocycle), names=[f"x{l}" for l in self.labels])


@lru_cache(maxsize=None)
def transposition_rack(n: int) -> TranspositionRack:
    return TranspositionRack(n)


@lru_cache(maxsize=None)
def rack_model(n: int, cocycle: str) -> SmashModel:
    T = transposition_rack(n)
    M = SmashModel(T.yd(cocycle), f"rack{n}:{cocycle}")
    M.owner = T
    return M


def _check_n(n, allowed=(3, 4, 5)):
    if n not in allowed:
        raise UnsupportedN(f"n = {n} not supported (allowed: {list(allowed)})")


def fk_relations(n: int, cocycle: str) -> Presentation:
    _check_n(n)
    T = transposition_rack(n)
    M = rack_model(n, cocycle)
    x = lambda a, b: M.gen(T.pair_index(a, b))  # noqa: E731
    rels, labels = [], []
    for a, b in T.pairs:
        rels.append(x(a, b) * x(a, b))
        labels.append(f"sq({a}{b})")
    for (a, b), (e, f) in itertools.combinations(T.pairs, 2):
        if {a, b} & {e, f}:
            continue
        s = 1 if cocycle == "minus_one" else -1
        rels.append(x(a, b) * x(e, f) + (x(e, f) * x(a, b)).scale(s))
        labels.append(f"disj({a}{b},{e}{f})")
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        if cocycle == "minus_one":
            # both orientations of the cyclic sum
            for p, r, t in ((a, b, c), (a, c, b)):
                rels.append(x(p, r) * x(r, t) + x(r, t) * x(t, p) + x(t, p) * x(p, r))
                labels.append(f"cyc({p}{r}{t})")
        else:
            rels.append(x(a, b) * x(b, c) - x(b, c) * x(a, c) - x(a, c) * x(a, b))
            labels.append(f"tri1({a}{b}{c})")
            rels.append(x(b, c) * x(a, b) - x(a, c) * x(b, c) - x(a, b) * x(a, c))
            labels.append(f"tri2({a}{b}{c})")
    return Presentation(M, rels, labels, 2)


def symmetrizer_kernel(n: int, cocycle: str, d: int = 2):
    """Basis of ker Q_d as dicts word -> coefficient."""
    M = rack_model(n, cocycle)
    Q = quantum_symmetrizer(M.yd, d)
    words = sorted(Q.cols)
    vecs = [Q.cols[w] for w in words]
    return [{words[j]: c for j, c in v.items()} for v in linalg.nullspace(vecs)]


def fk_matches_kernel(n: int, cocycle: str) -> dict:
    """span(fk_relations) == ker Q_2: equal dimensions and mutual containment."""
    M = rack_model(n, cocycle)
    P = fk_relations(n, cocycle)
    Q = quantum_symmetrizer(M.yd, 2)
    rel_vecs = [{w: c for (w, _), c in r.terms.items()} for r in P.relations]
    ker = symmetrizer_kernel(n, cocycle, 2)
    rels_in_ker = all(not Q.apply(v) for v in rel_vecs)
    basis = linalg.row_basis(rel_vecs)
    ker_in_rels = all(linalg.in_span(basis, v) for v in ker)
    return {
        "n": n,
        "cocycle": cocycle,
        "relations_rank": len(basis),
        "kernel_dim": len(ker),
        "relations_in_kernel": rels_in_ker,
        "kernel_in_relations": ker_in_rels,
        "pass": rels_in_ker and ker_in_rels and len(basis) == len(ker),
    }


def nichols_hilbert(n: int, cocycle: str, max_deg: int) -> list:
    """dim of degree-d components, d = 0..max_deg, as ranks of Q_d."""
    M = rack_model(n, cocycle)
    out = [1]
    for d in range(1, max_deg + 1):
        Q = quantum_symmetrizer(M.yd, d)
        vecs = list(Q.cols.values())
        out.append(linalg.rank(vecs))
    return out


def fk_hilbert(n: int, cocycle: str, max_deg: int) -> list:
    from .ideals import graded_dimension

    P = fk_relations(n, cocycle)
    return [graded_dimension(P, d) for d in range(max_deg + 1)]


# ------------------------------------------------------------ H(Q_n^{-1}[t])

def _three_cycles(n):
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        yield a, b, c
        yield a, c, b


def build_hq(n: int, Lam, Gam) -> Presentation:
    """Relations of H(Q_n^{-1}[(Λ, Γ)]) in the (-1) rack model over S_n.

    h_j a_i = -a_{j|>i} h_j is built into the model.
    """
    if n < 4:
        raise UnsupportedN("the H(Q_n^{-1}[t]) family needs n >= 4")
    Lam, Gam = rat(Lam), rat(Gam)
    T = transposition_rack(n)
    M = rack_model(n, "minus_one")
    one = M.one()
    a = lambda p, r: M.gen(T.pair_index(p, r))  # noqa: E731
    h = lambda p, r: M.grp(T.perms[T.pair_index(p, r)])  # noqa: E731
    rels, labels = [], []
    for p, r in T.pairs:
        rels.append(a(p, r) * a(p, r))
        labels.append(f"sq({p}{r})")
    for (p, r), (e, f) in itertools.combinations(T.pairs, 2):
        if {p, r} & {e, f}:
            continue
        rels.append(a(p, r) * a(e, f) + a(e, f) * a(p, r) - (one - h(p, r) * h(e, f)).scale(Lam))
        labels.append(f"Lambda({p}{r},{e}{f})")
    for p, r, t in _three_cycles(n):
        lhs = a(p, r) * a(r, t) + a(r, t) * a(t, p) + a(t, p) * a(p, r)
        rels.append(lhs - (one - h(p, r) * h(r, t)).scale(Gam))
        labels.append(f"Gamma({p}{r}{t})")
    return Presentation(M, rels, labels, 2)


def exp_cocycle_lambda(n: int, lam, model: SmashModel | None = None) -> cc.ExpCocycle:
    """e^{η̃_λ} with η_λ = (λ/3) Σ d_τ ⊗ d_μ on the (-1) model."""
    M = model or rack_model(n, "minus_one")
    N = M.yd.N
    eta = {(i, j): Fraction(1) for i in range(N) for j in range(N)}
    return cc.exp_cocycle(M, eta, rat(lam) / 3)


def _h_family_report(M: SmashModel, mul, fk: Presentation, lam, T: TranspositionRack, reference=None):
    """Check the three H relation families for the product ``mul``.

    Returns (checks, scale).  For each quadratic family the constant c in
    front of (1 - h h) is read off; the families hold with Λ = 2λ, Γ = 3λ
    after rescaling generators a = sqrt(s) x with s = Λ / c_Λ = Γ / c_Γ.
    """
    lam = rat(lam)
    G = T.group
    x = lambda p, r: M.gen(T.pair_index(p, r))  # noqa: E731
    hg = lambda p, r: T.perms[T.pair_index(p, r)]  # noqa: E731
    one = M.one()
    checks = []
    scales = set()
    D = 2

    def group_part(u):
        return SmashElement(M, {m: c for m, c in u.terms.items() if not m[0]})

    def word_part(u):
        return SmashElement(M, {m: c for m, c in u.terms.items() if m[0]})

    def family(name, u, target_const, g):
        c = u.coefficient((), G.identity)
        gp_ok = group_part(u) == (one - M.grp(g)).scale(c)
        mem = ideal_member(word_part(u), fk, D).decision
        if target_const == 0:
            ok = gp_ok and mem and c == 0
            s = None
        else:
            ok = gp_ok and mem and c != 0
            s = target_const / c if c else None
            if s is not None:
                scales.add(s)
        checks.append({"family": name, "constant": format_rational(c), "pass": ok})

    for p, r in T.pairs:
        family(f"sq({p}{r})", mul(x(p, r), x(p, r)), 0, G.identity)
    for (p, r), (e, f) in itertools.combinations(T.pairs, 2):
        if {p, r} & {e, f}:
            continue
        u = mul(x(p, r), x(e, f)) + mul(x(e, f), x(p, r))
        family(f"Lambda({p}{r},{e}{f})", u, 2 * lam, G.mul(hg(p, r), hg(e, f)))
    for p, r, t in _three_cycles(T.n):
        u = mul(x(p, r), x(r, t)) + mul(x(r, t), x(t, p)) + mul(x(t, p), x(p, r))
        family(f"Gamma({p}{r}{t})", u, 3 * lam, G.mul(hg(p, r), hg(r, t)))
    # group action relation h_g a_i = -a_{g|>i} h_g on transpositions
    ok = True
    for k, g in enumerate(T.perms):
        for i in range(len(T.perms)):
            j = T.index[G.conj(g, T.perms[i])]
            if mul(M.grp(g), M.gen(i)) + mul(M.gen(j), M.grp(g)) != M.zero():
                ok = False
    checks.append({"family": "h_action", "pass": ok})
    if lam != 0:
        ok_scale = len(scales) == 1 and next(iter(scales)) > 0
        checks.append({"family": "common_rescaling", "pass": ok_scale})
    scale = next(iter(scales)) if len(scales) == 1 else None
    return checks, scale


def verify_exp_deformation(n: int, lam) -> dict:
    t0 = time.perf_counter()
    _check_n(n, (4, 5))
    lam = rat(lam)
    T = transposition_rack(n)
    M = rack_model(n, "minus_one")
    sigma = exp_cocycle_lambda(n, lam, M)
    fk = fk_relations(n, "minus_one")
    mul = lambda u, v: cc.deform_product(sigma, u, v)  # noqa: E731
    checks, scale = _h_family_report(M, mul, fk, lam, T)
    if lam == 0:
        same = all(mul(M.gen(i), M.gen(j)) == M.gen(i) * M.gen(j) for i in range(M.yd.N) for j in range(M.yd.N))
        checks.append({"family": "undeformed_products", "pass": same})
    return {
        "theorem": "exp_cocycle_fk_deformation",
        "n": n,
        "lambda": format_rational(lam),
        "Lambda": format_rational(2 * lam),
        "Gamma": format_rational(3 * lam),
        "generator_rescaling": None if scale is None else format_rational(scale),
        "bound": 2,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
        "seconds": time.perf_counter() - t0,
    }


# ------------------------------------------------------------ group twist χ -> -1

def remark_identity_violation(T: TranspositionRack, phi):
    """First pair (x, y) with φ(x, y) φ(x|>y, x)^{-1} χ(x, y) != -1."""
    for x, gx in enumerate(T.perms):
        for y, gy in enumerate(T.perms):
            xy = T.perms[T.rack(x, y)]
            if phi(gx, gy) / phi(xy, gx) * T.chi(gx, y) != -1:
                return (T.labels[x], T.labels[y])
    return None


def load_phi_table(name: str = "phi_s4.json", validate: bool = False) -> cc.GroupCocycleTable:
    data = json.loads(resources.files("qtwist.data").joinpath(name).read_text())
    return cc.GroupCocycleTable.from_json(data, validate=validate)


def _phi_weight(T: TranspositionRack, phi):
    """w(m) for the identification B(χ)_φ̃ ≅ B(-1)#kS_n on monomials."""
    G = T.group
    degs = T.perms

    def w(m):
        word, g = m
        v = Fraction(1)
        acc = G.identity
        for k, i in enumerate(word):
            if k:
                v *= phi(acc, degs[i])
            acc = G.mul(acc, degs[i])
        if word:
            v *= phi(acc, g)
        return v

    return w


def compose_with_group_twist(n: int, phi: cc.GroupCocycleTable, lam) -> dict:
    """Deform B(O_2^n, χ)#kS_n by σ_λ * φ̃ and check the H relation families."""
    t0 = time.perf_counter()
    _check_n(n, (4, 5))
    lam = rat(lam)
    T = transposition_rack(n)
    bad = remark_identity_violation(T, phi)
    if bad is not None:
        raise BadTwistTable("φ does not twist χ into -1", bad)
    phi.validate()
    B = rack_model(n, "chi")
    A = rack_model(n, "minus_one")
    phit = cc.InducedCocycle(B, phi)
    w = _phi_weight(T, phi)
    sig = cc.RescaledCocycle(B, exp_cocycle_lambda(n, lam, A), w)
    total = cc.convolve(sig, phit)
    mul = lambda u, v: cc.deform_product(total, u, v)  # noqa: E731
    fk = fk_relations(n, "chi")
    checks, scale = _h_family_report(B, mul, fk, lam, T)
    # the φ̃ step alone reproduces the (-1) bosonization products
    N = B.yd.N

    def to_A(u):
        return SmashElement(A, {m: c / w(m) for m, c in u.terms.items()})

    gens = [B.gen(i) for i in range(N)] + [B.grp(g) for g in T.perms]
    ok = all(
        to_A(cc.deform_product(phit, u, v)) == to_A(u) * to_A(v)
        for u in gens for v in gens
    )
    checks.append({"family": "phi_step_matches_minus_one_model", "pass": ok})
    if lam == 0:
        same = all(to_A(mul(u, v)) == to_A(u) * to_A(v) for u in gens for v in gens)
        checks.append({"family": "undeformed_products", "pass": same})
    return {
        "theorem": "fk_chi_composite_cocycle",
        "n": n,
        "lambda": format_rational(lam),
        "Lambda": format_rational(2 * lam),
        "Gamma": format_rational(3 * lam),
        "generator_rescaling": None if scale is None else format_rational(scale),
        "bound": 2,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
        "seconds": time.perf_counter() - t0,
    }


# ------------------------------------------------------------ ±1 twist search

def search_twist_tables(n: int, limit: int = 1):
    """±1-valued X×X tables φ with φ(x, y) φ(x|>y, x) χ(x, y) = -1.

    Solved as a linear system over GF(2); returns up to ``limit`` tables as
    dicts (x, y) -> ±1 on rack indices.  The long twist condition holds
    automatically because the twisted cocycle is the constant -1.
    """
    T = transposition_rack(n)
    N = len(T.perms)
    var = {(x, y): x * N + y for x in range(N) for y in range(N)}
    rows = []
    for x in range(N):
        for y in range(N):
            rhs = 1 if T.chi(T.perms[x], y) == 1 else 0
            a, b = var[(x, y)], var[(T.rack(x, y), x)]
            mask = (1 << a) ^ (1 << b)
            rows.append((mask, rhs))
    # Gaussian elimination over GF(2) on bitmasks
    pivots = {}
    for mask, rhs in rows:
        for p, (pm, pr) in pivots.items():
            if mask >> p & 1:
                mask ^= pm
                rhs ^= pr
        if mask == 0:
            if rhs:
                return []
            continue
        p = mask.bit_length() - 1
        for q, (qm, qr) in list(pivots.items()):
            if qm >> p & 1:
                pivots[q] = (qm ^ mask, qr ^ rhs)
        pivots[p] = (mask, rhs)
    free = [v for v in range(N * N) if v not in pivots]
    out = []
    for bits in itertools.islice(itertools.product((0, 1), repeat=len(free)), limit):
        val = dict(zip(free, bits))
        for p, (pm, pr) in sorted(pivots.items()):
            s = pr
            for v in free:
                if pm >> v & 1:
                    s ^= val[v]
            val[p] = s
        out.append({(x, y): (-1 if val[var[(x, y)]] else 1) for x in range(N) for y in range(N)})
    return out
