"""Quantum-group presentations over Z^{2θ} smash models and the checks relating them.

Two models share the group Z^{2θ}:

* the pre-Nichols model T(V⊕W)#kZ^{2θ} with letters x_1..x_θ, y_1..y_θ and
  group generators ordered L_1..L_θ, K_1..K_θ;
* the HPR model with letters e_i, f_i and group generators ordered
  ω_1..ω_θ, ω'_1..ω'_θ.  Only its algebra structure is used.
"""
from __future__ import annotations

import time
from functools import lru_cache
from fractions import Fraction

from . import cocycles as cc
from .datum import (
    ReducedDatum,
    build_dj_datum,
    dj_twist_bicharacter,
    is_twist_equivalent,
    qmatrix,
    validate_reduced_datum,
)
from .errors import BadRadical, NotPositive
from .exactnum import RadicalTable, format_rational, q_binom, rat, sqrt_of
from .ideals import Presentation, ideal_member
from .smash import SmashElement, SmashModel, braided_adjoint
from .yd import FreeAbelianGroup, diagonal_yd


# ------------------------------------------------------------ models

class UredModel:
    def __init__(self, datum: ReducedDatum):
        self.datum = datum
        t = self.theta = datum.theta
        q = datum.q
        names = [f"L{i + 1}" for i in range(t)] + [f"K{i + 1}" for i in range(t)]
        G = FreeAbelianGroup(names)
        chars = []
        for j in range(t):  # x_j: L_i -> q_ji, K_i -> q_ij
            chars.append([q[j][i] for i in range(t)] + [q[i][j] for i in range(t)])
        for j in range(t):  # y_j: inverses
            chars.append([1 / q[j][i] for i in range(t)] + [1 / q[i][j] for i in range(t)])
        degrees = [G.gen(t + i) for i in range(t)] + [G.gen(i) for i in range(t)]
        letters = [f"x{i + 1}" for i in range(t)] + [f"y{i + 1}" for i in range(t)]
        self.smash = SmashModel(diagonal_yd(G, degrees, chars, letters), "ured")
        self.smash.owner = self
        self.group = G

    def x(self, i):
        return self.smash.gen(i)

    def y(self, i):
        return self.smash.gen(self.theta + i)

    def K(self, i, p=1):
        return self.smash.grp(self.group.gen(self.theta + i, p))

    def L(self, i, p=1):
        return self.smash.grp(self.group.gen(i, p))

    def Kg(self, i, p=1):
        return self.group.gen(self.theta + i, p)

    def Lg(self, i, p=1):
        return self.group.gen(i, p)


class HPRModel:
    def __init__(self, datum: ReducedDatum):
        self.datum = datum
        t = self.theta = datum.theta
        q = datum.q
        names = [f"w{i + 1}" for i in range(t)] + [f"w'{i + 1}" for i in range(t)]
        G = FreeAbelianGroup(names)
        chars = []
        for j in range(t):  # e_j: ω_i -> q_ij, ω'_i -> q_ji^{-1}
            chars.append([q[i][j] for i in range(t)] + [1 / q[j][i] for i in range(t)])
        for j in range(t):  # f_j: ω_i -> q_ij^{-1}, ω'_i -> q_ji
            chars.append([1 / q[i][j] for i in range(t)] + [q[j][i] for i in range(t)])
        # nominal degrees; the HPR coproduct is never evaluated in this model
        degrees = [G.gen(i) for i in range(t)] + [G.gen(t + i, -1) for i in range(t)]
        letters = [f"e{i + 1}" for i in range(t)] + [f"f{i + 1}" for i in range(t)]
        self.smash = SmashModel(diagonal_yd(G, degrees, chars, letters), "hpr")
        self.smash.owner = self
        self.group = G

    def e(self, i):
        return self.smash.gen(i)

    def f(self, i):
        return self.smash.gen(self.theta + i)

    def w(self, i, p=1):
        return self.smash.grp(self.group.gen(i, p))

    def wp(self, i, p=1):
        return self.smash.grp(self.group.gen(self.theta + i, p))


@lru_cache(maxsize=None)
def ured_model(datum: ReducedDatum) -> UredModel:
    return UredModel(datum)


@lru_cache(maxsize=None)
def hpr_model(datum: ReducedDatum) -> HPRModel:
    return HPRModel(datum)


# ------------------------------------------------------------ relations

def serre_expand(kind: str, i: int, j: int, n: int, datum: ReducedDatum) -> SmashElement:
    """Closed form of ad_c(x_i)^n(x_j) or ad_c(y_i)^n(y_j) (0-based i, j)."""
    t = datum.theta
    if not (0 <= i < t and 0 <= j < t):
        raise IndexError("generator index out of range")
    if i == j:
        raise IndexError("serre_expand needs i != j")
    U = ured_model(datum)
    M = U.smash
    q = datum.q
    qii = q[i][i]
    out = M.zero()
    if kind == "x":
        for k in range(n + 1):
            c = (-1) ** k * q_binom(n, k, qii) * qii ** (k * (k - 1) // 2) * q[i][j] ** k
            out = out + M.mono((i,) * (n - k) + (j,) + (i,) * k, coef=c)
        return out
    if kind == "y":
        a, b = t + i, t + j
        pref = (-1) ** n * q[j][i] ** (-n) * qii ** (-(n * (n - 1) // 2))
        for k in range(n + 1):
            c = (-1) ** k * q_binom(n, k, qii) * qii ** (k * (k - 1) // 2) * q[j][i] ** k
            out = out + M.mono((a,) * k + (b,) + (a,) * (n - k), coef=pref * c)
        return out
    raise ValueError(f"kind must be 'x' or 'y', not {kind!r}")


def iterated_adjoint(kind: str, i: int, j: int, n: int, datum: ReducedDatum) -> SmashElement:
    U = ured_model(datum)
    t = datum.theta
    a, b = (i, j) if kind == "x" else (t + i, t + j)
    z = U.smash.gen(b)
    for _ in range(n):
        z = braided_adjoint(a, z)
    return z


def linking_relation(datum: ReducedDatum, i: int, j: int) -> SmashElement:
    """x_i y_j - q_ij^{-1} y_j x_i - δ_ij ℓ_i (K_i L_i - 1)."""
    U = ured_model(datum)
    r = U.x(i) * U.y(j) - (U.y(j) * U.x(i)).scale(1 / datum.q[i][j])
    if i == j:
        ell = datum.linking[i]
        r = r - (U.K(i) * U.L(i) - U.smash.one()).scale(ell)
    return r


def build_ured(datum: ReducedDatum, D: int | None = None) -> Presentation:
    t = datum.theta
    A = datum.cartan
    rels, labels = [], []
    for kind in ("x", "y"):
        for i in range(t):
            for j in range(t):
                if i != j:
                    rels.append(serre_expand(kind, i, j, 1 - A[i][j], datum))
                    labels.append(f"serre_{kind}[{i + 1},{j + 1}]")
    for i in range(t):
        for j in range(t):
            rels.append(linking_relation(datum, i, j))
            labels.append(f"link[{i + 1},{j + 1}]")
    return Presentation(ured_model(datum).smash, rels, labels, D if D is not None else default_bound(datum))


def default_bound(datum: ReducedDatum) -> int:
    A = datum.cartan
    t = datum.theta
    top = max((1 - min(A[i][j] for j in range(t) if j != i) for i in range(t)), default=1) if t > 1 else 1
    return max(4, 2 + top)


def _hpr_serre(H: HPRModel, datum, i, j, which):
    q = datum.q
    n = 1 - datum.cartan[i][j]
    qii = q[i][i]
    t = datum.theta
    out = H.smash.zero()
    for k in range(n + 1):
        c = (-1) ** k * q_binom(n, k, qii) * qii ** (k * (k - 1) // 2) * q[i][j] ** k
        if which == "e":
            w = (i,) * (n - k) + (j,) + (i,) * k
        else:
            w = (t + i,) * k + (t + j,) + (t + i,) * (n - k)
        out = out + H.smash.mono(w, coef=c)
    return out


def build_hpr(datum: ReducedDatum, D: int | None = None, r5_constant=None) -> Presentation:
    """R5, R6, R7 of the HPR presentation; R1-R4 are built into the model.

    ``r5_constant`` overrides q_ii/(q_ii - 1) in R5 (negative controls).
    """
    H = hpr_model(datum)
    M = H.smash
    t = datum.theta
    rels, labels = [], []
    for i in range(t):
        for j in range(t):
            r = H.e(i) * H.f(j) - H.f(j) * H.e(i)
            if i == j:
                qii = datum.q[i][i]
                c = qii / (qii - 1) if r5_constant is None else rat(r5_constant)
                r = r - (H.w(i) - H.wp(i)).scale(c)
            rels.append(r)
            labels.append(f"R5[{i + 1},{j + 1}]")
    for which, name in (("e", "R6"), ("f", "R7")):
        for i in range(t):
            for j in range(t):
                if i != j:
                    rels.append(_hpr_serre(H, datum, i, j, which))
                    labels.append(f"{name}[{i + 1},{j + 1}]")
    return Presentation(M, rels, labels, D if D is not None else default_bound(datum))


def quotient_dj(P: Presentation) -> Presentation:
    """Append K_i L_i - 1 for every i."""
    U = P.model.owner
    extra = [U.K(i) * U.L(i) - U.smash.one() for i in range(U.theta)]
    return P.extended(extra, [f"KL[{i + 1}]" for i in range(U.theta)])


# ------------------------------------------------------------ maps

class GeneratorMap:
    """Algebra map given on letters and on group generators."""

    def __init__(self, source: SmashModel, target: SmashModel, letters, group_images, name=""):
        self.source, self.target = source, target
        self.letters = list(letters)
        self.group_images = [tuple(g) for g in group_images]
        self.name = name

    def group_image(self, g):
        G = self.target.group
        out = G.identity
        for k, e in enumerate(g):
            if e:
                img = self.group_images[k]
                out = G.mul(out, tuple(e * a for a in img))
        return out

    def __call__(self, u: SmashElement) -> SmashElement:
        T = self.target
        out = T.zero()
        for (w, g), c in u.terms.items():
            term = T.one()
            for a in w:
                term = term * self.letters[a]
            term = term * T.grp(self.group_image(g))
            out = out + term.scale(c)
        return out

    def intertwines_action(self) -> bool:
        """φ(g a g^{-1}) = χ(g, a) φ(a) for group generators g and letters a."""
        S, T = self.source, self.target
        for k in range(S.group.rank):
            g = S.group.gen(k)
            for a in range(S.yd.N):
                s, b = S.yd.act(g, a)
                lhs = T.grp(self.group_image(g)) * self.letters[a] * T.grp(self.group_image(S.group.inv(g)))
                if lhs != self.letters[b].scale(s):
                    return False
        return True


def generator_maps(datum: ReducedDatum):
    """(φ: HPR -> Ũ, ψ: Ũ -> HPR)."""
    U, H = ured_model(datum), hpr_model(datum)
    t = datum.theta
    phi_letters = [U.x(i) for i in range(t)] + [U.y(i) * U.L(i, -1) for i in range(t)]
    phi_group = [U.Kg(i) for i in range(t)] + [U.Lg(i, -1) for i in range(t)]
    psi_letters = [H.e(i) for i in range(t)] + [H.f(i) * H.wp(i, -1) for i in range(t)]
    G = H.group
    psi_group = [G.gen(t + i, -1) for i in range(t)] + [G.gen(i) for i in range(t)]
    phi = GeneratorMap(H.smash, U.smash, phi_letters, phi_group, "phi")
    psi = GeneratorMap(U.smash, H.smash, psi_letters, psi_group, "psi")
    return phi, psi


def _generators(M: SmashModel):
    gens = [M.gen(a) for a in range(M.yd.N)]
    gens += [M.grp(M.group.gen(k, s)) for k in range(M.group.rank) for s in (1, -1)]
    return gens


def verify_isomorphism(datum: ReducedDatum, D: int | None = None, r5_constant=None) -> dict:
    D = default_bound(datum) if D is None else D
    t0 = time.perf_counter()
    phi, psi = generator_maps(datum)
    Pu = build_ured(datum, D)
    Ph = build_hpr(datum, D, r5_constant)
    checks = []
    for name, m in (("phi", phi), ("psi", psi)):
        checks.append({"relation": "R3/R4", "direction": name, "structural": True, "member": m.intertwines_action(), "bound": D})
    for r, lab in zip(Ph.relations, Ph.labels):
        cert = ideal_member(phi(r), Pu, D)
        checks.append({"relation": lab, "direction": "phi", "member": cert.decision, "bound": D})
    for r, lab in zip(Pu.relations, Pu.labels):
        cert = ideal_member(psi(r), Ph, D)
        checks.append({"relation": lab, "direction": "psi", "member": cert.decision, "bound": D})
    for name, f, g, M in (("phi.psi", phi, psi, Pu.model), ("psi.phi", psi, phi, Ph.model)):
        ok = all(f(g(u)) == u for u in _generators(M))
        checks.append({"relation": "generators", "direction": name, "member": ok, "bound": D})
    return {
        "theorem": "hpr_presentation_iso_ured",
        "bound": D,
        "checks": checks,
        "pass": all(c["member"] for c in checks),
        "seconds": time.perf_counter() - t0,
    }


# ------------------------------------------------------------ twisting to DJ type

def transport(u: SmashElement, model: SmashModel) -> SmashElement:
    """Reinterpret u in a model with the same letters and group."""
    return SmashElement(model, dict(u.terms))


def deformed_eval(sigma: cc.HopfCocycle, u: SmashElement) -> SmashElement:
    """Evaluate the polynomial u with every product replaced by the σ-product."""
    M = sigma.model
    out = M.zero()
    for (w, g), c in u.terms.items():
        acc = M.one()
        for a in w:
            acc = cc.deform_product(sigma, acc, M.gen(a))
        if g != M.group.identity:
            acc = cc.deform_product(sigma, acc, M.grp(g))
        out = out + acc.scale(c)
    return out


def _proportional(a: SmashElement, b: SmashElement):
    """Scalar s != 0 with a == s b, else None."""
    if not a.terms or not b.terms:
        return None
    m = next(iter(b.terms))
    if m not in a.terms:
        return None
    s = a.terms[m] / b.terms[m]
    return s if a == b.scale(s) else None


def twist_to_dj(datum: ReducedDatum, q_I, D: int | None = None):
    """Deform the pre-Nichols model of ``datum`` into the DJ-type one.

    Returns (σ̃, DJ presentation, report).
    """
    t0 = time.perf_counter()
    t = datum.theta
    for i in range(t):
        if datum.q[i][i] <= 0:
            raise NotPositive(f"q[{i + 1},{i + 1}] = {format_rational(datum.q[i][i])} is not positive")
    dj = build_dj_datum(datum, q_I)
    bich = dj_twist_bicharacter(datum, dj)
    U = ured_model(datum)
    M = U.smash
    sigma = cc.InducedCocycle(M, bich)
    djd = dj.as_reduced()
    Ud = ured_model(djd)
    qh = dj.qhat
    D = default_bound(datum) if D is None else D
    checks = []

    # (i) twisted braiding equals the DJ matrix
    ok = True
    for i in range(t):
        for j in range(t):
            pairs = [
                (U.Kg(i), U.x(j), qh[i][j]),
                (U.Lg(i), U.x(j), qh[j][i]),
                (U.Kg(i), U.y(j), 1 / qh[i][j]),
                (U.Lg(i), U.y(j), 1 / qh[j][i]),
            ]
            for g, a, want in pairs:
                if cc.twisted_action(sigma, g, a) != a.scale(want):
                    ok = False
    checks.append({"item": "twisted_braiding", "pass": ok})

    # (ii) Serre relations: closed forms agree and DJ relations deform to source ones
    A = datum.cartan
    for kind in ("x", "y"):
        for i in range(t):
            for j in range(t):
                if i == j:
                    continue
                n = 1 - A[i][j]
                twisted_q = _twisted_matrix(sigma, U, datum)
                closed = serre_expand(kind, i, j, n, _with_q(datum, twisted_q))
                target = serre_expand(kind, i, j, n, djd)
                same = closed.to_json() == target.to_json()
                dj_in_src = transport(target, M)
                scal = _proportional(deformed_eval(sigma, dj_in_src), serre_expand(kind, i, j, n, datum))
                checks.append({
                    "item": f"serre_{kind}[{i + 1},{j + 1}]",
                    "closed_form_equal": same,
                    "deformation_scalar": None if scal is None else format_rational(scal),
                    "pass": same and scal is not None,
                })

    # (iii) linking relations, exact equality
    for i in range(t):
        for j in range(t):
            lhs = deformed_eval(sigma, transport(linking_relation(djd, i, j), M))
            rhs = linking_relation(datum, i, j)
            checks.append({"item": f"link[{i + 1},{j + 1}]", "pass": lhs == rhs})

    report = {
        "theorem": "twist_to_dj_type",
        "qhat": [[format_rational(a) for a in r] for r in qh],
        "sigma": bich.to_json(),
        "bound": D,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
        "seconds": time.perf_counter() - t0,
    }
    return sigma, build_ured(djd, D), report


def _twisted_matrix(sigma, U, datum):
    t = datum.theta
    out = []
    for i in range(t):
        row = []
        for j in range(t):
            v = cc.twisted_action(sigma, U.Kg(i), U.x(j))
            row.append(v.terms[next(iter(v.terms))])
        out.append(row)
    return out


def _with_q(datum: ReducedDatum, q) -> ReducedDatum:
    return ReducedDatum(datum.cartan, qmatrix(q), datum.linking, datum.warnings)


# ------------------------------------------------------------ half-root cocycle

def radical_matrix(datum: ReducedDatum, radicals) -> list:
    """r_ij with r_ij^2 = q_ij, from a RadicalTable or an explicit matrix."""
    t = datum.theta
    q = datum.q
    if isinstance(radicals, RadicalTable):
        return [[sqrt_of(q[i][j], radicals) for j in range(t)] for i in range(t)]
    r = [[rat(a) for a in row] for row in radicals]
    for i in range(t):
        for j in range(t):
            if r[i][j] * r[i][j] != q[i][j]:
                raise BadRadical(f"r[{i + 1},{j + 1}]^2 != q[{i + 1},{j + 1}]")
    return r


def halfroot_source(datum: ReducedDatum, r) -> ReducedDatum:
    """The datum that the half-root twist deforms into ``datum``: q_ij r_ji / r_ij."""
    t = datum.theta
    qs = [[datum.q[i][j] * r[j][i] / r[i][j] for j in range(t)] for i in range(t)]
    return validate_reduced_datum(datum.cartan, qs, datum.linking)


def hpr_halfroot_cocycle(datum: ReducedDatum, radicals, model: SmashModel | None = None) -> cc.InducedCocycle:
    """Bicharacter (r_ij) with projection K_i -> e_i, L_i -> -e_i, induced to ``model``.

    The default model is the pre-Nichols model of the source datum.
    """
    r = radical_matrix(datum, radicals)
    t = datum.theta
    proj = [[(-1 if k == i else 0) for k in range(t)] + [(1 if k == i else 0) for k in range(t)] for i in range(t)]
    if model is None:
        model = ured_model(halfroot_source(datum, r)).smash
    return cc.InducedCocycle(model, cc.Bicharacter(r, proj))


def q_mu_nu(q, mu, nu) -> Fraction:
    v = Fraction(1)
    for i, a in enumerate(mu):
        for j, b in enumerate(nu):
            v *= Fraction(q[i][j]) ** (a * b)
    return v


def verify_halfroot(datum: ReducedDatum, radicals, D: int | None = None, span: int = 3) -> dict:
    """Values on ω_μ, ω'_μ, vanishing off Γ, and the multiparameter relations in the deformation."""
    import itertools

    t0 = time.perf_counter()
    r = radical_matrix(datum, radicals)
    src = halfroot_source(datum, r)
    U = ured_model(src)
    M = U.smash
    sigma = hpr_halfroot_cocycle(datum, radicals, M)
    t = datum.theta
    checks = []

    def omega(mu):
        return tuple([0] * t + list(mu))

    def omega_p(mu):  # ω'_μ = L^{-μ}
        return tuple([-a for a in mu] + [0] * t)

    ok = True
    vecs = list(itertools.product(range(-span, span + 1), repeat=t))
    for mu in vecs:
        for nu in vecs:
            half = q_mu_nu(r, mu, nu)
            if half * half != q_mu_nu(datum.q, mu, nu):
                ok = False
            for a in (omega(mu), omega_p(mu)):
                for b in (omega(nu), omega_p(nu)):
                    if sigma.value(((), a), ((), b)) != half:
                        ok = False
    checks.append({"item": "group_values", "pass": ok})

    e = U.group.identity
    ok = True
    samples = [((), e), ((), U.Kg(0)), ((), U.Lg(0, -1))]
    words = [((a,), e) for a in range(2 * t)] + [((0, t), U.Kg(0))]
    for w in words:
        for s in samples + words:
            if sigma.value(w, s) or sigma.value(s, w):
                ok = False
    checks.append({"item": "vanishes_off_group", "pass": ok})

    # multiparameter relations R3-R7 hold for the deformed product
    q = datum.q
    e_ = [U.x(i) for i in range(t)]
    f_ = [U.y(i) * U.L(i, -1) for i in range(t)]
    ok = True
    for i in range(t):
        for j in range(t):
            for g, a, want in (
                (U.Kg(i), U.x(j), q[i][j]),
                (U.Lg(i, -1), U.x(j), 1 / q[j][i]),
                (U.Kg(i), U.y(j), 1 / q[i][j]),
                (U.Lg(i, -1), U.y(j), q[j][i]),
            ):
                if cc.twisted_action(sigma, g, a) != a.scale(want):
                    ok = False
    checks.append({"item": "R3_R4", "pass": ok})

    D = default_bound(src) if D is None else D
    P = quotient_dj(build_ured(src, D))

    def dmul(*xs):
        acc = xs[0]
        for b in xs[1:]:
            acc = cc.deform_product(sigma, acc, b)
        return acc

    for i in range(t):
        for j in range(t):
            rel = dmul(e_[i], f_[j]) - dmul(f_[j], e_[i])
            if i == j:
                rel = rel - (U.K(i) - U.L(i, -1)).scale(q[i][i] / (q[i][i] - 1))
            checks.append({"item": f"R5[{i + 1},{j + 1}]", "pass": ideal_member(rel, P, D).decision, "bound": D})
    A = datum.cartan
    for name, gens, order in (("R6", e_, "e"), ("R7", f_, "f")):
        for i in range(t):
            for j in range(t):
                if i == j:
                    continue
                n = 1 - A[i][j]
                qii = q[i][i]
                rel = M.zero()
                for k in range(n + 1):
                    c = (-1) ** k * q_binom(n, k, qii) * qii ** (k * (k - 1) // 2) * q[i][j] ** k
                    seq = [gens[i]] * (n - k) + [gens[j]] + [gens[i]] * k if order == "e" else [gens[i]] * k + [gens[j]] + [gens[i]] * (n - k)
                    rel = rel + dmul(*seq).scale(c)
                checks.append({"item": f"{name}[{i + 1},{j + 1}]", "pass": ideal_member(rel, P, D).decision, "bound": D})
    return {
        "theorem": "halfroot_group_cocycle",
        "source_q": [[format_rational(a) for a in row] for row in src.q],
        "source_twist_equivalent": is_twist_equivalent(src.q, datum.q),
        "sigma": sigma.sigma.to_json(),
        "bound": D,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
        "seconds": time.perf_counter() - t0,
    }
