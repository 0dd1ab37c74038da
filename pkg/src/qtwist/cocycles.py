"""Hopf 2-cocycles on bosonizations and the deformations they induce."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import CocycleViolation, ModelMismatch, NotHomogeneous, NotInvariant
from .exactnum import format_rational, rat
from .smash import SmashElement, _acc, antipode, conj, counit, multiply, weight


# ------------------------------------------------------------ group level

class Bicharacter:
    """sigma(g, h) = prod b_ij^{pi(g)_i pi(h)_j} on a free abelian group.

    ``projection`` (optional) is a list of rows: pi(g)_i = sum_k P[i][k] g_k.
    """

    def __init__(self, matrix, projection=None):
        self.matrix = tuple(tuple(rat(a) for a in r) for r in matrix)
        self.projection = None if projection is None else tuple(tuple(int(a) for a in r) for r in projection)
        if any(a == 0 for r in self.matrix for a in r):
            raise ValueError("bicharacter entries must be nonzero")

    def _pi(self, g):
        if self.projection is None:
            return g
        return tuple(sum(a * x for a, x in zip(row, g)) for row in self.projection)

    def __call__(self, g, h) -> Fraction:
        pg, ph = self._pi(g), self._pi(h)
        v = Fraction(1)
        for i, a in enumerate(pg):
            if not a:
                continue
            row = self.matrix[i]
            for j, b in enumerate(ph):
                if b:
                    v *= row[j] ** (a * b)
        return v

    def inverse(self):
        return Bicharacter([[1 / a for a in r] for r in self.matrix], self.projection)

    def __mul__(self, other):
        if self.projection != other.projection:
            raise ModelMismatch("bicharacters with different projections")
        return Bicharacter([[a * b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)], self.projection)

    def to_json(self):
        d = {"kind": "bicharacter", "matrix": [[format_rational(a) for a in r] for r in self.matrix]}
        if self.projection is not None:
            d["projection"] = [list(r) for r in self.projection]
        return d


class GroupCocycleTable:
    """Explicit 2-cocycle on a finite group; pairs not listed have value 1."""

    def __init__(self, group, values: dict, validate: bool = True):
        self.group = group
        self.values = {(tuple(g), tuple(h)): rat(v) for (g, h), v in values.items() if rat(v) != 1}
        if any(v == 0 for v in self.values.values()):
            raise ValueError("cocycle values must be nonzero")
        if validate:
            self.validate()

    def __call__(self, g, h) -> Fraction:
        return self.values.get((g, h), Fraction(1))

    def validate(self):
        G = self.group
        els = G.elements()
        e = G.identity
        for g in els:
            if self(g, e) != 1 or self(e, g) != 1:
                raise CocycleViolation("table is not normalized", (G.fmt(g),))
        for g in els:
            for h in els:
                gh = G.mul(g, h)
                a = self(g, h)
                for t in els:
                    if a * self(gh, t) != self(h, t) * self(g, G.mul(h, t)):
                        raise CocycleViolation(
                            "group 2-cocycle identity fails", (G.fmt(g), G.fmt(h), G.fmt(t))
                        )
        return self

    def inverse(self):
        return GroupCocycleTable(self.group, {k: 1 / v for k, v in self.values.items()}, validate=False)

    def to_json(self):
        G = self.group
        vals = {f"{G.fmt(g)},{G.fmt(h)}": format_rational(v) for (g, h), v in sorted(self.values.items())}
        return {"kind": "table", "group": f"S{G.n}", "values": vals}

    @classmethod
    def from_json(cls, obj, validate=True):
        from .yd import SymmetricGroup

        name = obj.get("group", "")
        if not name.startswith("S"):
            raise ValueError(f"unsupported group {name!r}")
        G = SymmetricGroup(int(name[1:]))
        vals = {}
        for key, v in obj.get("values", {}).items():
            left, right = _split_pair(key)
            vals[(G.parse(left), G.parse(right))] = rat(v)
        return cls(G, vals, validate=validate)


def _split_pair(key: str):
    k = key.replace(" ", "")
    i = k.find("),(")
    if i < 0:
        raise ValueError(f"bad pair key {key!r}")
    return k[: i + 1], k[i + 2:]


# ------------------------------------------------------------ Hopf level

class HopfCocycle:
    kind = "abstract"

    def __init__(self, model):
        self.model = model
        self._vals: dict = {}
        self._inv = None

    def value(self, a, b) -> Fraction:
        key = (a, b)
        v = self._vals.get(key)
        if v is None:
            v = self._value(a, b)
            self._vals[key] = v
        return v

    def _value(self, a, b):
        raise NotImplementedError

    def __call__(self, u: SmashElement, v: SmashElement) -> Fraction:
        if u.model is not self.model or v.model is not self.model:
            raise ModelMismatch("cocycle evaluated outside its model")
        tot = Fraction(0)
        for a, c in u.terms.items():
            for b, d in v.terms.items():
                x = self.value(a, b)
                if x:
                    tot += c * d * x
        return tot

    def inverse(self) -> "HopfCocycle":
        if self._inv is None:
            self._inv = self._inverse()
            self._inv._inv = self
        return self._inv

    def _inverse(self):
        raise NotImplementedError


class InducedCocycle(HopfCocycle):
    """sigma~(r#h, s#k) = sigma(h, k) eps(r) eps(s)."""

    kind = "induced"

    def __init__(self, model, group_cocycle):
        super().__init__(model)
        self.sigma = group_cocycle

    def _value(self, a, b):
        if a[0] or b[0]:
            return Fraction(0)
        return self.sigma(a[1], b[1])

    def _inverse(self):
        return InducedCocycle(self.model, self.sigma.inverse())

    def to_json(self):
        return self.sigma.to_json()


class _Trivial:
    def __call__(self, g, h):
        return Fraction(1)

    def inverse(self):
        return self

    def to_json(self):
        return {"kind": "table", "values": {}}


def counit_cocycle(model) -> InducedCocycle:
    """eps (x) eps, the unit for convolution."""
    return InducedCocycle(model, _Trivial())


class ExpCocycle(HopfCocycle):
    """e^{sign * eta~} for eta supported on pairs of generators.

    eta~(x#h, y#k) = eta(x, h.y) eps(k); eta is given by coefficients
    eta[(i, j)] = eta(x_i, x_j).
    """

    kind = "exp"

    def __init__(self, model, eta: dict, sign: int = 1):
        super().__init__(model)
        self.eta = {k: rat(v) for k, v in eta.items() if rat(v)}
        self.sign = sign

    def eta_tilde(self, a, b) -> Fraction:
        (w1, h), (w2, _) = a, b
        if len(w1) != 1 or len(w2) != 1:
            return Fraction(0)
        s, t = self.model.act_word(h, w2)
        return s * self.eta.get((w1[0], t[0]), Fraction(0))

    def _value(self, a, b):
        k = len(a[0])
        if k != len(b[0]):
            return Fraction(0)
        if k == 0:
            return Fraction(1)
        M = self.model
        tot = Fraction(0)
        da = M.coproduct_mono(a, k)
        db = M.coproduct_mono(b, k)
        for ms, c in da.items():
            if any(len(m[0]) != 1 for m in ms):
                continue
            for ns, d in db.items():
                if any(len(n[0]) != 1 for n in ns):
                    continue
                p = c * d
                for m, n in zip(ms, ns):
                    p *= self.eta_tilde(m, n)
                    if not p:
                        break
                tot += p
        return tot * Fraction(self.sign ** k, factorial(k))

    def _inverse(self):
        return ExpCocycle(self.model, self.eta, -self.sign)

    def to_json(self):
        d = {"kind": "exp", "eta": {"pairs": [[i + 1, j + 1, format_rational(v)] for (i, j), v in sorted(self.eta.items())]}}
        if self.sign < 0:
            return {"kind": "inverse", "of": {**d, "eta": d["eta"]}}
        return d


class ConvolvedCocycle(HopfCocycle):
    """(c_1 * c_2 * ... * c_m)(a, b) = prod_s c_s(a_s, b_s)."""

    kind = "convolve"

    def __init__(self, factors):
        factors = list(factors)
        super().__init__(factors[0].model)
        for f in factors:
            if f.model is not self.model:
                raise ModelMismatch("factors live in different models")
        self.factors = factors

    def _value(self, a, b):
        m = len(self.factors)
        M = self.model
        tot = Fraction(0)
        da = M.coproduct_mono(a, m)
        db = M.coproduct_mono(b, m)
        for ms, c in da.items():
            for ns, d in db.items():
                p = c * d
                for f, x, y in zip(self.factors, ms, ns):
                    p *= f.value(x, y)
                    if not p:
                        break
                tot += p
        return tot

    def _inverse(self):
        return ConvolvedCocycle([f.inverse() for f in reversed(self.factors)])

    def to_json(self):
        return {"kind": "convolve", "factors": [f.to_json() for f in self.factors]}


class InverseCocycle(HopfCocycle):
    kind = "inverse"

    def __init__(self, of: HopfCocycle):
        super().__init__(of.model)
        self.of = of

    def _value(self, a, b):
        return self.of.inverse().value(a, b)

    def _inverse(self):
        return self.of

    def to_json(self):
        return {"kind": "inverse", "of": self.of.to_json()}


class RescaledCocycle(HopfCocycle):
    """Pull back ``inner`` along a coalgebra isomorphism that rescales monomials.

    The isomorphism sends monomial m of ``model`` to m / w(m) in ``inner.model``
    (both models share letters and group); value(a, b) = inner(a, b) / (w(a) w(b)).
    """

    kind = "rescaled"

    def __init__(self, model, inner: HopfCocycle, w):
        super().__init__(model)
        self.inner = inner
        self.w = w

    def _value(self, a, b):
        v = self.inner.value(a, b)
        return v / (self.w(a) * self.w(b)) if v else v

    def _inverse(self):
        return RescaledCocycle(self.model, self.inner.inverse(), self.w)

    def to_json(self):
        return {"kind": "rescaled", "of": self.inner.to_json()}


def convolve(sigma: HopfCocycle, tau: HopfCocycle) -> ConvolvedCocycle:
    """sigma * tau; deforming by tau and then by sigma equals deforming by this."""
    return ConvolvedCocycle([sigma, tau])


def eval_induced(sigma: HopfCocycle, u, v) -> Fraction:
    return sigma(u, v)


def exp_cocycle(model, eta, scale=1, group_sample=None) -> ExpCocycle:
    """Build e^{eta~}; eta is a dict (i, j) -> coefficient or a square matrix."""
    if not isinstance(eta, dict):
        eta = {(i, j): v for i, r in enumerate(eta) for j, v in enumerate(r)}
    scale = rat(scale)
    eta = {k: rat(v) * scale for k, v in eta.items()}
    check_invariance(model, eta, group_sample)
    return ExpCocycle(model, eta)


def check_invariance(model, eta, group_sample=None):
    yd = model.yd
    sample = group_sample if group_sample is not None else yd._default_sample()
    for h in sample:
        for i in range(yd.N):
            si, ti = yd.act(h, i)
            for j in range(yd.N):
                sj, tj = yd.act(h, j)
                if si * sj * eta.get((ti, tj), 0) != eta.get((i, j), 0):
                    raise NotInvariant(f"eta(h.x{i + 1}, h.x{j + 1}) != eta(x{i + 1}, x{j + 1}) for h = {model.group.fmt(h)}")


# ------------------------------------------------------------ deformations

def _elem(model, m, c=1):
    return SmashElement(model, {m: Fraction(c)})


def deform_product(sigma: HopfCocycle, u, v, D=None, base=None):
    """a ._sigma b = sigma(a1, b1) a2 b2 sigma^{-1}(a3, b3)."""
    from .errors import DegreeBudgetExceeded

    M = sigma.model
    if D is not None and max(u.degree(), v.degree()) > D:
        raise DegreeBudgetExceeded(f"degree exceeds bound {D}")
    inv = sigma.inverse()
    mul = base or multiply
    out = M.zero()
    acc: dict = {}
    for a, c in u.terms.items():
        da = M.coproduct_mono(a, 3)
        for b, d in v.terms.items():
            db = M.coproduct_mono(b, 3)
            for (a1, a2, a3), x in da.items():
                for (b1, b2, b3), y in db.items():
                    s = sigma.value(a1, b1)
                    if not s:
                        continue
                    t = inv.value(a3, b3)
                    if not t:
                        continue
                    k = c * d * x * y * s * t
                    if base is None:
                        sc, m = M.mono_mul(a2, b2)
                        _acc(acc, m, k * sc)
                    else:
                        out = out + mul(_elem(M, a2), _elem(M, b2)).scale(k)
    if base is None:
        return SmashElement(M, acc)
    return out


class DeformedAlgebra:
    """Product of A_sigma, optionally stacked on another deformed algebra."""

    def __init__(self, sigma: HopfCocycle, base: "DeformedAlgebra | None" = None):
        self.sigma = sigma
        self.base = base

    def mul(self, u, v):
        if self.base is None:
            return deform_product(self.sigma, u, v)
        return deform_product(self.sigma, u, v, base=self.base.mul)


def deform_antipode(sigma: HopfCocycle, u, D=None):
    """S_sigma(a) = sigma(a1, S a2) S(a3) sigma^{-1}(S a4, a5)."""
    M = sigma.model
    inv = sigma.inverse()
    out = M.zero()
    for a, c in u.terms.items():
        for (a1, a2, a3, a4, a5), x in M.coproduct_mono(a, 5).items():
            s = sigma(_elem(M, a1), antipode(_elem(M, a2)))
            if not s:
                continue
            t = inv(antipode(_elem(M, a4)), _elem(M, a5))
            if not t:
                continue
            out = out + antipode(_elem(M, a3)).scale(c * x * s * t)
    return out


def twisted_action(sigma: HopfCocycle, h, a: SmashElement) -> SmashElement:
    """h ._sigma a = sigma(h, g) sigma^{-1}(h g h^{-1}, h) h.a, termwise in a."""
    M = a.model
    G = M.group
    inv = sigma.inverse()
    out = M.zero()
    e = G.identity
    for (w, g0), c in a.terms.items():
        if g0 != e:
            raise NotHomogeneous("twisted action is defined on R-elements")
        g = M.yd.word_degree(w)
        hg = G.mul(G.mul(h, g), G.inv(h))
        s = sigma.value(((), h), ((), g)) * inv.value(((), hg), ((), h))
        out = out + conj(h, _elem(M, (w, e), c)).scale(s)
    return out


def star_product(phi, u: SmashElement, v: SmashElement) -> SmashElement:
    """phi(eta, kappa) phi(eta', kappa')^{-1} u v for bidegrees (eta, eta'), (kappa, kappa')."""
    (l1, r1), (l2, r2) = weight(u), weight(v)
    return multiply(u, v).scale(phi(l1, l2) / phi(r1, r2))


# ------------------------------------------------------------ checks

def cocycle_identity_defect(sigma: HopfCocycle, a, b, c):
    """LHS - RHS of sigma(b1,c1) sigma(a,b2c2) = sigma(a1,b1) sigma(a2b2,c) on monomials."""
    M = sigma.model
    lhs = Fraction(0)
    db = M.coproduct_mono(b, 2)
    dc = M.coproduct_mono(c, 2)
    for (b1, b2), x in db.items():
        for (c1, c2), y in dc.items():
            s = sigma.value(b1, c1)
            if not s:
                continue
            sc, bc = M.mono_mul(b2, c2)
            lhs += x * y * s * sc * sigma.value(a, bc)
    rhs = Fraction(0)
    da = M.coproduct_mono(a, 2)
    for (a1, a2), x in da.items():
        for (b1, b2), y in db.items():
            s = sigma.value(a1, b1)
            if not s:
                continue
            sc, ab = M.mono_mul(a2, b2)
            rhs += x * y * s * sc * sigma.value(ab, c)
    return lhs - rhs


def normalization_holds(sigma: HopfCocycle, a) -> bool:
    one = ((), sigma.model.group.identity)
    eps = Fraction(1) if not a[0] else Fraction(0)
    return sigma.value(a, one) == eps == sigma.value(one, a)


def cocycle_from_json(model, obj) -> HopfCocycle:
    kind = obj.get("kind")
    if kind == "bicharacter":
        return InducedCocycle(model, Bicharacter(obj["matrix"], obj.get("projection")))
    if kind == "table":
        return InducedCocycle(model, GroupCocycleTable.from_json(obj))
    if kind == "exp":
        eta = obj["eta"]
        pairs = {(int(i) - 1, int(j) - 1): rat(v) for i, j, v in eta.get("pairs", [])}
        return exp_cocycle(model, pairs, eta.get("scale", "1"))
    if kind == "convolve":
        return ConvolvedCocycle([cocycle_from_json(model, f) for f in obj["factors"]])
    if kind == "inverse":
        return InverseCocycle(cocycle_from_json(model, obj["of"]))
    raise ValueError(f"unknown cocycle kind {kind!r}")


__all__ = [
    "Bicharacter", "GroupCocycleTable", "HopfCocycle", "InducedCocycle", "ExpCocycle",
    "ConvolvedCocycle", "InverseCocycle", "RescaledCocycle", "counit_cocycle", "convolve", "eval_induced",
    "exp_cocycle", "deform_product", "deform_antipode", "twisted_action", "star_product",
    "DeformedAlgebra", "cocycle_identity_defect", "normalization_holds", "cocycle_from_json",
    "counit",
]
