"""Bosonization arithmetic on T(V) # kG for a monomial Yetter-Drinfeld module V.

A monomial is a pair (word, g) standing for x_{w1}...x_{wk} # g; elements are
finite dicts monomial -> Fraction with zero coefficients never stored.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import DegreeBudgetExceeded, ModelMismatch, NotHomogeneous
from .exactnum import format_rational, rat


def _acc(d, k, c):
    v = d.get(k, 0) + c
    if v:
        d[k] = v
    else:
        d.pop(k, None)


class SmashModel:
    def __init__(self, yd, label: str = ""):
        self.yd = yd
        self.group = yd.group
        self.label = label
        self._aw: dict = {}
        self._dn: dict = {}

    # -- constructors -------------------------------------------------
    def zero(self):
        return SmashElement(self, {})

    def one(self):
        return SmashElement(self, {((), self.group.identity): Fraction(1)})

    def gen(self, i: int):
        return SmashElement(self, {((i,), self.group.identity): Fraction(1)})

    def grp(self, g):
        return SmashElement(self, {((), tuple(g)): Fraction(1)})

    def mono(self, word, g=None, coef=1):
        g = self.group.identity if g is None else tuple(g)
        c = rat(coef)
        return SmashElement(self, {(tuple(word), g): c} if c else {})

    def word(self, *letters):
        return self.mono(letters)

    # -- structure ------------------------------------------------------
    def act_word(self, g, word):
        key = (g, word)
        r = self._aw.get(key)
        if r is None:
            r = self.yd.act_word(g, word)
            self._aw[key] = r
        return r

    def mono_mul(self, a, b):
        """Product of two monomials: returns (scalar, monomial)."""
        (w1, g1), (w2, g2) = a, b
        if w2:
            s, w2 = self.act_word(g1, w2)
        else:
            s = 1
        return s, (w1 + w2, self.group.mul(g1, g2))

    def fmt_mono(self, m) -> str:
        w, g = m
        ws = ".".join(self.yd.names[i] for i in w) if w else "1"
        return f"{ws} # {self.group.fmt(g)}"

    def coproduct_mono(self, m, parts: int = 2) -> dict:
        """Delta^{(parts)} of a monomial as dict (m_1, ..., m_parts) -> coef."""
        key = (m, parts)
        hit = self._dn.get(key)
        if hit is not None:
            return hit
        G = self.group
        e = G.identity
        w, g = m
        cur = {(((), e),) * parts: Fraction(1)}
        for j in w:
            gj = self.yd.degrees[j]
            # x_j sits in slot p; earlier slots get g_j, later slots get 1
            pieces = []
            for p in range(parts):
                pieces.append(tuple(((), gj) if s < p else (((j,), e) if s == p else ((), e)) for s in range(parts)))
            nxt: dict = {}
            for ms, c in cur.items():
                for pc in pieces:
                    coef = c
                    out = []
                    for a, b in zip(ms, pc):
                        s, ab = self.mono_mul(a, b)
                        coef = coef * s
                        out.append(ab)
                    _acc(nxt, tuple(out), coef)
            cur = nxt
        if g != e:
            cur = {tuple((a[0], G.mul(a[1], g)) for a in ms): c for ms, c in cur.items()}
        self._dn[key] = cur
        return cur


class SmashElement:
    __slots__ = ("model", "terms")

    def __init__(self, model: SmashModel, terms: dict):
        self.model = model
        self.terms = terms

    def _check(self, other):
        if other.model is not self.model:
            raise ModelMismatch("elements live in different models")

    def __add__(self, other):
        if not isinstance(other, SmashElement):
            other = self.model.one() * other
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return SmashElement(self.model, t)

    __radd__ = __add__

    def __neg__(self):
        return SmashElement(self.model, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = rat(c)
        if not c:
            return SmashElement(self.model, {})
        return SmashElement(self.model, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SmashElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = self.model.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SmashElement):
            return self.model is other.model and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for (w, _) in self.terms), default=0)

    def coefficient(self, word=(), g=None):
        g = self.model.group.identity if g is None else tuple(g)
        return self.terms.get((tuple(word), g), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), kv[0][0], kv[0][1]))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)} * {self.model.fmt_mono(m)}" for m, c in self.sorted_terms())

    __repr__ = __str__

    def to_json(self):
        G = self.model.group
        out = []
        for (w, g), c in self.sorted_terms():
            d = {"word": [i + 1 for i in w], "coef": format_rational(c)}
            d.update(G.to_json(g))
            out.append(d)
        return out


def multiply(u: SmashElement, v: SmashElement) -> SmashElement:
    u._check(v)
    M = u.model
    out: dict = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            s, m = M.mono_mul(a, b)
            _acc(out, m, c * d * s)
    return SmashElement(M, out)


def counit(u: SmashElement) -> Fraction:
    return sum((c for (w, _), c in u.terms.items() if not w), Fraction(0))


def coproduct(u: SmashElement, D: int | None = None, parts: int = 2) -> dict:
    """Delta (or the iterated Delta^{(parts)}) as a dict of monomial tuples."""
    if D is not None and u.degree() > D:
        raise DegreeBudgetExceeded(f"degree {u.degree()} > bound {D}")
    out: dict = {}
    for m, c in u.terms.items():
        for ms, d in u.model.coproduct_mono(m, parts).items():
            _acc(out, ms, c * d)
    return out


def tensor_pairs(model: SmashModel, tensor: dict):
    """Split a tensor dict into a list of (SmashElement, SmashElement, coef)."""
    return [(SmashElement(model, {a: Fraction(1)}), SmashElement(model, {b: Fraction(1)}), c) for (a, b), c in tensor.items()]


def tensor_multiply(model: SmashModel, A: dict, B: dict) -> dict:
    out: dict = {}
    for ms, c in A.items():
        for ns, d in B.items():
            coef = c * d
            res = []
            for a, b in zip(ms, ns):
                s, ab = model.mono_mul(a, b)
                coef *= s
                res.append(ab)
            _acc(out, tuple(res), coef)
    return out


def tensor_of(*elems: SmashElement) -> dict:
    out: dict = {}
    for combo in product(*(e.terms.items() for e in elems)):
        c = Fraction(1)
        for _, v in combo:
            c *= v
        _acc(out, tuple(m for m, _ in combo), c)
    return out


def antipode(u: SmashElement) -> SmashElement:
    M = u.model
    G = M.group
    out = M.zero()
    for (w, g), c in u.terms.items():
        term = M.grp(G.inv(g))
        for j in reversed(w):
            term = term * antipode_gen(M, j)
        out = out + term.scale(c)
    return out


def antipode_gen(M: SmashModel, j: int) -> SmashElement:
    gi = M.group.inv(M.yd.degrees[j])
    return -(M.grp(gi) * M.gen(j))


def conj(g, u: SmashElement) -> SmashElement:
    """(1#g) u (1#g^{-1}); on R-elements this is the Yetter-Drinfeld action."""
    M = u.model
    return M.grp(g) * u * M.grp(M.group.inv(g))


def coaction_degree(x: SmashElement):
    """Degree g of an element of R all of whose terms share one degree."""
    M = x.model
    degs = set()
    for (w, g), _ in x.terms.items():
        if g != M.group.identity:
            raise NotHomogeneous("element has group parts")
        degs.add(M.yd.word_degree(w))
    if len(degs) != 1:
        raise NotHomogeneous("terms have different coaction degrees")
    return degs.pop()


def braided_adjoint(x, y: SmashElement) -> SmashElement:
    M = y.model
    if isinstance(x, int):
        g, x = M.yd.degrees[x], M.gen(x)
    else:
        g = coaction_degree(x)
    return x * y - conj(g, y) * x


def weight(u: SmashElement):
    M = u.model
    G = M.group
    ws = set()
    for (w, g) in u.terms:
        ws.add((G.mul(M.yd.word_degree(w), g), g))
    if len(ws) != 1:
        raise NotHomogeneous("not homogeneous for the bigrading")
    return ws.pop()
