"""Presentations by generators and relations and bounded-degree ideal membership.

Membership of u in the two-sided ideal generated by relations r_k is decided
within a filtration bound D by one linear system over the span of
w1 . r . w2 . (1#h) with w1, w2 words, |w1| + deg r + |w2| <= D.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import DegreeBudgetExceeded, InhomogeneousRelations
from .exactnum import format_rational
from .smash import SmashElement, SmashModel, _acc, conj


@dataclass
class Presentation:
    model: SmashModel
    relations: list
    labels: list = field(default_factory=list)
    bound: int = 4

    def __post_init__(self):
        rels, labels = [], []
        for k, r in enumerate(self.relations):
            if r.is_zero():
                raise ValueError(f"relation {k} is zero")
            rels.append(r)
            labels.append(self.labels[k] if k < len(self.labels) else f"r{k + 1}")
        self.relations, self.labels = rels, labels

    @property
    def generators(self):
        return list(self.model.yd.names)

    def extended(self, extra, labels=None) -> "Presentation":
        labels = labels or [f"r{len(self.relations) + k + 1}" for k in range(len(extra))]
        return Presentation(self.model, self.relations + list(extra), self.labels + list(labels), self.bound)


@dataclass
class MembershipCertificate:
    decision: bool
    bound: int
    combination: list = field(default_factory=list)  # (left word, conj g, relation index, right word, h, coef)

    def __bool__(self):
        return self.decision

    def resum(self, P: Presentation) -> SmashElement:
        M = P.model
        out = M.zero()
        for left, g, k, right, h, c in self.combination:
            r = P.relations[k] if g is None else conj(g, P.relations[k])
            out = out + (M.mono(left) * r * M.mono(right, h)).scale(c)
        return out

    def to_json(self, P: Presentation | None = None):
        d = {"decision": self.decision, "bound": self.bound}
        if self.decision:
            G = P.model.group if P else None
            rows = []
            for left, g, k, right, h, c in self.combination:
                row = {"left": [i + 1 for i in left], "relation": k + 1, "right": [i + 1 for i in right], "coef": format_rational(c)}
                if G is not None:
                    row["right_group"] = G.fmt(h)
                    if g is not None:
                        row["conjugate_by"] = G.fmt(g)
                rows.append(row)
            d["combination"] = rows
        return d


# ------------------------------------------------------------ weights

def _weight_fn(model: SmashModel):
    """Adjoint-action weight of a word (diagonal models), else None."""
    yd = model.yd
    if yd.chars is None:
        return None
    chars = yd.chars
    rank = len(chars[0]) if chars else 0

    def wt(word):
        v = [Fraction(1)] * rank
        for i in word:
            row = chars[i]
            for k in range(rank):
                v[k] *= row[k]
        return tuple(v)

    return wt


def _elem_weight(wt, u):
    ws = {wt(w) for (w, _) in u.terms}
    return ws.pop() if len(ws) == 1 else None


def _words(N, maxlen):
    for n in range(maxlen + 1):
        yield from itertools.product(range(N), repeat=n)


def _allowed_h(model, rel, query_groups):
    """Right group multipliers h with every group part of r.h inside the window."""
    G = model.group
    parts = {g for (_, g) in rel.terms}
    window = set(query_groups) | {G.identity}
    if getattr(G, "is_abelian", False):
        lo = [min(g[k] for g in window) for k in range(G.rank)]
        hi = [max(g[k] for g in window) for k in range(G.rank)]
        ranges = []
        for k in range(G.rank):
            # h_k with p_k + h_k in [lo, hi] for all parts p
            a = lo[k] - min(p[k] for p in parts)
            b = hi[k] - max(p[k] for p in parts)
            if a > b:
                return []
            ranges.append(range(a, b + 1))
        return [tuple(h) for h in itertools.product(*ranges)]
    window |= parts
    out = []
    for h in G.elements():
        if all(G.mul(p, h) in window for p in parts):
            out.append(h)
    return out


def _relation_pool(P: Presentation):
    """(conjugating g or None, index, element); finite groups add all Ad_g(r)."""
    G = P.model.group
    pool = [(None, k, r) for k, r in enumerate(P.relations)]
    if not getattr(G, "is_abelian", False) and hasattr(G, "elements"):
        seen = {r for _, _, r in pool}
        for g in G.elements():
            if g == G.identity:
                continue
            for k, r in enumerate(P.relations):
                c = conj(g, r)
                if c not in seen and (-c) not in seen:
                    seen.add(c)
                    pool.append((g, k, c))
    return pool


# ------------------------------------------------------------ membership

def ideal_member(elem: SmashElement, P: Presentation, D: int | None = None) -> MembershipCertificate:
    D = P.bound if D is None else D
    if elem.degree() > D:
        raise DegreeBudgetExceeded(f"element degree {elem.degree()} exceeds bound {D}")
    if elem.is_zero():
        return MembershipCertificate(True, D, [])
    M = P.model
    N = M.yd.N
    wt = _weight_fn(M)
    pool = _relation_pool(P)
    if wt is not None and any(_elem_weight(wt, r) is None for _, _, r in pool):
        wt = None
    # split the query by weight
    comps: dict = {}
    for m, c in elem.terms.items():
        key = wt(m[0]) if wt else None
        comps.setdefault(key, {})[m] = c
    qgroups = {g for (_, g) in elem.terms}
    words_by_len = {n: list(itertools.product(range(N), repeat=n)) for n in range(D + 1)}
    wcache: dict = {}

    def wword(w):
        v = wcache.get(w)
        if v is None:
            v = wcache[w] = wt(w)
        return v

    combination = []
    for key, target in comps.items():
        cols, meta = [], []
        for g, k, r in pool:
            dr = r.degree()
            if dr > D:
                continue
            rw = _elem_weight(wt, r) if wt else None
            hs = _allowed_h(M, r, qgroups)
            if not hs:
                continue
            for n1 in range(D - dr + 1):
                for w1 in words_by_len[n1]:
                    for n2 in range(D - dr - n1 + 1):
                        for w2 in words_by_len[n2]:
                            if wt is not None:
                                a, b = wword(w1), wword(w2)
                                if tuple(x * y * z for x, y, z in zip(a, rw, b)) != key:
                                    continue
                            base = M.mono(w1) * r * M.mono(w2)
                            for h in hs:
                                v = base * M.grp(h) if h != M.group.identity else base
                                if v.terms:
                                    cols.append(v.terms)
                                    meta.append((w1, g, k, w2, h))
        x = linalg.solve(cols, target)
        if x is None:
            return MembershipCertificate(False, D, [])
        for j, c in sorted(x.items()):
            if c:
                w1, g, k, w2, h = meta[j]
                combination.append((w1, g, k, w2, h, c))
    cert = MembershipCertificate(True, D, combination)
    if cert.resum(P) != elem:
        raise AssertionError("membership certificate does not re-sum to the query")
    return cert


def equal_mod(a: SmashElement, b: SmashElement, P: Presentation, D: int | None = None) -> bool:
    return ideal_member(a - b, P, D).decision


# ------------------------------------------------------------ dimensions

def _word_poly(r: SmashElement):
    out: dict = {}
    for (w, _), c in r.terms.items():
        _acc(out, w, c)
    return out


def degree_span(P: Presentation, d: int):
    """Vectors w1 r w2 of word length d (group parts forgotten)."""
    N = P.model.yd.N
    polys = []
    for r in P.relations:
        p = _word_poly(r)
        lens = {len(w) for w in p}
        if len(lens) > 1:
            raise InhomogeneousRelations("relations must be homogeneous in word length")
        if p:
            polys.append((lens.pop(), p))
    vecs = []
    for L, p in polys:
        for n1 in range(d - L + 1):
            n2 = d - L - n1
            for w1 in itertools.product(range(N), repeat=n1):
                for w2 in itertools.product(range(N), repeat=n2):
                    vecs.append({w1 + w + w2: c for w, c in p.items()})
    return vecs


def graded_dimension(P: Presentation, d: int) -> int:
    N = P.model.yd.N
    vecs = degree_span(P, d)
    return N ** d - (linalg.rank(vecs) if vecs else 0)


__all__ = ["Presentation", "MembershipCertificate", "ideal_member", "equal_mod", "graded_dimension", "degree_span"]
