"""Groups, monomial Yetter-Drinfeld modules, braidings and quantum symmetrizers.

Group elements are plain tuples: exponent vectors for a free abelian group,
0-based image tuples for a symmetric group.  The owning group object supplies
the operations.
"""
from __future__ import annotations

import itertools
import os
import re
from fractions import Fraction

from .errors import SizeBudgetExceeded

DEFAULT_SIZE_BUDGET = 2_000_000


def size_budget() -> int:
    raw = os.environ.get("QTWIST_SIZE_BUDGET")
    return int(raw) if raw else DEFAULT_SIZE_BUDGET


class FreeAbelianGroup:
    is_abelian = True

    def __init__(self, names):
        self.names = tuple(names)
        self.rank = len(self.names)
        self.identity = (0,) * self.rank

    def gen(self, k, power=1):
        g = [0] * self.rank
        g[k] = power
        return tuple(g)

    def element(self, **exps):
        g = [0] * self.rank
        for name, e in exps.items():
            g[self.names.index(name)] = e
        return tuple(g)

    @staticmethod
    def mul(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def inv(a):
        return tuple(-x for x in a)

    def fmt(self, g) -> str:
        parts = []
        for name, e in zip(self.names, g):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return " ".join(parts) if parts else "e"

    def to_json(self, g):
        return {"group": list(g)}

    def __eq__(self, other):
        return isinstance(other, FreeAbelianGroup) and self.names == other.names

    def __hash__(self):
        return hash(("Z", self.names))


class SymmetricGroup:
    is_abelian = False

    def __init__(self, n: int):
        self.n = n
        self.identity = tuple(range(n))

    @staticmethod
    def mul(a, b):
        # (a*b)(i) = a(b(i)): apply b first
        return tuple(a[i] for i in b)

    @staticmethod
    def inv(a):
        out = [0] * len(a)
        for i, ai in enumerate(a):
            out[ai] = i
        return tuple(out)

    def transposition(self, a: int, b: int):
        """(a b) with 1-based labels."""
        p = list(range(self.n))
        p[a - 1], p[b - 1] = b - 1, a - 1
        return tuple(p)

    def elements(self):
        return sorted(itertools.permutations(range(self.n)))

    def conj(self, g, h):
        return self.mul(self.mul(g, h), self.inv(g))

    def fmt(self, g) -> str:
        seen, cycles = set(), []
        for s in range(self.n):
            if s in seen or g[s] == s:
                continue
            c, i = [], s
            while i not in seen:
                seen.add(i)
                c.append(i + 1)
                i = g[i]
            cycles.append(c)
        if not cycles:
            return "()"
        sep = "" if self.n < 10 else ","
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles)

    def parse(self, s: str):
        s = s.strip()
        p = list(range(self.n))
        if s in ("()", "e", ""):
            return tuple(p)
        cycles = re.findall(r"\(([^()]*)\)", s)
        if "".join(f"({c})" for c in cycles) != s.replace(" ", ""):
            raise ValueError(f"bad permutation {s!r}")
        g = tuple(p)
        for c in cycles:
            pts = [int(x) for x in (c.split(",") if "," in c else list(c.replace(" ", "")))]
            cyc = list(range(self.n))
            for a, b in zip(pts, pts[1:] + pts[:1]):
                cyc[a - 1] = b - 1
            g = self.mul(g, tuple(cyc))
        return g

    def to_json(self, g):
        return {"perm": [i + 1 for i in g]}

    def __eq__(self, other):
        return isinstance(other, SymmetricGroup) and self.n == other.n

    def __hash__(self):
        return hash(("S", self.n))


class MonomialYD:
    """Basis x_0..x_{N-1}; g . x_i = chi(g, i) x_{g |> i}; x_i has degree g_i.

    ``act`` is a callable (g, i) -> (scalar, target).  Diagonal modules over a
    free abelian group are built with :func:`diagonal_yd`.
    """

    def __init__(self, group, degrees, act, names=None, chars=None):
        self.group = group
        self.degrees = tuple(degrees)
        self.N = len(self.degrees)
        self._act = act
        self.names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(self.N))
        self.chars = chars
        self._cache: dict = {}

    def act(self, g, i):
        key = (g, i)
        r = self._cache.get(key)
        if r is None:
            r = self._act(g, i)
            r = (Fraction(r[0]), r[1])
            self._cache[key] = r
        return r

    def act_word(self, g, word):
        """g acting diagonally on a tensor word; returns (scalar, word)."""
        c = Fraction(1)
        out = []
        for i in word:
            s, j = self.act(g, i)
            c *= s
            out.append(j)
        return c, tuple(out)

    def word_degree(self, word):
        G = self.group
        g = G.identity
        for i in word:
            g = G.mul(g, self.degrees[i])
        return g

    def check_yd(self, sample=None):
        """Multiplicativity of the action and YD compatibility on sample group elements."""
        G = self.group
        sample = list(sample) if sample is not None else self._default_sample()
        for g in sample:
            for h in sample:
                for i in range(self.N):
                    s1, t1 = self.act(h, i)
                    s2, t2 = self.act(g, t1)
                    s3, t3 = self.act(G.mul(g, h), i)
                    if t2 != t3 or s1 * s2 != s3:
                        return False
        for g in sample:
            for i in range(self.N):
                _, t = self.act(g, i)
                if self.degrees[t] != G.mul(G.mul(g, self.degrees[i]), G.inv(g)):
                    return False
        return True

    def _default_sample(self):
        G = self.group
        if isinstance(G, SymmetricGroup):
            return G.elements()
        gens = [G.gen(k) for k in range(G.rank)]
        return [G.identity] + gens + [G.inv(g) for g in gens]


def diagonal_yd(group: FreeAbelianGroup, degrees, chars, names=None) -> MonomialYD:
    """chars[i][k] is the scalar by which the k-th group generator acts on x_i."""
    chars = [[Fraction(c) for c in row] for row in chars]

    def act(g, i):
        s = Fraction(1)
        row = chars[i]
        for k, e in enumerate(g):
            if e:
                s *= row[k] ** e
        return s, i

    return MonomialYD(group, degrees, act, names, chars=chars)


def braid(V: MonomialYD, i: int, j: int):
    s, t = V.act(V.degrees[i], j)
    return s, (t, i)


def braid_equation_holds(V: MonomialYD) -> bool:
    rng = range(V.N)
    for a in rng:
        for b in rng:
            for c in rng:
                w = (a, b, c)
                if _apply_braid_word(V, [0, 1, 0], w) != _apply_braid_word(V, [1, 0, 1], w):
                    return False
    return True


def _apply_gen(V, k, coef, word):
    s, (u, v) = braid(V, word[k], word[k + 1])
    return coef * s, word[:k] + (u, v) + word[k + 2:]


def _apply_braid_word(V, gens, word):
    """Apply rho(s_{g1} ... s_{gm}) to a basis word (rightmost generator first)."""
    coef = Fraction(1)
    for k in reversed(gens):
        coef, word = _apply_gen(V, k, coef, word)
    return coef, word


def reduced_word(perm, variant: int = 0) -> list[int]:
    """A reduced expression s_{k1}...s_{km} (0-based positions) for perm.

    Bubble sort; variant 1 sweeps right-to-left, which generally yields a
    different reduced word for the same permutation.
    """
    p = list(perm)
    n = len(p)
    swaps = []
    changed = True
    while changed:
        changed = False
        rng = range(n - 1) if variant == 0 else range(n - 2, -1, -1)
        for k in rng:
            if p[k] > p[k + 1]:
                p[k], p[k + 1] = p[k + 1], p[k]
                swaps.append(k)
                changed = True
    # s_{km} ... s_{k1} perm = id  =>  perm = s_{k1} ... s_{km}
    return swaps


class SparseMatrix:
    """Columns indexed by basis words; each column a dict word -> coefficient."""

    def __init__(self, dim: int, cols: dict):
        self.dim = dim
        self.cols = cols

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for w, c in vec.items():
            for u, d in self.cols.get(w, {}).items():
                v = out.get(u, 0) + c * d
                if v:
                    out[u] = v
                else:
                    out.pop(u, None)
        return out

    def __eq__(self, other):
        return isinstance(other, SparseMatrix) and self.dim == other.dim and self.cols == other.cols

    def triplets(self):
        from .exactnum import format_rational

        return [[list(r), list(c), format_rational(v)] for c, col in sorted(self.cols.items()) for r, v in sorted(col.items())]


def _check_budget(V, n):
    if V.N ** n > size_budget():
        raise SizeBudgetExceeded(f"{V.N}^{n} basis words exceed budget {size_budget()}")


def quantum_symmetrizer(V: MonomialYD, n: int, method: str = "factored", variant: int = 0) -> SparseMatrix:
    """Q_n as a sparse matrix on the N^n words.

    method="sum" sums rho(M(sigma)) over all permutations with reduced words
    from :func:`reduced_word`; method="factored" uses the coset factorisation
    Q_n = (Q_{n-1} (x) id) T_n and is much faster.
    """
    if n < 1:
        raise ValueError("n >= 1")
    _check_budget(V, n)
    words = list(itertools.product(range(V.N), repeat=n))
    cols = {}
    if method == "sum":
        rws = [reduced_word(p, variant) for p in itertools.permutations(range(n))]
        for w in words:
            col: dict = {}
            for rw in rws:
                c, u = _apply_braid_word(V, rw, w)
                _add(col, u, c)
            cols[w] = col
        return SparseMatrix(len(words), cols)
    memo: dict = {}
    for w in words:
        cols[w] = _qsym_factored(V, w, memo)
    return SparseMatrix(len(words), cols)


def _add(d, k, c):
    v = d.get(k, 0) + c
    if v:
        d[k] = v
    else:
        d.pop(k, None)


def _qsym_factored(V, w, memo):
    n = len(w)
    if n <= 1:
        return {w: Fraction(1)}
    hit = memo.get(w)
    if hit is not None:
        return hit
    out: dict = {}
    # minimal coset representatives s_{n-2} s_{n-3} ... s_k (0-based) carry
    # the letter at position k to the end
    terms = [(Fraction(1), w)]
    for k in range(n - 2, -1, -1):
        terms.append(_apply_braid_word(V, list(range(n - 2, k - 1, -1)), w))
    for c, u in terms:
        head = _qsym_factored(V, u[:-1], memo)
        for h, d in head.items():
            _add(out, h + u[-1:], c * d)
    memo[w] = out
    return out
