"""Exact sparse linear algebra over Q.

Systems are first attacked modulo random 62-bit primes by the elimination
kernel (compiled if available, else pure Python); solutions are lifted by CRT
and rational reconstruction and accepted only after an exact check over Q.
Anything not certified that way is decided by exact Fraction elimination.
"""
from __future__ import annotations

import os
import random
from fractions import Fraction
from math import isqrt

import gmpy2

if os.environ.get("QTWIST_PURE_PYTHON"):
    from . import _kernels_py as _k

    BACKEND = "python"
else:
    try:
        from . import _kernels as _k

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _kernels_py as _k

        BACKEND = "python"

DENSE_LIMIT = 40_000_000  # entries; larger systems go to the sparse fallback
PRIME_SEED = 0x51A7
_PRIMES: list[int] = []


def primes(k: int) -> list[int]:
    """First k primes of a fixed pseudo-random sequence in [2^61, 2^62)."""
    if len(_PRIMES) < k:
        rng = random.Random(PRIME_SEED + len(_PRIMES))
        while len(_PRIMES) < k:
            p = int(gmpy2.next_prime(rng.randrange(1 << 61, 1 << 62)))
            if p < (1 << 62) and p not in _PRIMES:
                _PRIMES.append(p)
    return _PRIMES[:k]


def ratrecon(a: int, m: int) -> Fraction | None:
    """Rational n/d with n = a*d mod m and |n|, d <= sqrt(m/2), or None."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    f = Fraction(r1, t1)
    if f.denominator != abs(t1):  # gcd(r1, t1) != 1
        return None
    return f


def _reduce_rows(rows, p):
    out = []
    for r in rows:
        d = {}
        for c, v in r.items():
            den = v.denominator % p
            if den == 0:
                return None
            d[c] = v.numerator * pow(den, p - 2, p) % p
        out.append(d)
    return out


def _kernel_call(name, rows, ncols, *args):
    mod = _k
    if len(rows) * ncols > DENSE_LIMIT and BACKEND == "cython":
        from . import _kernels_py as mod
    return getattr(mod, name)(rows, ncols, *args)


# ---------------------------------------------------------------- exact side

def rref_exact(rows, ncols):
    """Sparse Gauss-Jordan over Fractions.  rows: list of dict col -> Fraction."""
    work = [{c: Fraction(v) for c, v in r.items() if v} for r in rows]
    work = [r for r in work if r]
    pivots, done = [], []
    cols = sorted({c for r in work for c in r})
    for c in cols:
        best = None
        for idx, r in enumerate(work):
            if c in r and (best is None or len(r) < len(work[best])):
                best = idx
        if best is None:
            continue
        pr = work.pop(best)
        inv = 1 / pr[c]
        pr = {k: v * inv for k, v in pr.items()}
        nxt = []
        for r in work:
            f = r.get(c)
            if f:
                r = _axpy(r, pr, f)
            if r:
                nxt.append(r)
        work = nxt
        for i, d in enumerate(done):
            f = d.get(c)
            if f:
                done[i] = _axpy(d, pr, f)
        pivots.append(c)
        done.append(pr)
        if not work:
            break
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [pivots[i] for i in order], [done[i] for i in order]


def _axpy(r, pr, f):
    r = dict(r)
    for k, v in pr.items():
        nv = r.get(k, 0) - f * v
        if nv:
            r[k] = nv
        else:
            r.pop(k, None)
    return r


def _index(vectors):
    keys = {}
    for v in vectors:
        for k in v:
            if k not in keys:
                keys[k] = len(keys)
    return keys


def rank(vectors) -> int:
    """Rank of a list of sparse vectors (dicts key -> Fraction)."""
    keys = _index(vectors)
    rows = [{keys[k]: Fraction(c) for k, c in v.items() if c} for v in vectors]
    pivots, _ = rref_exact(rows, len(keys))
    return len(pivots)


def rank_mod(vectors, p: int | None = None) -> int:
    """Rank modulo a prime (a lower bound for the rank over Q)."""
    p = p or primes(1)[0]
    keys = _index(vectors)
    rows = _reduce_rows([{keys[k]: Fraction(c) for k, c in v.items() if c} for v in vectors], p)
    if rows is None:
        raise ZeroDivisionError("prime divides a denominator")
    pivots, _ = _kernel_call("rref_mod", rows, len(keys), p)
    return len(pivots)


def row_basis(vectors):
    """Reduced echelon basis of the span as a list of (pivot key, row dict)."""
    keys = _index(vectors)
    inv = {i: k for k, i in keys.items()}
    rows = [{keys[k]: Fraction(c) for k, c in v.items() if c} for v in vectors]
    pivots, done = rref_exact(rows, len(keys))
    return [(inv[pc], {inv[c]: v for c, v in r.items()}) for pc, r in zip(pivots, done)]


def in_span(basis, vec) -> bool:
    """Membership of vec in the span of a basis produced by row_basis."""
    r = {k: Fraction(v) for k, v in vec.items() if v}
    for pk, row in basis:
        f = r.get(pk)
        if f:
            r = _axpy(r, row, f)
    return not r


def nullspace(vectors):
    """Basis of {c : sum_i c_i vectors[i] = 0} as dicts i -> Fraction."""
    keys = _index(vectors)
    n = len(vectors)
    rows: list[dict] = [dict() for _ in keys]
    for j, v in enumerate(vectors):
        for k, c in v.items():
            if c:
                rows[keys[k]][j] = Fraction(c)
    pivots, done = rref_exact(rows, n)
    pset = set(pivots)
    out = []
    for f in range(n):
        if f in pset:
            continue
        vec = {f: Fraction(1)}
        for pc, r in zip(pivots, done):
            v = r.get(f)
            if v:
                vec[pc] = -v
        out.append(vec)
    return out


# -------------------------------------------------------------- solving

def _verify(columns, target, x) -> bool:
    acc: dict = {}
    for j, c in x.items():
        for k, v in columns[j].items():
            nv = acc.get(k, 0) + c * v
            if nv:
                acc[k] = nv
            else:
                acc.pop(k, None)
    t = {k: Fraction(v) for k, v in target.items() if v}
    return acc == t


class SolveStats:
    def __init__(self):
        self.primes_used = 0
        self.method = ""


def solve(columns, target, modular: bool = True, max_primes: int = 12, stats: SolveStats | None = None):
    """Find x with sum_j x_j columns[j] = target exactly, or None if none exists.

    columns, target: sparse dicts over arbitrary hashable keys.
    """
    stats = stats or SolveStats()
    keys = _index(list(columns) + [target])
    n = len(columns)
    rows: list[dict] = [dict() for _ in keys]
    for j, v in enumerate(columns):
        for k, c in v.items():
            if c:
                rows[keys[k]][j] = Fraction(c)
    for k, c in target.items():
        if c:
            rows[keys[k]][n] = Fraction(c)
    if not target or not any(target.values()):
        stats.method = "trivial"
        return {}
    if modular and keys:
        sig = None
        acc: dict = {}
        M = 1
        misses = 0
        for p in primes(max_primes):
            rp = _reduce_rows(rows, p)
            if rp is None:
                continue
            stats.primes_used += 1
            incons, pivots, sol = _kernel_call("solve_mod", rp, n + 1, n, p)
            if incons:
                misses += 1
                if misses >= 2:
                    break
                continue
            psig = tuple(pivots)
            if psig != sig:
                if sig is not None and (len(psig) < len(sig) or (len(psig) == len(sig) and psig > sig)):
                    continue  # unlucky prime
                sig, acc, M = psig, {c: 0 for c in psig}, 1
            for c in acc:
                r = sol.get(c, 0)
                # CRT: combine acc[c] mod M with r mod p
                acc[c] = acc[c] + M * ((r - acc[c]) * pow(M, -1, p) % p)
            M *= p
            x = {}
            ok = True
            for c, a in acc.items():
                if c == n:
                    continue
                f = ratrecon(a, M)
                if f is None:
                    ok = False
                    break
                if f:
                    x[c] = f
            if ok and _verify(columns, target, x):
                stats.method = "modular"
                return x
    stats.method = "exact"
    pivots, done = rref_exact(rows, n + 1)
    if n in pivots:
        return None
    x = {}
    for pc, r in zip(pivots, done):
        v = r.get(n)
        if v:
            x[pc] = v
    assert _verify(columns, target, x)
    return x
