"""Generalized Cartan matrices."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import BadDiagonal, NotSymmetrizable, PositiveOffDiagonal, ZeroAsymmetry


class CartanMatrix(tuple):
    """Immutable square integer matrix with the generalized Cartan conditions."""

    @property
    def theta(self) -> int:
        return len(self)

    def __repr__(self):
        return f"CartanMatrix({[list(r) for r in self]})"


def validate_cartan(M) -> CartanMatrix:
    rows = [tuple(int(a) for a in r) for r in M]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("Cartan matrix must be square and nonempty")
    for i in range(n):
        if rows[i][i] != 2:
            raise BadDiagonal(f"a[{i + 1},{i + 1}] = {rows[i][i]}")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise PositiveOffDiagonal(f"a[{i + 1},{j + 1}] = {rows[i][j]}")
            if rows[i][j] == 0 and rows[j][i] != 0:
                raise ZeroAsymmetry(f"a[{i + 1},{j + 1}] = 0 but a[{j + 1},{i + 1}] = {rows[j][i]}")
    return CartanMatrix(rows)


def _classes(n, linked):
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and linked(i, j):
                    seen[j] = True
                    stack.append(j)
        out.append(sorted(comp))
    return out


def components(M) -> list[list[int]]:
    """Connected components (0-based indices), ordered by least member.

    Accepts a Cartan matrix (integer entries, link iff a_ij != 0) or a
    q-matrix given as a QMatrix / matrix of Fractions (link iff q_ij q_ji != 1).
    """
    from .datum import QMatrix

    n = len(M)
    if isinstance(M, QMatrix) or any(isinstance(a, Fraction) for r in M for a in r):
        return _classes(n, lambda i, j: i != j and Fraction(M[i][j]) * Fraction(M[j][i]) != 1)
    return _classes(n, lambda i, j: i != j and (M[i][j] != 0 or M[j][i] != 0))


def symmetrize(M: CartanMatrix) -> tuple[int, ...]:
    n = len(M)
    d: list[Fraction | None] = [None] * n
    for comp in components(M):
        root = comp[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in comp:
                if j != i and M[i][j] != 0 and d[j] is None:
                    # d_i a_ij = d_j a_ji
                    d[j] = d[i] * M[i][j] / M[j][i]
                    stack.append(j)
        for i in comp:
            for j in comp:
                if d[i] * M[i][j] != d[j] * M[j][i]:
                    raise NotSymmetrizable(f"cycle condition fails at ({i + 1},{j + 1})")
        den = lcm(*(d[i].denominator for i in comp))
        ints = [int(d[i] * den) for i in comp]
        g = gcd(*ints)
        for i, v in zip(comp, ints):
            d[i] = Fraction(v // g)
    return tuple(int(x) for x in d)
