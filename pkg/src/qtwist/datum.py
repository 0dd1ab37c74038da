"""Braiding matrices, reduced data of Cartan type and their DJ-type partners."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import CartanMatrix, components, symmetrize, validate_cartan
from .errors import (
    CartanCompatibility,
    NotTwistEquivalent,
    OrderViolation,
    QiiOne,
    RootMismatch,
    SizeMismatch,
    ZeroEntry,
)
from .exactnum import format_rational, rat


class QMatrix(tuple):
    @property
    def theta(self):
        return len(self)

    def __repr__(self):
        return "QMatrix(" + str([[format_rational(a) for a in r] for r in self]) + ")"


def qmatrix(q) -> QMatrix:
    rows = tuple(tuple(rat(a) for a in r) for r in q)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise SizeMismatch("q-matrix must be square and nonempty")
    for i in range(n):
        for j in range(n):
            if rows[i][j] == 0:
                raise ZeroEntry(f"q[{i + 1},{j + 1}] = 0")
    for i in range(n):
        if rows[i][i] == 1:
            raise QiiOne(f"q[{i + 1},{i + 1}] = 1")
    return QMatrix(rows)


@dataclass(frozen=True)
class ReducedDatum:
    cartan: CartanMatrix
    q: QMatrix
    linking: tuple
    warnings: tuple = field(default=(), compare=False)

    @property
    def theta(self) -> int:
        return len(self.q)

    def to_json(self):
        return {
            "cartan": [list(r) for r in self.cartan],
            "q": [[format_rational(a) for a in r] for r in self.q],
            "linking": [format_rational(a) for a in self.linking],
        }


def default_linking(q: QMatrix):
    return tuple(q[i][i] / (q[i][i] - 1) for i in range(len(q)))


def validate_reduced_datum(cartan, q, linking=None) -> ReducedDatum:
    A = validate_cartan(cartan)
    Q = qmatrix(q)
    n = len(A)
    if len(Q) != n:
        raise SizeMismatch(f"cartan is {n}x{n} but q is {len(Q)}x{len(Q)}")
    for i in range(n):
        if Q[i][i] == -1:
            for j in range(n):
                if j != i and A[i][j] <= -2:
                    raise OrderViolation(f"q[{i + 1},{i + 1}] = -1 has order 2 but a[{i + 1},{j + 1}] = {A[i][j]}")
    for i in range(n):
        for j in range(n):
            if Q[i][j] * Q[j][i] != Q[i][i] ** A[i][j]:
                raise CartanCompatibility(
                    f"q[{i + 1},{j + 1}] q[{j + 1},{i + 1}] = {format_rational(Q[i][j] * Q[j][i])}"
                    f" != q[{i + 1},{i + 1}]^{A[i][j]}"
                )
    warnings = []
    if linking is None:
        ell = default_linking(Q)
    else:
        ell = tuple(rat(x) for x in linking)
        if len(ell) != n:
            raise SizeMismatch("linking vector has wrong length")
        if any(x == 0 for x in ell):
            warnings.append("zero linking parameter: linking relations degenerate to q-commutators")
    return ReducedDatum(A, Q, ell, tuple(warnings))


def is_twist_equivalent(q, qh) -> bool:
    if len(q) != len(qh):
        raise SizeMismatch("matrices differ in size")
    n = len(q)
    for i in range(n):
        if q[i][i] != qh[i][i]:
            return False
        for j in range(n):
            if q[i][j] * q[j][i] != qh[i][j] * qh[j][i]:
                return False
    return True


@dataclass(frozen=True)
class DJDatum:
    base: ReducedDatum
    q_I: tuple
    d: tuple
    qhat: QMatrix

    def as_reduced(self) -> ReducedDatum:
        """The DJ matrix packaged as a reduced datum with the same linking."""
        return ReducedDatum(self.base.cartan, self.qhat, self.base.linking, self.base.warnings)


def build_dj_datum(datum: ReducedDatum, q_I) -> DJDatum:
    A = datum.cartan
    d = symmetrize(A)
    comps = components(A)
    q_I = tuple(rat(x) for x in q_I)
    if len(q_I) != len(comps):
        raise SizeMismatch(f"need one q_I per component ({len(comps)}), got {len(q_I)}")
    comp_of = {}
    for c, comp in enumerate(comps):
        for i in comp:
            comp_of[i] = c
    n = datum.theta
    for i in range(n):
        qi = q_I[comp_of[i]]
        if datum.q[i][i] != qi ** (2 * d[i]):
            raise RootMismatch(
                f"q[{i + 1},{i + 1}] = {format_rational(datum.q[i][i])} != {format_rational(qi)}^{2 * d[i]}"
            )
    qh = []
    for i in range(n):
        qi = q_I[comp_of[i]]
        qh.append(tuple(qi ** (d[i] * A[i][j]) if A[i][j] else Fraction(1) for j in range(n)))
    return DJDatum(datum, q_I, d, QMatrix(tuple(qh)))


def p_matrix(q) -> list[list[Fraction]]:
    """2θ×2θ braiding matrix in the generator order L_1..L_θ, K_1..K_θ.

    Blocks: q_ji^{-1} (both ≤ θ), q_ij^{-1} (i ≤ θ < j), q_ji (j ≤ θ < i),
    q_ij (both > θ), with indices reduced mod θ.
    """
    n = len(q)
    p = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for a in range(2 * n):
        for b in range(2 * n):
            i, j = a % n, b % n
            if a < n and b < n:
                p[a][b] = 1 / q[j][i]
            elif a < n:
                p[a][b] = 1 / q[i][j]
            elif b < n:
                p[a][b] = q[j][i]
            else:
                p[a][b] = q[i][j]
    return p


def dj_twist_bicharacter(datum: ReducedDatum, dj: DJDatum):
    from .cocycles import Bicharacter

    qh = dj.qhat if isinstance(dj, DJDatum) else qmatrix(dj)
    if not is_twist_equivalent(datum.q, qh):
        raise NotTwistEquivalent("source and DJ matrices are not twist-equivalent")
    p, ph = p_matrix(datum.q), p_matrix(qh)
    m = len(p)
    b = [[ph[a][c] / p[a][c] if a <= c else Fraction(1) for c in range(m)] for a in range(m)]
    return Bicharacter(b)
