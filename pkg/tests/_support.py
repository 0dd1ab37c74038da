"""Shared builders for the test suite."""
import itertools
from fractions import Fraction

from qtwist import cocycles as cc
from qtwist.datum import build_dj_datum, dj_twist_bicharacter, validate_reduced_datum
from qtwist.qgroups import ured_model

A2 = ([[2, -1], [-1, 2]], [[4, 6], [Fraction(1, 24), 4]])
B2 = ([[2, -1], [-2, 2]], [[16, 2], [Fraction(1, 32), 4]])
G2 = ([[2, -1], [-3, 2]], [[64, 2], [Fraction(1, 128), 4]])
SL2 = ([[2]], [[4]])


def datum(pair, linking=None):
    return validate_reduced_datum(pair[0], pair[1], linking)


def dj_sigma(d, q_I=2):
    M = ured_model(d).smash
    return cc.InducedCocycle(M, dj_twist_bicharacter(d, build_dj_datum(d, [q_I])))


def monomial_triples(M, group_parts, max_deg=3):
    """All (a, b, c) monomials with total word length <= max_deg."""
    N = M.yd.N
    words = {n: list(itertools.product(range(N), repeat=n)) for n in range(max_deg + 1)}
    for n1 in range(max_deg + 1):
        for n2 in range(max_deg + 1 - n1):
            for n3 in range(max_deg + 1 - n1 - n2):
                for w1, w2, w3 in itertools.product(words[n1], words[n2], words[n3]):
                    for g1, g2, g3 in itertools.product(group_parts, repeat=3):
                        yield (w1, g1), (w2, g2), (w3, g3)


def suite_failures(sigma, group_parts, max_deg=3, assoc=True):
    """Count identity, normalization and associativity failures over all triples."""
    M = sigma.model
    bad = 0
    seen = set()
    for a, b, c in monomial_triples(M, group_parts, max_deg):
        if cc.cocycle_identity_defect(sigma, a, b, c) != 0:
            bad += 1
        for m in (a, b, c):
            if m not in seen:
                seen.add(m)
                if not cc.normalization_holds(sigma, m):
                    bad += 1
        if assoc:
            A, B, C = (cc._elem(M, m) for m in (a, b, c))
            left = cc.deform_product(sigma, cc.deform_product(sigma, A, B), C)
            right = cc.deform_product(sigma, A, cc.deform_product(sigma, B, C))
            if left != right:
                bad += 1
    return bad
