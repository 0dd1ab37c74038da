"""Generate the ±1 group 2-cocycle on S_n used to twist χ into -1.

The table is the sign class of a Pin-type lift: transposition (a b) lifts to
v_ab = e_a - e_b in the Clifford algebra with e_i^2 = SQ and anticommuting
e_i.  s(g) is the product of the lifts along a fixed word for g, and
φ(g, h) is the sign of the scalar c with s(g) s(h) = c s(gh).
"""
import argparse
import json
from fractions import Fraction
from pathlib import Path

from qtwist.yd import SymmetricGroup

SQ = 1


def blade_mul(a, b):
    """Product of basis blades (sorted index tuples); returns (sign, blade)."""
    s, out = 1, list(a)
    for i in b:
        # move e_i left past larger indices
        k = len(out)
        while k > 0 and out[k - 1] > i:
            k -= 1
            s = -s
        if k > 0 and out[k - 1] == i:
            out.pop(k - 1)
            s *= SQ
        else:
            out.insert(k, i)
    return s, tuple(out)


def mul(x, y):
    out = {}
    for a, c in x.items():
        for b, d in y.items():
            s, bl = blade_mul(a, b)
            v = out.get(bl, 0) + s * c * d
            if v:
                out[bl] = v
            else:
                out.pop(bl, None)
    return out


def lift_word(G, g):
    """Transpositions (a, b), a < b, whose product (left to right) is g."""
    word, p = [], list(g)
    # straighten p by swaps on the right: p = p' (i j) ... until identity
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            # p * (i j): swap entries at positions i and j
            p[i], p[j] = p[j], p[i]
            word.append((min(i, j) + 1, max(i, j) + 1))
    return list(reversed(word))


def lift(G, g):
    x = {(): Fraction(1)}
    for a, b in lift_word(G, g):
        x = mul(x, {(a,): Fraction(1), (b,): Fraction(-1)})
    return x


def table(n):
    G = SymmetricGroup(n)
    els = G.elements()
    lifts = {g: lift(G, g) for g in els}
    for g in els:
        w = G.identity
        for a, b in lift_word(G, g):
            w = G.mul(w, G.transposition(a, b))
        assert w == g
    vals = {}
    for g in els:
        for h in els:
            lhs = mul(lifts[g], lifts[h])
            rhs = lifts[G.mul(g, h)]
            k = next(iter(rhs))
            c = lhs[k] / rhs[k]
            assert all(lhs.get(b, 0) == c * v for b, v in rhs.items()) and len(lhs) == len(rhs)
            if c < 0:
                vals[f"{G.fmt(g)},{G.fmt(h)}"] = "-1"
    return G, vals


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src/qtwist/data")
    args = ap.parse_args()
    G, vals = table(args.n)
    obj = {"kind": "table", "group": f"S{args.n}", "values": vals}
    (args.out / f"phi_s{args.n}.json").write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")
    bad = dict(vals)
    key = f"{G.fmt(G.transposition(1, 2))},{G.fmt(G.transposition(3, 4))}"
    if key in bad:
        del bad[key]
    else:
        bad[key] = "-1"
    obj["values"] = bad
    (args.out / f"phi_s{args.n}_bad.json").write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
