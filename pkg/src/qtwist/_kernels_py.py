"""Pure-Python sparse Gauss-Jordan elimination over Z/p (fallback backend)."""


def rref_mod(rows, ncols, p):
    return _rref(rows, ncols, p)


def _rref(rows, ncols, p):
    work = [{c: v % p for c, v in r.items() if v % p} for r in rows]
    work = [r for r in work if r]
    pivots, done = [], []
    for c in range(ncols):
        best = None
        for idx, r in enumerate(work):
            if c in r and (best is None or len(r) < len(work[best])):
                best = idx
        if best is None:
            continue
        pr = work.pop(best)
        inv = pow(pr[c], p - 2, p)
        pr = {k: v * inv % p for k, v in pr.items()}
        nxt = []
        for r in work:
            f = r.get(c)
            if f:
                r = _axpy(r, pr, f, p)
            if r:
                nxt.append(r)
        work = nxt
        for i, d in enumerate(done):
            f = d.get(c)
            if f:
                done[i] = _axpy(d, pr, f, p)
        pivots.append(c)
        done.append(pr)
        if not work:
            break
    return pivots, done


def _axpy(r, pr, f, p):
    r = dict(r)
    for k, v in pr.items():
        nv = (r.get(k, 0) - f * v) % p
        if nv:
            r[k] = nv
        else:
            r.pop(k, None)
    return r


def solve_mod(rows, ncols, target, p):
    pivots, done = _rref(rows, ncols, p)
    if target in pivots:
        return True, pivots, {}
    sol = {}
    for c, d in zip(pivots, done):
        v = d.get(target)
        if v:
            sol[c] = v
    return False, pivots, sol
