# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Dense Gauss-Jordan elimination over Z/p for p < 2^63 (compiled backend)."""
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

cdef extern from *:
    """
    static inline unsigned long long qt_mulmod(unsigned long long a, unsigned long long b,
                                               unsigned long long p) {
        return (unsigned long long)(((unsigned __int128)a * b) % p);
    }
    """
    unsigned long long qt_mulmod(unsigned long long a, unsigned long long b,
                                 unsigned long long p) nogil

ctypedef unsigned long long u64


cdef u64 _powmod(u64 a, u64 e, u64 p) nogil:
    cdef u64 r = 1
    a = a % p
    while e:
        if e & 1:
            r = qt_mulmod(r, a, p)
        a = qt_mulmod(a, a, p)
        e >>= 1
    return r


cdef Py_ssize_t _eliminate(u64* M, Py_ssize_t m, Py_ssize_t n, u64 p,
                           Py_ssize_t* piv) nogil:
    cdef Py_ssize_t r = 0, c, i, k, sel
    cdef u64 inv, f, t
    cdef u64* rowr
    cdef u64* rowi
    for c in range(n):
        if r == m:
            break
        sel = -1
        for i in range(r, m):
            if M[i * n + c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for k in range(c, n):
                t = M[sel * n + k]
                M[sel * n + k] = M[r * n + k]
                M[r * n + k] = t
        rowr = M + r * n
        inv = _powmod(rowr[c], p - 2, p)
        for k in range(c, n):
            if rowr[k]:
                rowr[k] = qt_mulmod(rowr[k], inv, p)
        for i in range(m):
            if i == r:
                continue
            rowi = M + i * n
            f = rowi[c]
            if f == 0:
                continue
            f = p - f
            for k in range(c, n):
                if rowr[k]:
                    rowi[k] = (rowi[k] + qt_mulmod(f, rowr[k], p)) % p
        piv[r] = c
        r += 1
    return r


cdef u64* _load(list rows, Py_ssize_t n, u64 p) except NULL:
    cdef Py_ssize_t m = len(rows), i
    cdef u64* M = <u64*> calloc(max(m * n, 1), sizeof(u64))
    if M == NULL:
        raise MemoryError()
    for i in range(m):
        for c, v in (<dict> rows[i]).items():
            M[i * n + <Py_ssize_t> c] = <u64> (v % p)
    return M


def rref_mod(list rows, Py_ssize_t ncols, u64 p):
    """Reduced row echelon form of sparse integer rows modulo p.

    Returns (pivot columns, reduced nonzero rows as dicts col -> residue).
    """
    cdef Py_ssize_t m = len(rows), r, i, k
    cdef u64* M = _load(rows, ncols, p)
    cdef Py_ssize_t* piv = <Py_ssize_t*> calloc(max(m, 1), sizeof(Py_ssize_t))
    try:
        with nogil:
            r = _eliminate(M, m, ncols, p, piv)
        pivots = [piv[i] for i in range(r)]
        out = []
        for i in range(r):
            d = {}
            for k in range(piv[i], ncols):
                if M[i * ncols + k]:
                    d[k] = M[i * ncols + k]
            out.append(d)
        return pivots, out
    finally:
        free(M)
        free(piv)


def solve_mod(list rows, Py_ssize_t ncols, Py_ssize_t target, u64 p):
    """Eliminate and read off the column ``target`` of the reduced matrix.

    Returns (target is a pivot, pivot columns, {pivot col: residue in target col}).
    """
    cdef Py_ssize_t m = len(rows), r, i
    cdef u64* M = _load(rows, ncols, p)
    cdef Py_ssize_t* piv = <Py_ssize_t*> calloc(max(m, 1), sizeof(Py_ssize_t))
    try:
        with nogil:
            r = _eliminate(M, m, ncols, p, piv)
        pivots = [piv[i] for i in range(r)]
        inconsistent = target in pivots
        sol = {}
        if not inconsistent:
            for i in range(r):
                if M[i * ncols + target]:
                    sol[piv[i]] = M[i * ncols + target]
        return inconsistent, pivots, sol
    finally:
        free(M)
        free(piv)
