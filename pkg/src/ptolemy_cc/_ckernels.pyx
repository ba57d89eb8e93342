# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Masks fit in 64 bits: the largest polygon we enumerate has 27 diagonals.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t


cdef struct PairTable:
    int npairs
    int *pi
    int *pj
    uint64_t *req


cdef int _load(PairTable *t, pair_i, pair_j, pair_req) except -1:
    cdef int k
    t.npairs = len(pair_i)
    t.pi = <int *> malloc(max(t.npairs, 1) * sizeof(int))
    t.pj = <int *> malloc(max(t.npairs, 1) * sizeof(int))
    t.req = <uint64_t *> malloc(max(t.npairs, 1) * sizeof(uint64_t))
    if not t.pi or not t.pj or not t.req:
        _release(t)
        raise MemoryError()
    for k in range(t.npairs):
        t.pi[k] = pair_i[k]
        t.pj[k] = pair_j[k]
        t.req[k] = pair_req[k]
    return 0


cdef void _release(PairTable *t):
    free(t.pi)
    free(t.pj)
    free(t.req)


cdef inline uint64_t _closure(uint64_t mask, PairTable *t) nogil:
    cdef bint changed = True
    cdef int k
    cdef uint64_t one = 1
    while changed:
        changed = False
        for k in range(t.npairs):
            if (mask >> t.pi[k]) & one and (mask >> t.pj[k]) & one:
                if t.req[k] & ~mask:
                    mask |= t.req[k]
                    changed = True
    return mask


def closure(int ndiag, mask, pair_i, pair_j, pair_req):
    if ndiag > 64:
        raise ValueError("too many diagonals for 64-bit masks")
    cdef PairTable t
    _load(&t, pair_i, pair_j, pair_req)
    try:
        return _closure(<uint64_t> mask, &t)
    finally:
        _release(&t)


def enumerate_closed(int ndiag, pair_i, pair_j, pair_req):
    if ndiag > 63:
        raise ValueError("too many diagonals for 64-bit masks")
    cdef PairTable t
    cdef uint64_t one = 1
    cdef uint64_t full = (one << ndiag) - one
    cdef uint64_t a, b, bit
    cdef int i
    out = []
    _load(&t, pair_i, pair_j, pair_req)
    try:
        a = _closure(0, &t)
        out.append(a)
        while a != full:
            i = ndiag - 1
            while i >= 0:
                bit = one << i
                if a & bit:
                    a &= ~bit
                else:
                    b = _closure(a | bit, &t)
                    if (b & ~a) & (bit - one) == 0:
                        a = b
                        out.append(a)
                        break
                i -= 1
    finally:
        _release(&t)
    return out


def count_downsets(preds):
    cdef int k = len(preds)
    if k > 40:
        raise ValueError("relation too large to enumerate")
    cdef uint64_t req[64]
    cdef uint64_t sub, n
    cdef uint64_t one = 1
    cdef unsigned long long count = 0
    cdef int r
    cdef bint ok
    for r in range(k):
        req[r] = <uint64_t> preds[r]
    n = one << k
    with nogil:
        sub = 0
        while sub < n:
            ok = True
            for r in range(k):
                if (sub >> r) & one and req[r] & ~sub:
                    ok = False
                    break
            if ok:
                count += 1
            sub += 1
    return count
