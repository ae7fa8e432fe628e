# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse multiplication kernels (term-merge inner loops).

Must stay behaviorally identical to `_kernels_py.py`.
"""


def mul_terms(dict a, dict b, modulus):
    cdef dict acc = {}
    cdef tuple ma, mb, m
    cdef Py_ssize_t i, n
    if len(a) > len(b):
        a, b = b, a
    for ma, ca in a.items():
        n = len(ma)
        for mb, cb in b.items():
            m = tuple([ma[i] + mb[i] for i in range(n)])
            if m in acc:
                acc[m] = acc[m] + ca * cb
            else:
                acc[m] = ca * cb
    cdef dict out = {}
    if modulus:
        for m, c in acc.items():
            c = c % modulus
            if c:
                out[m] = c
    else:
        for m, c in acc.items():
            if c:
                out[m] = c
    return out


def mul_terms_bounded(dict a, dict b, modulus, tuple indices, bound):
    cdef dict da = {}, db = {}
    cdef tuple ma, mb, m
    cdef Py_ssize_t i, n
    cdef long s
    for ma in a:
        s = 0
        for i in indices:
            s += ma[i]
        da[ma] = s
    for mb in b:
        s = 0
        for i in indices:
            s += mb[i]
        db[mb] = s
    cdef dict acc = {}
    for ma, ca in a.items():
        n = len(ma)
        ra = bound - da[ma]
        for mb, cb in b.items():
            if db[mb] > ra:
                continue
            m = tuple([ma[i] + mb[i] for i in range(n)])
            if m in acc:
                acc[m] = acc[m] + ca * cb
            else:
                acc[m] = ca * cb
    cdef dict out = {}
    if modulus:
        for m, c in acc.items():
            c = c % modulus
            if c:
                out[m] = c
    else:
        for m, c in acc.items():
            if c:
                out[m] = c
    return out
