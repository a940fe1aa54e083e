# cython: language_level=3
"""Compiled term-dict kernel for Laurent polynomial arithmetic.

Same contract as _poly_kernel_py: dicts mapping exponent tuples to nonzero
int or Fraction coefficients.
"""

IMPLEMENTATION = "cython"


def kadd(dict a, dict b):
    cdef dict out
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for exp, c in b.items():
        s = out.get(exp)
        if s is None:
            out[exp] = c
        else:
            s = s + c
            if s:
                out[exp] = s
            else:
                del out[exp]
    return out


def ksub(dict a, dict b):
    cdef dict out = dict(a)
    for exp, c in b.items():
        s = out.get(exp)
        if s is None:
            out[exp] = -c
        else:
            s = s - c
            if s:
                out[exp] = s
            else:
                del out[exp]
    return out


def kneg(dict a):
    cdef dict out = {}
    for exp, c in a.items():
        out[exp] = -c
    return out


def kscale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for exp, v in a.items():
        v = v * c
        if v:
            out[exp] = v
    return out


def kmul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ea, eb, exp
    cdef Py_ssize_t i, n
    if not a or not b:
        return out
    if len(a) < len(b):
        a, b = b, a
    for eb, cb in b.items():
        n = len(eb)
        for ea, ca in a.items():
            exp = tuple([ea[i] + eb[i] for i in range(n)])
            s = out.get(exp)
            if s is None:
                out[exp] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[exp] = s
                else:
                    del out[exp]
    return out
