"""Pure-Python term-dict kernel for Laurent polynomial arithmetic.

Terms are dicts mapping exponent tuples to nonzero int or Fraction
coefficients.  A Cython build of the same functions is preferred at import
time when available.
"""

IMPLEMENTATION = "python"


def kadd(a, b):
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


def ksub(a, b):
    out = dict(a)
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


def kneg(a):
    return {exp: -c for exp, c in a.items()}


def kscale(a, c):
    if not c:
        return {}
    out = {}
    for exp, v in a.items():
        v = v * c
        if v:
            out[exp] = v
    return out


def kmul(a, b):
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for eb, cb in b.items():
        for ea, ca in a.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
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
