# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels for sparse multivariate polynomial arithmetic.

Same API as ``cyclopadic._kernels_py``; coefficients stay arbitrary-precision
Python ints, the win is the C-level loop over the term dicts.
"""

BACKEND = "cython"


cdef tuple _add_exps(tuple ea, tuple eb):
    cdef Py_ssize_t la = len(ea)
    cdef Py_ssize_t lb = len(eb)
    cdef Py_ssize_t i
    if la < lb:
        ea, eb = eb, ea
        la, lb = lb, la
    cdef list out = list(ea)
    for i in range(lb):
        out[i] = out[i] + eb[i]
    return tuple(out)


def mul_terms(dict a, dict b):
    """Exact product of two term maps."""
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, c
    if len(a) < len(b):
        a, b = b, a
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = _add_exps(ea, eb)
            c = out.get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def add_scaled(dict acc, dict src, object scale):
    """In-place acc += scale * src."""
    cdef tuple e
    cdef object c, v
    if scale == 0:
        return
    for e, c in src.items():
        v = acc.get(e)
        if v is None:
            acc[e] = scale * c
        else:
            v = v + scale * c
            if v:
                acc[e] = v
            else:
                del acc[e]


def shift_accumulate(dict acc, dict src, Py_ssize_t var0, object scale):
    """In-place acc += scale * X_{var0+1} * src (var0 is a 0-based index)."""
    cdef tuple e, enew
    cdef object c, v
    cdef list tmp
    if scale == 0:
        return
    for e, c in src.items():
        if len(e) > var0:
            tmp = list(e)
            tmp[var0] = tmp[var0] + 1
            enew = tuple(tmp)
        else:
            enew = e + (0,) * (var0 - len(e)) + (1,)
        v = acc.get(enew)
        if v is None:
            acc[enew] = scale * c
        else:
            v = v + scale * c
            if v:
                acc[enew] = v
            else:
                del acc[enew]
