"""Pure-Python fallback for the hot polynomial kernels.

Same API as the compiled module ``cyclopadic._kernels``; selected at import
time by :mod:`cyclopadic.polyring` when the extension is unavailable (or when
CYCLOPADIC_PURE_PYTHON is set).

Terms are dicts mapping canonical exponent tuples (no trailing zeros) to
nonzero big-integer coefficients.
"""

BACKEND = "python"


def _add_exps(ea, eb):
    # canonical inputs have nonzero last entries, so the sum needs no trimming
    la, lb = len(ea), len(eb)
    if la < lb:
        ea, eb, la, lb = eb, ea, lb, la
    return tuple(x + y for x, y in zip(ea, eb)) + ea[lb:]


def mul_terms(a, b):
    """Exact product of two term maps."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = _add_exps(ea, eb)
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def add_scaled(acc, src, scale):
    """In-place acc += scale * src."""
    if scale == 0:
        return
    for e, c in src.items():
        v = acc.get(e, 0) + scale * c
        if v:
            acc[e] = v
        elif e in acc:
            del acc[e]


def shift_accumulate(acc, src, var0, scale):
    """In-place acc += scale * X_{var0+1} * src (var0 is a 0-based index)."""
    if scale == 0:
        return
    for e, c in src.items():
        if len(e) > var0:
            enew = e[:var0] + (e[var0] + 1,) + e[var0 + 1 :]
        else:
            enew = e + (0,) * (var0 - len(e)) + (1,)
        v = acc.get(enew, 0) + scale * c
        if v:
            acc[enew] = v
        elif enew in acc:
            del acc[enew]
