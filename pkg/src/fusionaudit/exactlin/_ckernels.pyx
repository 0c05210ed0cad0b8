# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for exact rational matrices.

Same contract as _pykernels: flat row-major lists of Fraction in, lists of
Fraction out, identical pivot conventions.  The speedup comes from running
the inner loops on raw numerator/denominator integers instead of Fraction
objects, rebuilding Fractions only at the boundary.

Fractions are rebuilt through Fraction.__new__ plus direct slot assignment
when a probe shows that works (the pairs are already normalized); otherwise
through the public constructor.
"""

from fractions import Fraction
from math import gcd


def _probe_fast_ctor():
    try:
        f = Fraction.__new__(Fraction)
        f._numerator = 3
        f._denominator = 2
        return f == Fraction(3, 2) and f + Fraction(1, 2) == Fraction(2)
    except (AttributeError, TypeError):
        return False


if _probe_fast_ctor():
    def _mk(n, d):
        f = Fraction.__new__(Fraction)
        f._numerator = n
        f._denominator = d
        return f
else:  # pragma: no cover - depends on the stdlib build
    def _mk(n, d):
        return Fraction(n, d)


cdef inline tuple _mul(object an, object ad, object bn, object bd):
    # inputs normalized, dens > 0; cross-reduce so the result is normalized
    cdef object g1, g2
    if an == 0 or bn == 0:
        return (0, 1)
    g1 = gcd(an, bd)
    g2 = gcd(bn, ad)
    return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))


cdef inline tuple _add(object an, object ad, object bn, object bd):
    cdef object nn, nd, g
    if an == 0:
        return (bn, bd)
    if bn == 0:
        return (an, ad)
    nn = an * bd + bn * ad
    if nn == 0:
        return (0, 1)
    nd = ad * bd
    g = gcd(nn, nd)
    return (nn // g, nd // g)


def matmul(Py_ssize_t n, Py_ssize_t m, list a, Py_ssize_t p, list b):
    cdef Py_ssize_t i, j, k
    cdef list anum = [None] * (n * m)
    cdef list aden = [None] * (n * m)
    cdef list bnum = [None] * (m * p)
    cdef list bden = [None] * (m * p)
    cdef list out = [None] * (n * p)
    cdef object x, sn, sd, tn, td
    for i in range(n * m):
        x = a[i]
        anum[i] = x.numerator
        aden[i] = x.denominator
    for i in range(m * p):
        x = b[i]
        bnum[i] = x.numerator
        bden[i] = x.denominator
    for i in range(n):
        for j in range(p):
            sn, sd = 0, 1
            for k in range(m):
                if anum[i * m + k] == 0 or bnum[k * p + j] == 0:
                    continue
                tn, td = _mul(anum[i * m + k], aden[i * m + k],
                              bnum[k * p + j], bden[k * p + j])
                sn, sd = _add(sn, sd, tn, td)
            out[i * p + j] = _mk(sn, sd)
    return out


def kron(Py_ssize_t n, Py_ssize_t m, list a, Py_ssize_t p, Py_ssize_t q, list b):
    cdef Py_ssize_t i, j, k, l, cols
    cdef object x, y, zero
    cols = m * q
    cdef list out = [None] * (n * p * cols)
    zero = _mk(0, 1)
    for i in range(n * p * cols):
        out[i] = zero
    for i in range(n):
        for j in range(m):
            x = a[i * m + j]
            if x.numerator == 0:
                continue
            for k in range(p):
                for l in range(q):
                    y = b[k * q + l]
                    if y.numerator == 0:
                        continue
                    out[(i * p + k) * cols + j * q + l] = x * y
    return out


def rref(Py_ssize_t n, Py_ssize_t m, list a):
    cdef Py_ssize_t i, j, c, r, pr
    cdef list num = [None] * (n * m)
    cdef list den = [None] * (n * m)
    cdef list pivots = []
    cdef object x, pn, pd, fn, fd, tn, td, un, ud
    for i in range(n * m):
        x = a[i]
        num[i] = x.numerator
        den[i] = x.denominator
    r = 0
    for c in range(m):
        if r == n:
            break
        pr = -1
        for i in range(r, n):
            if num[i * m + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(m):
                num[r * m + j], num[pr * m + j] = num[pr * m + j], num[r * m + j]
                den[r * m + j], den[pr * m + j] = den[pr * m + j], den[r * m + j]
        pn = num[r * m + c]
        pd = den[r * m + c]
        if pn != pd:
            # multiply row r by pd/pn, sign-normalized so dens stay positive
            if pn < 0:
                pn, pd = -pn, -pd
            for j in range(c, m):
                if num[r * m + j] != 0:
                    tn, td = _mul(num[r * m + j], den[r * m + j], pd, pn)
                    num[r * m + j] = tn
                    den[r * m + j] = td
        num[r * m + c] = 1
        den[r * m + c] = 1
        for i in range(n):
            if i == r:
                continue
            fn = num[i * m + c]
            if fn == 0:
                continue
            fd = den[i * m + c]
            for j in range(c, m):
                if num[r * m + j] == 0:
                    continue
                tn, td = _mul(fn, fd, num[r * m + j], den[r * m + j])
                un, ud = _add(num[i * m + j], den[i * m + j], -tn, td)
                num[i * m + j] = un
                den[i * m + j] = ud
        pivots.append(c)
        r += 1
    cdef list out = [None] * (n * m)
    for i in range(n * m):
        out[i] = _mk(num[i], den[i])
    return out, pivots
