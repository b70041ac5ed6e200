# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: sparse graded convolution and fraction-free rank.

Same contracts as ``pure.py``.  Coefficients stay Python objects
(mpq / Fraction / float / complex); the win is in the merge loops and
dispatch overhead, not the arithmetic itself.
"""

BACKEND = "cython"


cpdef long long monomial_degree(tuple mon):
    cdef long long d = 0
    cdef long long gid, e
    for pair in mon:
        gid = (<tuple>pair)[0]
        e = (<tuple>pair)[1]
        d += (gid >> 32) * e
    return d


cpdef tuple monomial_mul(tuple m1, tuple m2):
    cdef Py_ssize_t n1 = len(m1), n2 = len(m2)
    if n1 == 0:
        return m2
    if n2 == 0:
        return m1
    cdef Py_ssize_t i = 0, j = 0
    cdef long long g1, g2
    out = []
    while i < n1 and j < n2:
        p1 = <tuple>m1[i]
        p2 = <tuple>m2[j]
        g1 = p1[0]
        g2 = p2[0]
        if g1 == g2:
            out.append((p1[0], p1[1] + p2[1]))
            i += 1
            j += 1
        elif g1 < g2:
            out.append(p1)
            i += 1
        else:
            out.append(p2)
            j += 1
    while i < n1:
        out.append(m1[i])
        i += 1
    while j < n2:
        out.append(m2[j])
        j += 1
    return tuple(out)


def mul_terms(dict a, dict b, long long cap=-1):
    if len(a) > len(b):
        a, b = b, a
    cdef list bl = [(monomial_degree(m), m, c) for m, c in b.items()]
    if cap >= 0:
        bl.sort(key=lambda t: t[0])
    cdef dict out = {}
    cdef long long da, db
    cdef Py_ssize_t k, nb = len(bl)
    for ma, ca in a.items():
        da = monomial_degree(<tuple>ma)
        for k in range(nb):
            trip = <tuple>bl[k]
            db = trip[0]
            if cap >= 0 and da + db > cap:
                break
            m = monomial_mul(<tuple>ma, <tuple>trip[1])
            prev = out.get(m)
            if prev is None:
                out[m] = ca * trip[2]
            else:
                out[m] = prev + ca * trip[2]
    return {m: c for m, c in out.items() if c != 0}


def rank_bareiss(rows):
    cdef list m = [list(row_) for row_ in rows]
    if not m or not m[0]:
        return 0
    cdef Py_ssize_t nrows = len(m), ncols = len(m[0])
    cdef Py_ssize_t rank = 0, row = 0, col, r, c, piv
    prev = 1
    for col in range(ncols):
        piv = -1
        for r in range(row, nrows):
            if (<list>m[r])[col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
        mrow = <list>m[row]
        pivot = mrow[col]
        for r in range(row + 1, nrows):
            mr = <list>m[r]
            f = mr[col]
            if f != 0:
                for c in range(col + 1, ncols):
                    mr[c] = (pivot * mr[c] - f * mrow[c]) // prev
            mr[col] = 0
        prev = pivot
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank
