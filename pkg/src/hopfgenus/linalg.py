"""Exact linear algebra over the rationals.

Rank goes through the fraction-free integer kernel; nullspace and solve
use rational Gauss-Jordan (gmpy2.mpq makes pivot growth a non-issue at
the sizes that occur here: at most a few hundred rows).
"""

from ._kernels import rank_bareiss
from .rational import Q


def _lcm(a, b):
    from math import gcd

    return a // gcd(a, b) * b


def rank_rational(rows):
    """Exact rank of a matrix with rational entries."""
    scaled = []
    for row in rows:
        den = 1
        for x in row:
            den = _lcm(den, int(x.denominator))
        scaled.append([int(x * den) for x in row])
    return rank_bareiss(scaled)


def rref(rows):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = [[Q(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, ncols):
    """Basis of the right nullspace of the matrix, as lists of rationals."""
    if not rows:
        return [[Q(1) if j == i else Q(0) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Q(0)] * ncols
        v[fc] = Q(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """Solve A x = b exactly; returns None if inconsistent.

    ``rows`` is the matrix A (list of rational rows), ``rhs`` the vector b.
    Underdetermined systems return one particular solution.
    """
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    x = [Q(0)] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None  # pivot in the rhs column: inconsistent
        x[pc] = red[r][ncols]
    return x
