"""Certified numerical multizeta values and the zeta specialization.

Index convention: M_{(s_1,...,s_k)} specializes (x_k -> 1/k) to

    zeta(s_1,...,s_k) = sum_{i_1 < ... < i_k} i_1^{-s_1} ... i_k^{-s_k}

with *increasing* summation indices, matching the quasisymmetric
monomials literally.  The classical decreasing-index convention is the
reversed composition.  An index is admissible iff the exponent attached
to the largest index (the last entry) is at least 2.

Evaluation truncates every index at N and encloses the remainder by
integral comparison.  For the outermost level the truncated tail
sum_{i>N} i^{-s} of a decreasing convex summand is squeezed between the
trapezoid and midpoint integral comparisons (the first Euler-Maclaurin
correction), giving an enclosure of width O(N^{-s-1}).  Inner levels use
the elementary bound

    R_j(n) <= c_j (n-1)^{-p_j},   p_j = s_j + p_{j+1} - 1,  c_j = c_{j+1}/p_j

obtained by repeated integral comparison, where R_j(n) is the remaining
nested sum with all indices >= n.  Partial sums are accumulated in
80-bit long doubles; a conservative rounding allowance is added to every
error bound.
"""

import math
from dataclasses import dataclass

import numpy as np

_LD = np.longdouble
_EPS_LD = float(np.finfo(_LD).eps)
_BLOCK = 1 << 21
MAX_TERMS = 1 << 27


class DivergentIndexError(ValueError):
    """Raised for inadmissible indices (divergent nested sum)."""

    def __init__(self, offending):
        self.offending = list(offending)
        super().__init__(
            "divergent multizeta index (last exponent must be >= 2): %s"
            % ", ".join(str(tuple(a)) for a in self.offending)
        )


class PrecisionError(RuntimeError):
    """Requested error bound not reachable within the term budget."""


@dataclass(frozen=True)
class CertifiedReal:
    """A float with a rigorous symmetric error enclosure."""

    value: float
    error_bound: float

    def __add__(self, other):
        if isinstance(other, CertifiedReal):
            return CertifiedReal(self.value + other.value, self.error_bound + other.error_bound)
        return CertifiedReal(self.value + other, self.error_bound)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, CertifiedReal):
            return CertifiedReal(self.value - other.value, self.error_bound + other.error_bound)
        return CertifiedReal(self.value - other, self.error_bound)

    def __mul__(self, other):
        if isinstance(other, CertifiedReal):
            return CertifiedReal(
                self.value * other.value,
                abs(self.value) * other.error_bound
                + abs(other.value) * self.error_bound
                + self.error_bound * other.error_bound,
            )
        return CertifiedReal(self.value * float(other), self.error_bound * abs(float(other)))

    __rmul__ = __mul__

    def contains(self, x):
        return abs(self.value - x) <= self.error_bound

    def overlaps(self, other):
        return abs(self.value - other.value) <= self.error_bound + other.error_bound


def is_admissible(idx):
    idx = tuple(idx)
    return bool(idx) and all(s >= 1 for s in idx) and idx[-1] >= 2


def _check_index(idx):
    idx = tuple(int(s) for s in idx)
    if not idx or any(s < 1 for s in idx):
        raise ValueError("index entries must be positive integers: %r" % (idx,))
    if idx[-1] < 2:
        raise DivergentIndexError([idx])
    return idx


def _integral(a, s):
    """integral_a^inf x^-s dx for s > 1."""
    return a ** (1.0 - s) / (s - 1.0)


def _zeta_tail_enclosure(s, N):
    """Enclosure (mid, rad) of sum_{i>N} i^-s, first EM correction."""
    fN1 = float(N + 1) ** (-s)
    lower = _integral(N + 1.0, s) + fN1 / 2.0
    upper = _integral(N + 0.5, s)
    return (lower + upper) / 2.0, (upper - lower) / 2.0 + 1e-18


def _pow_sum(N, s):
    """sum_{i<=N} i^-s in long doubles, plus a rounding allowance."""
    total = _LD(0)
    for a in range(1, N + 1, _BLOCK):
        b = min(N, a + _BLOCK - 1)
        i = np.arange(a, b + 1, dtype=_LD)
        total += np.sum(i ** _LD(-s))
    slop = 4.0 * _EPS_LD * math.log(N + 1) * max(1.0, float(total))
    return float(total), slop


def _zeta_enclosure(s, target):
    N = 64
    while True:
        mid, rad = _zeta_tail_enclosure(s, N)
        if rad < target / 2.0 or N >= MAX_TERMS:
            break
        N *= 4
    total, slop = _pow_sum(N, s)
    rad_total = rad + slop
    if rad_total > target:
        raise PrecisionError(
            "cannot certify zeta(%d) to %g (best %g)" % (s, target, rad_total)
        )
    return CertifiedReal(total + mid, rad_total)


def _crude_constants(s):
    """(p_j, c_j) of the inner-level remainder bound, per level."""
    k = len(s)
    p = [0.0] * (k + 1)
    c = [0.0] * (k + 1)
    p[k - 1] = s[k - 1] - 1.0
    c[k - 1] = 1.0 / p[k - 1]
    for j in range(k - 2, -1, -1):
        p[j] = s[j] + p[j + 1] - 1.0
        c[j] = c[j + 1] / p[j]
    return p, c


def _nested_enclosure(s, N):
    """Enclosure of the nested sum, truncating all indices at N."""
    k = len(s)
    p, c = _crude_constants(s)
    # initial carries = enclosures of R_j(N+1)
    tail_mid, tail_rad = _zeta_tail_enclosure(s[k - 1], N)
    carry = [0.0] * k
    rad_init = [0.0] * k
    carry[k - 1] = tail_mid
    rad_init[k - 1] = tail_rad
    for j in range(k - 1):
        bound = c[j] * float(N) ** (-p[j])
        carry[j] = bound / 2.0
        rad_init[j] = bound / 2.0
    carry = [_LD(x) for x in carry]
    psum = [_LD(0)] * k  # sum_{i<=N} i^{-s_j}, for error propagation

    hi = N
    while hi >= 1:
        lo = max(1, hi - _BLOCK + 1)
        i = np.arange(lo, hi + 1, dtype=_LD)
        pows = [i ** _LD(-sj) for sj in s]
        level_vals = [None] * k
        for j in range(k - 1, -1, -1):
            if j == k - 1:
                contrib = pows[j]
            else:
                nxt = level_vals[j + 1]
                shifted = np.empty_like(nxt)
                shifted[:-1] = nxt[1:]
                shifted[-1] = carry[j + 1]
                contrib = pows[j] * shifted
            # reversed cumulative sum + carry gives R_j on the block
            rev = np.cumsum(contrib[::-1])[::-1] + carry[j]
            level_vals[j] = rev
            psum[j] += np.sum(pows[j])
        # carries for the next (lower) block need R_j at index lo,
        # but the shift above consumed the old carry, so update last
        for j in range(k):
            carry[j] = level_vals[j][0]
        hi = lo - 1

    value = float(carry[0])
    # error propagation: rad_j(1) <= rad_init_j + P_j * rad_{j+1}
    rad = rad_init[k - 1]
    for j in range(k - 2, -1, -1):
        rad = rad_init[j] + float(psum[j]) * rad
    ops = float(N) * k
    rad += 4.0 * _EPS_LD * ops ** 0.5 * max(1.0, value) + 64.0 * _EPS_LD
    return value, rad


def mzv_eval(idx, target_error=1e-8):
    """Certified enclosure of a multizeta value.

    Raises DivergentIndexError for inadmissible indices and
    PrecisionError if the target cannot be met within the term budget.
    """
    idx = _check_index(idx)
    if target_error <= 0:
        raise ValueError("target_error must be positive")
    if len(idx) == 1:
        return _zeta_enclosure(idx[0], target_error)
    s = [float(x) for x in idx]
    p, c = _crude_constants(s)
    # pick N from the crude bound, then verify and escalate if needed
    N = 1 << 12
    while N < MAX_TERMS:
        est = sum(c[j] * float(N) ** (-p[j]) for j in range(len(s) - 1))
        if est * (2.5 ** len(s)) < target_error / 2.0:
            break
        N *= 2
    while True:
        value, rad = _nested_enclosure(s, N)
        if rad <= target_error:
            return CertifiedReal(value, rad)
        if N >= MAX_TERMS:
            raise PrecisionError(
                "cannot certify %s to %g (best %g at N=%d)"
                % (idx, target_error, rad, N)
            )
        N = min(MAX_TERMS, N * 4)


def zeta_specialize(q, target_error=1e-8):
    """The ring homomorphism QSymm -> R on an element with admissible terms."""
    bad = [a for a in q.terms if not is_admissible(a)]
    if bad:
        raise DivergentIndexError(sorted(bad))
    terms = sorted(q.terms.items())
    if not terms:
        return CertifiedReal(0.0, 0.0)
    budget = target_error / len(terms)
    total = CertifiedReal(0.0, 0.0)
    for alpha, coeff in terms:
        fc = float(coeff)
        enclosure = mzv_eval(alpha, budget / max(1.0, abs(fc)))
        total = total + enclosure * fc
    return total


def homomorphism_check(a, b, tol=0.0, target_error=1e-6):
    """Numerically verify zeta(a) zeta(b) = zeta(a * b) (stuffle).

    Returns a report dict; 'passed' is True when the defect is within
    tol plus the propagated enclosure radii.
    """
    from .qsymm import quasi_shuffle

    za = zeta_specialize(a, target_error)
    zb = zeta_specialize(b, target_error)
    prod = quasi_shuffle(a, b)
    zprod = zeta_specialize(prod, target_error)
    lhs = za * zb
    defect = abs(lhs.value - zprod.value)
    allowed = tol + lhs.error_bound + zprod.error_bound
    return {
        "lhs": lhs.value,
        "rhs": zprod.value,
        "defect": defect,
        "allowed": allowed,
        "passed": defect <= allowed,
    }
