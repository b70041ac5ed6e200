"""Bar-complex Tor over finite graded algebra presentations.

A presentation carries an explicit basis with degrees (index 0 is the
unit) and a multiplication table, truncated above degree D.  Tor of the
augmentation Q over such an algebra is computed from the reduced bar
complex: chains in homological degree s are words of length s in the
positive-degree basis, the differential contracts adjacent letters with
the usual bar sign, and dimensions come from exact ranks over Q.

Grading convention: homological degree s adds +s to the total degree
(one suspension per bar stage), so the exterior generator y_5 produces a
polynomial generator in total degree 6.

Also houses the dimension tables of the named coefficient rings:
sOmega (exterior on degrees 4i+1, i > 0), KTheoryFiber (augmentation
ideal of the polynomial algebra on degrees 4i+2, i >= 0) and THH (their
tensor product).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import rank_rational
from .qsymm import polynomial_hilbert
from .rational import Q


class TruncationError(ValueError):
    """Requested bound exceeds what the algebra truncation supports."""


@dataclass(frozen=True)
class GradedAlgebraPresentation:
    """Connected graded augmented algebra with explicit basis.

    degrees[0] == 0 is the unit; mult maps (i, j) with both indices
    positive to a tuple of (index, coefficient) pairs.  Products landing
    above the truncation are omitted from the table (truncated to 0).
    """

    labels: tuple
    degrees: tuple
    mult: dict = field(hash=False)
    truncation: int

    def __post_init__(self):
        if not self.degrees or self.degrees[0] != 0:
            raise ValueError("basis must start with the unit in degree 0")
        if any(d <= 0 for d in self.degrees[1:]):
            raise ValueError("non-unit basis elements need positive degree")

    def positive_indices(self):
        return list(range(1, len(self.degrees)))

    def multiply(self, i, j):
        """Product of two positive basis elements, as (index, coeff) pairs."""
        if i == 0:
            return ((j, Q(1)),)
        if j == 0:
            return ((i, Q(1)),)
        return self.mult.get((i, j), ())

    def is_associative(self):
        n = len(self.degrees)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = {}
                    for m, c in self.multiply(i, j):
                        for r, c2 in self.multiply(m, k):
                            left[r] = left.get(r, Q(0)) + c * c2
                    right = {}
                    for m, c in self.multiply(j, k):
                        for r, c2 in self.multiply(i, m):
                            right[r] = right.get(r, Q(0)) + c * c2
                    # compare away from the truncation edge only
                    cap = self.truncation
                    if any(
                        v != right.get(r, 0)
                        for r, v in left.items()
                        if v != 0 and self.degrees[r] <= cap
                    ) or any(
                        v != left.get(r, 0)
                        for r, v in right.items()
                        if v != 0 and self.degrees[r] <= cap
                    ):
                        return False
        return True


def exterior_algebra(gen_degrees, truncation):
    """Exterior algebra on odd-degree generators, truncated at D."""
    gen_degrees = list(gen_degrees)
    if any(d <= 0 or d % 2 == 0 for d in gen_degrees):
        raise ValueError(
            "exterior generators must have odd positive degree: %r" % (gen_degrees,)
        )
    ngen = len(gen_degrees)
    # basis: subsets of generators, by sorted index tuple
    subsets = [()]
    for g in range(ngen):
        subsets += [s + (g,) for s in subsets]
    subsets = [s for s in subsets if sum(gen_degrees[g] for g in s) <= truncation]
    subsets.sort(key=lambda s: (sum(gen_degrees[g] for g in s), s))
    index = {s: i for i, s in enumerate(subsets)}
    labels, degrees = [], []
    for s in subsets:
        labels.append("".join("y%d" % gen_degrees[g] for g in s) or "1")
        degrees.append(sum(gen_degrees[g] for g in s))
    mult = {}
    for i, si in enumerate(subsets):
        for j, sj in enumerate(subsets):
            if i == 0 or j == 0:
                continue
            if set(si) & set(sj):
                continue  # exterior square
            merged = tuple(sorted(si + sj))
            if merged not in index:
                continue  # above truncation
            # Koszul sign: all generators odd, so count inversions
            inv = sum(1 for a in si for b in sj if a > b)
            mult[(i, j)] = ((index[merged], Q(-1 if inv % 2 else 1)),)
    return GradedAlgebraPresentation(tuple(labels), tuple(degrees), mult, truncation)


def square_zero_extension(gen_degrees, truncation):
    """Q + V with V in the given degrees and V.V = 0."""
    gen_degrees = sorted(gen_degrees)
    if any(d <= 0 for d in gen_degrees):
        raise ValueError("degrees must be positive: %r" % (gen_degrees,))
    kept = [d for d in gen_degrees if d <= truncation]
    labels = ("1",) + tuple("y%d" % d for d in kept)
    degrees = (0,) + tuple(kept)
    return GradedAlgebraPresentation(labels, degrees, {}, truncation)


@dataclass(frozen=True)
class TorTable:
    """Dimensions of Tor_{s,t}; total degree = s + t."""

    dims: dict = field(hash=False)
    bound: int

    def dimension(self, s, t):
        return self.dims.get((s, t), 0)

    def total_series(self):
        out = [0] * (self.bound + 1)
        for (s, t), d in self.dims.items():
            out[s + t] += d
        return out

    def nonzero(self):
        return sorted((s, t, d) for (s, t), d in self.dims.items() if d)


def _bar_words(A, length, internal):
    """Words of the given length in positive basis elements, total degree
    equal to ``internal``."""
    pos = A.positive_indices()
    out = []

    def rec(prefix, remaining, budget):
        if remaining == 0:
            if budget == 0:
                out.append(tuple(prefix))
            return
        for i in pos:
            d = A.degrees[i]
            if d <= budget - (remaining - 1):
                rec(prefix + [i], remaining - 1, budget - d)

    rec([], length, internal)
    return out


def _apply_bar_d(A, word):
    """One bar differential step on a basis word; dict word -> coeff."""
    out = {}
    eps = 0
    for i in range(len(word) - 1):
        eps += A.degrees[word[i]] + 1
        sign = -1 if eps % 2 else 1
        for k, c in A.multiply(word[i], word[i + 1]):
            target = word[:i] + (k,) + word[i + 2 :]
            v = out.get(target, Q(0)) + sign * c
            if v == 0:
                out.pop(target, None)
            else:
                out[target] = v
    return out


def _diff_rank(A, words_src, words_tgt):
    if not words_src or not words_tgt:
        return 0
    col = {w: j for j, w in enumerate(words_tgt)}
    rows = []
    for w in words_src:
        row = [Fraction(0)] * len(words_tgt)
        for tgt, c in _apply_bar_d(A, w).items():
            row[col[tgt]] = Fraction(int(c.numerator), int(c.denominator))
        rows.append(row)
    return rank_rational(rows)


def tor_via_bar(A, bound):
    """TorTable of Q over A through total degree ``bound``.

    Every contributing bar word has internal degree <= bound, so the
    computation is sound exactly when bound <= A.truncation; larger
    bounds raise rather than silently truncating.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound > A.truncation:
        raise TruncationError(
            "bound %d exceeds algebra truncation %d" % (bound, A.truncation)
        )
    min_deg = min((A.degrees[i] for i in A.positive_indices()), default=None)
    dims = {(0, 0): 1}
    if min_deg is None:
        return TorTable(dims, bound)
    words = {}

    def get_words(s, t):
        key = (s, t)
        if key not in words:
            words[key] = _bar_words(A, s, t)
        return words[key]

    s = 1
    while s * (min_deg + 1) <= bound:
        for t in range(s * min_deg, bound - s + 1):
            src = get_words(s, t)
            if not src:
                continue
            # d^2 = 0 on every computed word
            for w in src:
                dd = {}
                for mid, c in _apply_bar_d(A, w).items():
                    for tgt, c2 in _apply_bar_d(A, mid).items():
                        dd[tgt] = dd.get(tgt, Q(0)) + c * c2
                assert all(v == 0 for v in dd.values()), "bar differential d^2 != 0"
            r_out = _diff_rank(A, src, get_words(s - 1, t))
            r_in = _diff_rank(A, get_words(s + 1, t), src)
            d = len(src) - r_out - r_in
            if d:
                dims[(s, t)] = d
        s += 1
    return TorTable(dims, bound)


def predicted_polynomial_series(gen_degrees, bound):
    """Coefficients of prod (1 - t^d)^(-1): the polynomial prediction."""
    return polynomial_hilbert(list(gen_degrees), bound)


def word_series(letters, bound):
    """Ordered-word counts: coefficients of 1/(1 - sum t^d)."""
    out = [0] * (bound + 1)
    out[0] = 1
    for n in range(1, bound + 1):
        out[n] = sum(out[n - d] for d in letters if d <= n)
    return out


def exterior_series(gen_degrees, bound):
    """Coefficients of prod (1 + t^d)."""
    out = [0] * (bound + 1)
    out[0] = 1
    for d in gen_degrees:
        if d <= 0:
            raise ValueError("degrees must be positive")
        for n in range(bound, d - 1, -1):
            out[n] += out[n - d]
    return out


SOMEGA = "sOmega"
THH = "THH"
K_THEORY_FIBER = "KTheoryFiber"


def _exterior_degrees(bound, start):
    return list(range(start, bound + 1, 4))


def _polynomial_degrees(bound, start):
    return list(range(start, bound + 1, 4))


def coefficient_ring_series(which, bound, exterior_start=5, polynomial_start=2):
    """Dimension table of a named coefficient ring through ``bound``.

    sOmega = Lambda[y_{4i+1}, i>0]; KTheoryFiber = positive part of
    Q[y_{4i+2}, i>=0]; THH = sOmega (x) Q[y_{4i+2}].  The start degrees
    are the model knobs: exterior_start=1 or polynomial_start=6 select
    the variants with/without the bottom class.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if exterior_start % 4 != 1:
        raise ValueError("exterior generators live in degrees 4i+1")
    if polynomial_start % 4 != 2:
        raise ValueError("polynomial generators live in degrees 4i+2")
    if which == SOMEGA:
        return exterior_series(_exterior_degrees(bound, exterior_start), bound)
    if which == K_THEORY_FIBER:
        out = polynomial_hilbert(_polynomial_degrees(bound, polynomial_start), bound)
        out[0] = 0  # augmentation ideal
        return out
    if which == THH:
        ext = exterior_series(_exterior_degrees(bound, exterior_start), bound)
        pol = polynomial_hilbert(_polynomial_degrees(bound, polynomial_start), bound)
        return [
            sum(ext[i] * pol[n - i] for i in range(n + 1)) for n in range(bound + 1)
        ]
    raise ValueError("unknown series %r" % (which,))
