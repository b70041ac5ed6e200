"""The Hopf algebra of symmetric functions over the rationals.

Bases: E (elementary, written as Chern classes ``c[k]``), P (power sums,
written as Newton classes ``N[k]``), H (complete homogeneous ``h[k]``)
and M (monomial ``m``-basis, indexed by partitions).  Generator index k
always means polynomial weight; topological degree is 2k and never
appears in this module.

The generating-function identities implemented here:

    sum_k c_k = prod_i exp((-1)^i N_{i+1} / (i+1))
    sum_i d_i = (sum_i (-1)^i c_i) / (sum_i c_i)
              = prod_i exp(-2 N_{2i+1} / (2i+1))
    sum_i a_i = (sum_i b_i) (sum_i (-1)^i b_i)

The quotient form of the d-series is the definition; the exp-product
form is a cross-check run by the identity checker.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .core import (
    GradedPolynomial,
    TruncatedSeries,
    gen_id,
    gid_index,
    monomial_degree,
)
from .rational import Q

E, P, H, M = "E", "P", "H", "M"
BASES = (E, P, H, M)

FAMILY = {E: "c", P: "N", H: "h", M: "m"}

BU = "BU"
BU_MOD_SO = "BUmodSO"


@dataclass(frozen=True)
class SymmFn:
    """A symmetric function expressed in one named basis."""

    basis: str
    value: GradedPolynomial

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError("unknown basis %r" % self.basis)

    def weight_part(self, k):
        return SymmFn(self.basis, self.value.homogeneous_part(k))

    def __add__(self, other):
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return SymmFn(self.basis, self.value + other.value)

    def __sub__(self, other):
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return SymmFn(self.basis, self.value - other.value)

    def __mul__(self, other):
        if isinstance(other, SymmFn):
            a, b = self, other
            if a.basis == M:
                a = convert(a, P)
            if b.basis == M:
                b = convert(b, P)
            if b.basis != a.basis:
                b = convert(b, a.basis)
            return SymmFn(a.basis, a.value * b.value)
        return SymmFn(self.basis, self.value * other)

    def __eq__(self, other):
        return self.basis == other.basis and self.value == other.value


def sym_gen(basis, k):
    """The k-th generator of a multiplicative basis, as a polynomial."""
    if basis == M:
        raise ValueError("the monomial basis is not multiplicative")
    return GradedPolynomial.generator(FAMILY[basis], k)


def partitions(n, max_part=None):
    """Partitions of n as descending tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_monomial(basis, lam):
    """The monomial prod_k gen_k^{mult} for a partition."""
    fam = FAMILY[basis]
    mon = {}
    for part in lam:
        g = gen_id(fam, part)
        mon[g] = mon.get(g, 0) + 1
    return tuple(sorted(mon.items()))


def monomial_partition(mon):
    lam = []
    for gid, e in mon:
        lam.extend([gid_index(gid)] * e)
    return tuple(sorted(lam, reverse=True))


# ---------------------------------------------------------------------------
# generator conversion tables between the multiplicative bases


@lru_cache(maxsize=None)
def _e_series_in_p(D):
    # sum c_k = prod exp((-1)^i N_{i+1}/(i+1))
    comps = [GradedPolynomial.zero() for _ in range(D + 1)]
    for k in range(1, D + 1):
        comps[k] = GradedPolynomial.generator("N", k, coeff=Q((-1) ** (k - 1), k))
    return TruncatedSeries(comps).exp()


@lru_cache(maxsize=None)
def _h_series_in_p(D):
    # sum h_k = exp(sum N_i/i)
    comps = [GradedPolynomial.zero() for _ in range(D + 1)]
    for k in range(1, D + 1):
        comps[k] = GradedPolynomial.generator("N", k, coeff=Q(1, k))
    return TruncatedSeries(comps).exp()


@lru_cache(maxsize=None)
def _gen_table(src, tgt, k):
    """Generator k of basis ``src`` expressed in basis ``tgt``."""
    if src == tgt:
        return sym_gen(src, k)
    if src == E and tgt == P:
        return _e_series_in_p(k).component(k)
    if src == H and tgt == P:
        return _h_series_in_p(k).component(k)
    if src == P and tgt == E:
        # p_k = (-1)^(k-1) k [t^k] log(sum c_i)
        comps = [GradedPolynomial.zero() for _ in range(k + 1)]
        comps[0] = GradedPolynomial.one()
        for j in range(1, k + 1):
            comps[j] = GradedPolynomial.generator("c", j)
        return TruncatedSeries(comps).log().component(k) * Q((-1) ** (k - 1) * k)
    if src == P and tgt == H:
        # p_k = k [t^k] log(sum h_i)
        comps = [GradedPolynomial.zero() for _ in range(k + 1)]
        comps[0] = GradedPolynomial.one()
        for j in range(1, k + 1):
            comps[j] = GradedPolynomial.generator("h", j)
        return TruncatedSeries(comps).log().component(k) * Q(k)
    if (src, tgt) in ((E, H), (H, E)):
        # E(t) H(-t) = 1, symmetric in both directions
        other = "h" if src == E else "c"
        comps = [GradedPolynomial.zero() for _ in range(k + 1)]
        comps[0] = GradedPolynomial.one()
        for j in range(1, k + 1):
            comps[j] = GradedPolynomial.generator(other, j, coeff=Q((-1) ** j))
        inv = TruncatedSeries(comps).inverse()
        return inv.component(k) * Q((-1) ** k)
    raise ValueError("no conversion %s -> %s" % (src, tgt))


_SUBST_CACHE = {}


def _convert_multiplicative(poly, src, tgt):
    if src == tgt or poly.is_zero():
        return poly
    top = poly.max_degree()
    images = {
        gen_id(FAMILY[src], k): _gen_table(src, tgt, k) for k in range(1, top + 1)
    }
    cache = _SUBST_CACHE.setdefault((src, tgt), {})
    return poly.substitute(images, cache=cache)


# ---------------------------------------------------------------------------
# monomial basis


@lru_cache(maxsize=None)
def _p_times_m(r, mu):
    """Expansion of p_r * m_mu in the m basis: dict partition -> int."""
    out = {}
    values = set(mu) | {0}
    for v in values:
        parts = list(mu)
        if v:
            parts.remove(v)
        parts.append(v + r)
        nu = tuple(sorted(parts, reverse=True))
        out[nu] = out.get(nu, 0) + nu.count(v + r)
    # note: each distinct v contributes once; multiplicity is carried by
    # the count of v+r in the target partition
    return out


@lru_cache(maxsize=None)
def _p_lambda_in_m(lam):
    """Expansion of p_lambda = prod p_r in the m basis."""
    if not lam:
        return (((), Q(1)),)
    acc = {(): Q(1)}
    for r in lam:
        nxt = {}
        for mu, c in acc.items():
            for nu, mult in _p_times_m(r, mu).items():
                nxt[nu] = nxt.get(nu, Q(0)) + c * mult
        acc = nxt
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _m_in_p_weight(w):
    """Matrix expressing each m_lambda of weight w in the p basis."""
    lams = sorted(partitions(w))
    index = {lam: i for i, lam in enumerate(lams)}
    n = len(lams)
    # A[i][j] = coefficient of m_{lams[j]} in p_{lams[i]}
    A = [[Q(0)] * n for _ in range(n)]
    for i, lam in enumerate(lams):
        for nu, c in _p_lambda_in_m(lam):
            A[i][index[nu]] += c
    # invert: columns of the inverse of A^T give m_lambda in p coordinates
    out = {}
    for lam in lams:
        rhs = [Q(1) if mu == lam else Q(0) for mu in lams]
        # solve sum_i y_i A[i][j] = rhs[j]
        x = linalg.solve([[A[i][j] for i in range(n)] for j in range(n)], rhs)
        out[lam] = {mu: x[i] for i, mu in enumerate(lams) if x[i] != 0}
    return out


def _to_m(poly_in_p):
    out = {}
    for mon, coeff in poly_in_p.terms.items():
        lam = monomial_partition(mon)
        for nu, c in _p_lambda_in_m(lam):
            key = partition_monomial(M, nu)
            s = out.get(key, Q(0)) + coeff * c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    return GradedPolynomial(out)


def _from_m(poly_in_m):
    out = GradedPolynomial.zero()
    by_weight = {}
    for mon, coeff in poly_in_m.terms.items():
        by_weight.setdefault(monomial_degree(mon), {})[mon] = coeff
    for w, terms in by_weight.items():
        if w == 0:
            out = out + GradedPolynomial({(): terms[()]})
            continue
        table = _m_in_p_weight(w)
        for mon, coeff in terms.items():
            lam = monomial_partition(mon)
            for mu, c in table[lam].items():
                out = out + GradedPolynomial(
                    {partition_monomial(P, mu): coeff * c}
                )
    return out


def convert(f, target):
    """Change of basis; round trips are exact."""
    if f.basis == target:
        return f
    if f.basis == M:
        in_p = _from_m(f.value)
        return convert(SymmFn(P, in_p), target)
    if target == M:
        in_p = _convert_multiplicative(f.value, f.basis, P)
        return SymmFn(M, _to_m(in_p))
    return SymmFn(target, _convert_multiplicative(f.value, f.basis, target))


# ---------------------------------------------------------------------------
# generating functions


def chern_from_newton(D):
    """Series whose weight-k part is c_k written in the P basis."""
    return _e_series_in_p(D)


def d_classes(D):
    """d-series in the c-generators, from the alternating/plain quotient."""
    num = [GradedPolynomial.one()]
    den = [GradedPolynomial.one()]
    for k in range(1, D + 1):
        num.append(GradedPolynomial.generator("c", k, coeff=Q((-1) ** k)))
        den.append(GradedPolynomial.generator("c", k))
    return TruncatedSeries(num) * TruncatedSeries(den).inverse()


def d_classes_exp_form(D):
    """The exp-product form prod exp(-2 N_{2i+1}/(2i+1)), converted to c."""
    comps = [GradedPolynomial.zero() for _ in range(D + 1)]
    for k in range(1, D + 1, 2):
        comps[k] = GradedPolynomial.generator("N", k, coeff=Q(-2, k))
    in_p = TruncatedSeries(comps).exp()
    return TruncatedSeries(
        [_convert_multiplicative(c, P, E) for c in in_p.comps]
    )


def a_classes(D):
    """a-series in the b-generators: (sum b_i)(sum (-1)^i b_i)."""
    plain = [GradedPolynomial.one()]
    alt = [GradedPolynomial.one()]
    for k in range(1, D + 1):
        plain.append(GradedPolynomial.generator("b", k))
        alt.append(GradedPolynomial.generator("b", k, coeff=Q((-1) ** k)))
    return TruncatedSeries(plain) * TruncatedSeries(alt)


# ---------------------------------------------------------------------------
# Hopf structure (coproduct in the E basis)


class HopfTensor:
    """Element of Symm (x) Symm: map (monomial, monomial) -> rational."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    def __eq__(self, other):
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return HopfTensor(out)

    def __sub__(self, other):
        return self + HopfTensor({k: -c for k, c in other.terms.items()})

    def __mul__(self, other):
        from ._kernels import monomial_mul

        out = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                key = (monomial_mul(l1, l2), monomial_mul(r1, r2))
                s = out.get(key, 0) + c1 * c2
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return HopfTensor(out)

    def is_zero(self):
        return not self.terms


@lru_cache(maxsize=None)
def _coproduct_c(n):
    """Delta c_n = sum_{i+j=n} c_i (x) c_j as a HopfTensor (cached)."""
    terms = {}
    for i in range(n + 1):
        left = () if i == 0 else ((gen_id("c", i), 1),)
        right = () if i == n else ((gen_id("c", n - i), 1),)
        terms[(left, right)] = Q(1)
    return HopfTensor(terms)


def coproduct(f):
    """Coproduct of a symmetric function, computed in the E basis."""
    f = convert(f, E)
    result = HopfTensor()
    for mon, coeff in f.value.terms.items():
        t = HopfTensor({((), ()): coeff})
        for gid, e in mon:
            dc = _coproduct_c(gid_index(gid))
            for _ in range(e):
                t = t * dc
        result = result + t
    return result


def is_primitive(f):
    """True iff Delta f = f (x) 1 + 1 (x) f exactly."""
    f = convert(f, E)
    delta = coproduct(f)
    side = HopfTensor()
    for mon, c in f.value.terms.items():
        side = side + HopfTensor({(mon, ()): c, ((), mon): c})
    return (delta - side).is_zero()


def coassociativity_defect(f):
    """(Delta (x) id) Delta f - (id (x) Delta) Delta f; empty dict iff OK."""
    f = convert(f, E)
    delta = coproduct(f)

    def expand(side):
        out = {}
        for (l, r), c in delta.terms.items():
            inner = coproduct(SymmFn(E, GradedPolynomial({(l if side == 0 else r): Q(1)})))
            for (m1, m2), c2 in inner.terms.items():
                key = (m1, m2, r) if side == 0 else (l, m1, m2)
                s = out.get(key, 0) + c * c2
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    left = expand(0)
    right = expand(1)
    for k, c in right.items():
        s = left.get(k, 0) - c
        if s == 0:
            left.pop(k, None)
        else:
            left[k] = s
    return left


def primitive_space(k, model=BU_MOD_SO):
    """Basis of the primitive subspace in weight k, by exact linear solve.

    The BUmodSO model carries primitives only in odd weights
    (topological degree congruent to 2 mod 4); BU in every weight.
    """
    if k < 1:
        return []
    if model == BU_MOD_SO:
        return _primitive_space_odd_model(k)
    if model != BU:
        raise ValueError("unknown model %r" % model)
    mons = [partition_monomial(E, lam) for lam in sorted(partitions(k))]
    rows_index = {}
    cols = []
    for mon in mons:
        f = SymmFn(E, GradedPolynomial({mon: Q(1)}))
        delta = coproduct(f)
        defect = delta - HopfTensor({(mon, ()): Q(1), ((), mon): Q(1)})
        col = {}
        for key, c in defect.terms.items():
            if key not in rows_index:
                rows_index[key] = len(rows_index)
            col[rows_index[key]] = c
        cols.append(col)
    nrows = len(rows_index)
    matrix = [[Q(0)] * len(mons) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, c in col.items():
            matrix[i][j] = c
    basis = linalg.nullspace(matrix, len(mons))
    out = []
    for vec in basis:
        poly = GradedPolynomial.zero()
        for mon, c in zip(mons, vec):
            if c != 0:
                poly = poly + GradedPolynomial({mon: c})
        out.append(SymmFn(E, poly))
    return out


def _coproduct_p_monomial(mon):
    """Coproduct of a P-basis monomial: the N_k are primitive."""
    from math import comb

    result = {((), ()): Q(1)}
    for gid, e in mon:
        new = {}
        for (left, right), c in result.items():
            for a in range(e + 1):
                lm = left + ((gid, a),) if a else left
                rm = right + ((gid, e - a),) if e - a else right
                key = (tuple(sorted(lm)), tuple(sorted(rm)))
                new[key] = new.get(key, Q(0)) + c * comb(e, a)
        result = new
    return result


def _primitive_space_odd_model(k):
    """Primitives of weight k in the subalgebra generated by odd N's."""
    lams = [lam for lam in sorted(partitions(k)) if all(p % 2 == 1 for p in lam)]
    mons = [partition_monomial(P, lam) for lam in lams]
    rows_index = {}
    cols = []
    for mon in mons:
        defect = dict(_coproduct_p_monomial(mon))
        for key in ((mon, ()), ((), mon)):
            v = defect.get(key, Q(0)) - Q(1)
            if v == 0:
                defect.pop(key, None)
            else:
                defect[key] = v
        col = {}
        for key, c in defect.items():
            if c == 0:
                continue
            if key not in rows_index:
                rows_index[key] = len(rows_index)
            col[rows_index[key]] = c
        cols.append(col)
    matrix = [[Q(0)] * len(mons) for _ in range(len(rows_index))]
    for j, col in enumerate(cols):
        for i, c in col.items():
            matrix[i][j] = c
    basis = linalg.nullspace(matrix, len(mons))
    out = []
    for vec in basis:
        poly = GradedPolynomial.zero()
        for mon, c in zip(mons, vec):
            if c != 0:
                poly = poly + GradedPolynomial({mon: c})
        out.append(convert(SymmFn(P, poly), E))
    return out


# ---------------------------------------------------------------------------
# indecomposables


def monomial_dimensions(generator_weights, bound, min_factors=0):
    """Per-weight monomial counts for a free commutative algebra.

    ``min_factors`` restricts to monomials with at least that many
    generator factors (counted with exponent), which gives the graded
    dimensions of powers of the augmentation ideal.
    """
    # dp[w][f] = count of monomials of weight w with min(f, cap) factors
    cap = max(min_factors, 1)
    dp = [[0] * (cap + 1) for _ in range(bound + 1)]
    dp[0][0] = 1
    for g in sorted(generator_weights):
        if g <= 0:
            raise ValueError("generator weights must be positive")
        if g > bound:
            continue
        for w in range(g, bound + 1):
            for f in range(cap + 1):
                prev = dp[w - g][f]
                if prev:
                    dp[w][min(f + 1, cap)] += prev
    return [sum(dp[w][f] for f in range(min_factors, cap + 1)) for w in range(bound + 1)]


def indecomposables(weight, generator_weights=None):
    """Dimension of I/I^2 in a given weight, with a representative basis.

    Defaults to the full symmetric algebra (one generator per weight).
    """
    if weight < 1:
        return 0, []
    if generator_weights is None:
        generator_weights = list(range(1, weight + 1))
    total = monomial_dimensions(generator_weights, weight)[weight]
    sq = monomial_dimensions(generator_weights, weight, min_factors=2)[weight]
    dim = total - sq
    reps = [
        SymmFn(E, sym_gen(E, weight))
        for g in generator_weights
        if g == weight
    ][:dim]
    return dim, reps


def is_decomposable(poly):
    """True iff every term has at least two generator factors."""
    for mon in poly.terms.keys():
        if sum(e for _, e in mon) < 2:
            return False
    return True
