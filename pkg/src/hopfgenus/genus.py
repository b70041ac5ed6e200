"""Hirzebruch genera, Chern characters and the deformation torsor.

Manifold models carry a truncated-polynomial cohomology ring, the total
Chern class of the (stably complex) tangent bundle and a volume monomial
for the fundamental-class pairing.  Genera are evaluated without ever
introducing Chern roots: the multiplicative class of a characteristic
series Q is exp(sum_m l_m N_m) with l = log Q, converted to the Chern
basis and specialized to the model's Chern data.

The deformation torsor acts by multiplying the multiplicative class with
exp(sum_k t_k ch_k(tau)), k odd; parameters add, so the action is a
group law on the nose.  The coaction model pairs cohomology classes with
monomials in the odd d-classes of the tangent bundle.
"""

import json
import math
from dataclasses import dataclass, field

from . import symm
from .core import (
    GradedPolynomial,
    PowerSeries1,
    TruncatedSeries,
    gen_id,
    gid_degree,
    parse_polynomial,
)
from .homology import SOMEGA, coefficient_ring_series
from .rational import Q, is_exact

EULER_GAMMA = 0.57721566490153286060651209008240243


# ---------------------------------------------------------------------------
# manifold models


@dataclass(frozen=True)
class ManifoldModel:
    """Cohomology ring + tangent Chern data of a closed manifold.

    generators: tuple of (symbol, gid, real degree, nilpotency); each
    generator g satisfies g^(nilpotency+1) = 0.  volume is the canonical
    top monomial in real degree 2*dim_c.
    """

    name: str
    dim_c: int
    generators: tuple
    total_chern: GradedPolynomial
    volume: tuple
    embeddings: tuple = ()

    def __post_init__(self):
        if self.total_chern.coefficient(()) != 1:
            raise ValueError("total Chern class needs constant term 1")

    def nilpotency(self):
        return {gid: k for (_, gid, _, k) in self.generators}

    def reduce(self, poly):
        """Kill monomials with a generator past its nilpotency."""
        nil = self.nilpotency()
        out = {}
        for mon, c in poly.terms.items():
            if all(e <= nil.get(gid, e) for gid, e in mon):
                out[mon] = c
        return GradedPolynomial(out)

    def pairing(self, poly):
        """Evaluation against the fundamental class."""
        return poly.coefficient(self.volume)

    def chern_component(self, i):
        """c_i(tau) as a cohomology class (real degree 2i)."""
        return self.total_chern.homogeneous_part(2 * i)

    def betti_numbers(self):
        """Dimensions of the cohomology per real degree."""
        out = [0] * (2 * self.dim_c + 1)
        basis = [()]
        for _, gid, deg, nil in self.generators:
            basis = [b + ((gid, e),) if e else b for b in basis for e in range(nil + 1)]
        for mon in basis:
            d = sum(gid_degree(g) * e for g, e in mon)
            if d <= 2 * self.dim_c:
                out[d] += 1
        return out


def point():
    return ManifoldModel("pt", 0, (), GradedPolynomial.one(), ())


_SYMBOL_POOL = "xyzuvwabcdefg"


def cp(n, symbol="x"):
    """Complex projective space with c(T) = (1+x)^(n+1)."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if n == 0:
        return point()
    gid = gen_id(symbol, 1, 2)
    x = GradedPolynomial.generator(symbol, 1, degree=2)
    total = (GradedPolynomial.one() + x) ** (n + 1)
    total = GradedPolynomial(
        {m: c for m, c in total.terms.items() if (not m) or m[0][1] <= n}
    )
    return ManifoldModel("CP%d" % n, n, ((symbol, gid, 2, n),), total, ((gid, n),))


def product(a, b):
    """Product model; the second factor's generators are renamed on clash."""
    used = {sym for sym, _, _, _ in a.generators}
    pool = iter(s for s in _SYMBOL_POOL if s not in used)
    images = {}
    new_gens = []
    for sym, gid, deg, nil in b.generators:
        if sym in used:
            sym2 = next(pool)
        else:
            sym2 = sym
        used.add(sym2)
        gid2 = gen_id(sym2, 1, deg)
        images[gid] = GradedPolynomial.generator(sym2, 1, degree=deg)
        new_gens.append((sym2, gid2, deg, nil))
    chern_b = b.total_chern.substitute(images)
    # rebuild the volume monomial through the substitution
    vol_b_poly = GradedPolynomial({b.volume: Q(1)}).substitute(images)
    (vol_b_mon,) = vol_b_poly.terms
    gens = a.generators + tuple(new_gens)
    return ManifoldModel(
        "%sx%s" % (a.name, b.name),
        a.dim_c + b.dim_c,
        gens,
        a.total_chern * chern_b,
        tuple(sorted(a.volume + vol_b_mon)),
        embeddings=({}, images),
    )


def embed_factor(model, which, cls):
    """Include a factor's cohomology class into a product model."""
    if not model.embeddings:
        raise ValueError("%s is not a product model" % model.name)
    images = model.embeddings[which]
    return cls.substitute(images) if images else cls


def manifold_from_json(text_or_dict):
    """Load a model from the JSON presentation format."""
    d = json.loads(text_or_dict) if isinstance(text_or_dict, str) else text_or_dict
    degs = {g["sym"]: g["deg"] for g in d["generators"]}
    degree_of = lambda fam, idx: degs[fam]
    gens = tuple(
        (g["sym"], gen_id(g["sym"], 1, g["deg"]), g["deg"], g["nilpotency"])
        for g in d["generators"]
    )
    chern = parse_polynomial(d["total_chern"], degree_of)
    vol = parse_polynomial(d["volume_monomial"], degree_of)
    (vol_mon,) = vol.terms
    return ManifoldModel(d["name"], d["dim_c"], gens, chern, vol_mon)


CATALOG = {
    "pt": point,
    "CP1": lambda: cp(1),
    "CP2": lambda: cp(2),
    "CP3": lambda: cp(3),
    "CP4": lambda: cp(4),
    "CP5": lambda: cp(5),
    "CP6": lambda: cp(6),
}


def catalog_model(name):
    """Look up 'CP2' or a binary product like 'CP1xCP1'."""
    if name in CATALOG:
        return CATALOG[name]()
    if "x" in name:
        left, _, right = name.partition("x")
        if left in CATALOG and right in CATALOG:
            return product(CATALOG[left](), CATALOG[right]())
    raise KeyError("unknown manifold %r" % name)


# ---------------------------------------------------------------------------
# Chern characters


def _chern_images(model, conjugate=False, upto=None):
    if upto is None:
        upto = model.dim_c
    images = {}
    for i in range(1, upto + 1):
        cls = model.chern_component(i)
        if conjugate and i % 2 == 1:
            cls = cls * Q(-1)
        images[gen_id("c", i)] = cls
    return images


def chern_character(model, k, conjugate=False):
    """ch_k(tau) = N_k(c_1,...,c_k)/k! in the model's cohomology."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return GradedPolynomial.constant(Q(model.dim_c))
    nk = symm.convert(
        symm.SymmFn(symm.P, GradedPolynomial.generator("N", k)), symm.E
    ).value
    out = nk.substitute(_chern_images(model, conjugate, upto=k))
    return model.reduce(out) * Q(1, math.factorial(k))


def diagonal_vanishing_check(model, k):
    """ch_k(TM) + ch_k(conjugate TM) = 0 (true for odd k)."""
    total = chern_character(model, k) + chern_character(model, k, conjugate=True)
    return not total.terms


def primitivity_check(a, b, k):
    """ch_k(T(MxN)) = ch_k(TM) (x) 1 + 1 (x) ch_k(TN), k odd."""
    if k < 1 or k % 2 == 0:
        raise ValueError("primitivity is an odd-k statement; got k=%d" % k)
    prod = product(a, b)
    lhs = chern_character(prod, k)
    rhs = embed_factor(prod, 0, chern_character(a, k)) + embed_factor(
        prod, 1, chern_character(b, k)
    )
    return lhs == rhs


# ---------------------------------------------------------------------------
# genera


def a_hat_series(bound):
    """Q(x) = (x/2)/sinh(x/2) over the rationals."""
    coeffs = [Q(0)] * (bound + 1)
    for k in range(0, bound + 1, 2):
        # sinh(x/2)/(x/2) has [x^2k] = 1/(4^k (2k+1)!)
        coeffs[k] = Q(1, 4 ** (k // 2) * math.factorial(k + 1))
    return PowerSeries1(coeffs).inverse()


def todd_series(bound):
    """Q(x) = x/(1 - e^{-x})."""
    denom = [Q((-1) ** k, math.factorial(k + 1)) for k in range(bound + 1)]
    return PowerSeries1(denom).inverse()


def series_from_exponential(f):
    """Characteristic series Q_f(x) = x/f(x) of a genus exponential."""
    if f.coeffs[0] != 0 or f.coeffs[1] != 1:
        raise ValueError("exponential must start x + ...")
    return PowerSeries1(f.coeffs[1:]).inverse()


def multiplicative_class(model, q_series):
    """prod Q(x_i) specialized to the model's Chern data, exactly."""
    n = model.dim_c
    if n == 0:
        return GradedPolynomial.one()
    if q_series.bound < n:
        raise ValueError("series truncated below the dimension")
    if not all(is_exact(c) for c in q_series.coeffs):
        raise ValueError("multiplicative_class needs exact coefficients")
    l = PowerSeries1(q_series.coeffs[: n + 1]).log().coeffs
    comps = [GradedPolynomial.zero()]
    for m in range(1, n + 1):
        comps.append(GradedPolynomial.generator("N", m, coeff=l[m]))
    in_p = TruncatedSeries(comps).exp()
    images = _chern_images(model)
    cache = {}
    total = GradedPolynomial.zero()
    for comp in in_p.comps:
        in_e = symm.convert(symm.SymmFn(symm.P, comp), symm.E).value
        total = total + model.reduce(in_e.substitute(images, cache))
    return model.reduce(total)


def genus(model, q_series):
    """Hirzebruch genus of the model for the characteristic series Q."""
    return model.pairing(multiplicative_class(model, q_series))


def genus_from_exponential(f, n):
    """Value on CP^n from the exponential alone: (n+1) [x^{n+1}] f^{-1}."""
    if n == 0:
        return Q(1) if is_exact(f.coeffs[1]) else 1.0
    if f.bound < n + 1:
        raise ValueError("exponential truncated below degree %d" % (n + 1))
    g = f.compose_inverse()
    return (n + 1) * g.coeffs[n + 1]


def gamma_exponential(bound, zeta_source):
    """1/Gamma(x) = x exp(gamma x - sum_{k>=2} (-1)^k zeta(k) x^k / k)."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    s = [0, zeta_source.gamma]
    for k in range(2, bound):
        s.append(-((-1) ** k) * zeta_source.zeta(k) / k)
    e = PowerSeries1(s).exp()
    return PowerSeries1([0] + e.coeffs[: bound])


class NumericZetaSource:
    """gamma and zeta(k) as floats, zeta via the certified evaluator."""

    def __init__(self, target_error=1e-12):
        self.gamma = EULER_GAMMA
        self._target = target_error

    def zeta(self, k):
        from .mzv import mzv_eval

        return mzv_eval((k,), self._target).value


# ---------------------------------------------------------------------------
# the deformation torsor


@dataclass(frozen=True)
class DeformationParameters:
    """Finitely supported map k -> t_k for odd k >= 1.

    t_k carries the bookkeeping degree tag 2k (= 4(k-1)/2 + 2); addition
    is entrywise, making the parameters a group.
    """

    entries: tuple = ()

    def __post_init__(self):
        for k, _ in self.entries:
            if k < 1 or k % 2 == 0:
                raise ValueError("deformation indices must be odd >= 1: %d" % k)

    @classmethod
    def from_dict(cls, d):
        coerced = {int(k): Q(v) if isinstance(v, (str, int)) else v for k, v in d.items()}
        return cls(tuple(sorted((k, v) for k, v in coerced.items() if v != 0)))

    def as_dict(self):
        return dict(self.entries)

    def degree_tag(self, k):
        return 2 * k

    def __add__(self, other):
        out = self.as_dict()
        for k, v in other.entries:
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return DeformationParameters.from_dict(out)

    @classmethod
    def zero(cls):
        return cls()


def _numeric_kind(values):
    """None (exact), float, or complex, for a list of parameter values."""
    kind = None
    for v in values:
        if isinstance(v, complex):
            return complex
        if not is_exact(v):
            kind = float
    return kind


def deformation_exponential(model, params, include_ch1=True):
    """exp(sum_k t_k ch_k(tau)), a unit in the cohomology ring."""
    entries = [
        (k, v) for k, v in params.entries if include_ch1 or k != 1
    ]
    kind = _numeric_kind([v for _, v in entries])
    arg = GradedPolynomial.zero()
    for k, v in entries:
        ch = chern_character(model, k)
        if kind is not None:
            ch = ch.map_coefficients(kind)
        arg = arg + ch * v
    out = GradedPolynomial.one()
    if kind is not None:
        out = out.map_coefficients(kind)
    power = out
    for m in range(1, model.dim_c + 1):
        power = model.reduce(power * arg) * (
            Q(1, m) if kind is None else 1.0 / m
        )
        out = out + power
    return out


def deform_genus(model, q_series, params, include_ch1=True):
    """Pairing of exp(sum t_k ch_k) . (class of Q) with [M]."""
    expo = deformation_exponential(model, params, include_ch1)
    kind = _numeric_kind([v for _, v in params.entries])
    kclass = multiplicative_class(model, q_series)
    if kind is not None:
        kclass = kclass.map_coefficients(kind)
    return model.pairing(model.reduce(expo * kclass))


@dataclass(frozen=True)
class DeformedGenus:
    """A characteristic series together with accumulated deformations."""

    q_series: PowerSeries1 = field(hash=False)
    params: DeformationParameters = DeformationParameters()

    def deform(self, more):
        return DeformedGenus(self.q_series, self.params + more)

    def evaluate(self, model, include_ch1=True):
        return deform_genus(model, self.q_series, self.params, include_ch1)


def a_hat_zeta_parameters(kmax, target_error=1e-10, bott_power=0):
    """t_{2k+1} = zeta(2k+1) deformation parameters for A-hat_zeta.

    The grading by powers of the Bott class is tracked by the degree tag
    on t_k, so bott_power = 0 (no numeric factor) is the default
    normalization.
    """
    from .mzv import mzv_eval

    entries = []
    for k in range(3, kmax + 1, 2):
        val = mzv_eval((k,), target_error).value * (2.0 ** bott_power)
        entries.append((k, val))
    return DeformationParameters(tuple(entries))


# ---------------------------------------------------------------------------
# morphism-module series and the coaction model


def morphism_module_series(model, bound):
    """Betti series of M convolved with the sOmega coefficient series."""
    betti = model.betti_numbers()
    somega = coefficient_ring_series(SOMEGA, bound)
    return [
        sum(betti[i] * somega[n - i] for i in range(min(n, len(betti) - 1) + 1))
        for n in range(bound + 1)
    ]


def _d_class_images(model):
    """Odd d-classes of the tangent bundle as cohomology classes."""
    n = model.dim_c
    if n == 0:
        return {}
    dd = symm.d_classes(n)
    images = _chern_images(model)
    cache = {}
    out = {}
    for j in range(1, n + 1, 2):
        cls = model.reduce(dd.comps[j].substitute(images, cache))
        out[j] = cls
    return out


def _alpha_monomials(max_tag, dvals):
    """Exponent vectors over odd indices with 2*sum(j*m_j) <= max_tag."""
    odds = sorted(dvals)
    out = []

    def rec(prefix, pos, budget):
        if pos == len(odds):
            out.append(tuple(prefix))
            return
        j = odds[pos]
        m = 0
        while 2 * j * m <= budget:
            rec(prefix + ([(j, m)] if m else []), pos + 1, budget - 2 * j * m)
            m += 1

    rec([], 0, max_tag)
    return sorted(out, key=lambda a: (sum(2 * j * m for j, m in a), a))


def coaction(model, cls, bound):
    """psi(x) = sum_alpha x . P_alpha(d-classes) (x) beta_alpha.

    Returns a dict alpha -> cohomology class, alpha a sorted tuple of
    (odd index j, multiplicity); beta_alpha is the dual monomial basis
    of Q[y_{4i+2}] and carries polynomial degree 2*sum(j m_j) <= bound.
    """
    dvals = _d_class_images(model)
    out = {(): cls}
    for alpha in _alpha_monomials(bound, dvals):
        if not alpha:
            continue
        acc = cls
        for j, m in alpha:
            for _ in range(m):
                acc = model.reduce(acc * dvals[j])
        if acc.terms:
            out[alpha] = acc
    return out


def counit_check(model, cls, bound):
    """counit . coaction = identity: the beta_() component is x itself."""
    return coaction(model, cls, bound)[()] == cls


def _add_alpha(a, b):
    d = dict(a)
    for j, m in b:
        d[j] = d.get(j, 0) + m
    return tuple(sorted(d.items()))


def _alpha_tag(a):
    return sum(2 * j * m for j, m in a)


def coassociativity_check(model, cls, bound):
    """(psi (x) id) psi = (id (x) Delta) psi up to the retained degree."""
    psi = coaction(model, cls, bound)
    lhs = {}
    for alpha, comp in psi.items():
        inner = coaction(model, comp, bound - _alpha_tag(alpha))
        for alpha2, comp2 in inner.items():
            if comp2.terms:
                lhs[(alpha2, alpha)] = comp2
    rhs = {}
    for gamma, comp in psi.items():
        # Delta beta_gamma = sum over splits gamma = a' + a''
        splits = [((), ())]
        for j, m in gamma:
            splits = [
                (_add_alpha(a1, ((j, m1),)) if m1 else a1,
                 _add_alpha(a2, ((j, m - m1),)) if m - m1 else a2)
                for a1, a2 in splits
                for m1 in range(m + 1)
            ]
        for a1, a2 in splits:
            key = (a1, a2)
            prev = rhs.get(key)
            rhs[key] = comp if prev is None else prev + comp
    rhs = {k: v for k, v in rhs.items() if v.terms}
    return lhs == rhs
