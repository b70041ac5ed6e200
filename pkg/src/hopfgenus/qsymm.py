"""Quasisymmetric and noncommutative symmetric functions.

QSymm elements live in the monomial basis M_alpha indexed by
compositions; the product is the quasi-shuffle (stuffle).  NSymm is the
free associative algebra on generators Z_n (words of positive integer
weights).  The abelianization sends the word (i_1,...,i_k) to
h_{i_1}...h_{i_k}; its dual is the inclusion Symm -> QSymm sending
m_lambda to the sum of the distinct rearrangements of lambda.

Compositions are plain tuples of positive integers, serialized as
``(2,1,3)``.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .core import GradedPolynomial
from .rational import Q
from . import symm


def check_composition(alpha):
    if any(p < 1 for p in alpha):
        raise ValueError("composition parts must be positive: %r" % (alpha,))
    return tuple(alpha)


def parse_composition(text):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("composition must look like (2,1,3): %r" % text)
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return check_composition(tuple(int(p) for p in inner.split(",")))


def format_composition(alpha):
    return "(%s)" % ",".join(str(p) for p in alpha)


class QSymmElement:
    """Linear combination of monomial quasisymmetric functions M_alpha."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def monomial(cls, alpha, coeff=None):
        return cls({check_composition(alpha): Q(1) if coeff is None else coeff})

    @classmethod
    def one(cls):
        return cls({(): Q(1)})

    def __eq__(self, other):
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            s = out.get(a, 0) + c
            if s == 0:
                out.pop(a, None)
            else:
                out[a] = s
        return QSymmElement(out)

    def __sub__(self, other):
        return self + QSymmElement({a: -c for a, c in other.terms.items()})

    def scale(self, s):
        if s == 0:
            return QSymmElement()
        return QSymmElement({a: c * s for a, c in self.terms.items()})

    def __mul__(self, other):
        return quasi_shuffle(self, other)

    def weight(self):
        """Max composition weight appearing."""
        return max((sum(a) for a in self.terms), default=0)

    def __repr__(self):
        items = sorted(self.terms.items())
        return " + ".join(
            "%s*M%s" % (c, format_composition(a)) for a, c in items
        ) or "0"


@lru_cache(maxsize=None)
def _qs_words(alpha, beta):
    """Quasi-shuffle of two compositions: tuple of (composition, count)."""
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    out = {}
    a, arest = alpha[0], alpha[1:]
    b, brest = beta[0], beta[1:]
    for w, c in _qs_words(arest, beta):
        k = (a,) + w
        out[k] = out.get(k, 0) + c
    for w, c in _qs_words(alpha, brest):
        k = (b,) + w
        out[k] = out.get(k, 0) + c
    for w, c in _qs_words(arest, brest):
        k = (a + b,) + w
        out[k] = out.get(k, 0) + c
    return tuple(sorted(out.items()))


def quasi_shuffle(x, y):
    """Quasi-shuffle (stuffle) product on QSymm."""
    out = QSymmElement()
    for alpha, ca in x.terms.items():
        for beta, cb in y.terms.items():
            c = ca * cb
            acc = {}
            for w, mult in _qs_words(alpha, beta):
                acc[w] = c * mult
            out = out + QSymmElement(acc)
    return out


def deconcatenation_coproduct(x):
    """Delta M_alpha = sum over splits alpha = beta.gamma of M_beta (x) M_gamma.

    Returned as a dict (beta, gamma) -> coefficient.
    """
    out = {}
    for alpha, c in x.terms.items():
        for i in range(len(alpha) + 1):
            key = (alpha[:i], alpha[i:])
            s = out.get(key, 0) + c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    return out


def pairing(word, x):
    """Duality pairing <word, M_alpha> = delta_{word, alpha}, extended."""
    return x.terms.get(tuple(word), Q(0))


def symm_into_qsymm(f):
    """Inclusion Symm -> QSymm: m_lambda -> sum of distinct rearrangements."""
    f = symm.convert(f, symm.M)
    out = QSymmElement()
    for mon, coeff in f.value.terms.items():
        lam = symm.monomial_partition(mon)
        for alpha in set(permutations(lam)):
            out = out + QSymmElement.monomial(alpha, coeff)
    return out


class NSymmElement:
    """Element of the free associative algebra on generators Z_n."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def word(cls, w, coeff=None):
        return cls({check_composition(w): Q(1) if coeff is None else coeff})

    @classmethod
    def one(cls):
        return cls({(): Q(1)})

    def __eq__(self, other):
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            s = out.get(a, 0) + c
            if s == 0:
                out.pop(a, None)
            else:
                out[a] = s
        return NSymmElement(out)

    def __sub__(self, other):
        return self + NSymmElement({a: -c for a, c in other.terms.items()})

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                k = w1 + w2
                s = out.get(k, 0) + c1 * c2
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return NSymmElement(out)

    def __repr__(self):
        items = sorted(self.terms.items())
        return " + ".join(
            "%s*Z%s" % (c, format_composition(w)) for w, c in items
        ) or "0"


def abelianize(x):
    """Ring map NSymm -> Symm sending the word (i_1,..,i_k) to h_{i1}...h_{ik}."""
    out = GradedPolynomial.zero()
    for word, c in x.terms.items():
        mon = {}
        for part in word:
            from .core import gen_id

            g = gen_id("h", part)
            mon[g] = mon.get(g, 0) + 1
        out = out + GradedPolynomial({tuple(sorted(mon.items())): c})
    return symm.SymmFn(symm.H, out)


# ---------------------------------------------------------------------------
# generator profiles, Lyndon words, Hilbert series


@dataclass(frozen=True)
class GeneratorProfile:
    """Set of allowed generator weights: start + step arithmetic families or
    an explicit finite set."""

    start: int = 1
    step: int = 1
    explicit: tuple = None

    def __post_init__(self):
        if self.explicit is not None:
            if not self.explicit or any(w < 1 for w in self.explicit):
                raise ValueError("explicit profile must be nonempty positive")
        elif self.start < 1 or self.step < 1:
            raise ValueError("profile weights must be positive")

    def weights_upto(self, n):
        if self.explicit is not None:
            return [w for w in sorted(self.explicit) if w <= n]
        return list(range(self.start, n + 1, self.step))

    @classmethod
    def all_positive(cls):
        return cls(1, 1)

    @classmethod
    def odd_from(cls, start):
        if start % 2 == 0:
            raise ValueError("odd profile must start at an odd weight")
        return cls(start, 2)

    @classmethod
    def from_text(cls, text):
        """'all', 'odd:3', 'arith:5:4' or 'set:3,5,7'."""
        text = text.strip()
        if text == "all":
            return cls.all_positive()
        if text.startswith("odd:"):
            return cls.odd_from(int(text[4:]))
        if text.startswith("arith:"):
            start, step = text[6:].split(":")
            return cls(int(start), int(step))
        if text.startswith("set:"):
            return cls(explicit=tuple(int(w) for w in text[4:].split(",")))
        raise ValueError("cannot parse profile %r" % text)


def lyndon_generators(n, profile=None):
    """Lyndon words of total weight n over the profile alphabet.

    Letters are compared by weight; a Lyndon word is strictly smaller
    than all of its proper rotations.
    """
    if n < 1:
        raise ValueError("weight must be positive")
    if profile is None:
        profile = GeneratorProfile.all_positive()
    alphabet = profile.weights_upto(n)

    def words(total):
        if total == 0:
            yield ()
            return
        for a in alphabet:
            if a <= total:
                for rest in words(total - a):
                    yield (a,) + rest

    out = []
    for w in words(n):
        if not w:
            continue
        if all(w < w[i:] + w[:i] for i in range(1, len(w))):
            out.append(w)
    return sorted(out)


def free_algebra_hilbert(profile, bound, flavor="associative"):
    """Per-degree dimensions of free algebras on the profile's generators.

    flavors: 'associative' (word counts), 'lie' (free graded Lie algebra
    dimensions derived from the associative series), or
    'polynomial-on-lyndon' (free commutative algebra on Lyndon words).
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    weights = profile.weights_upto(bound)
    assoc = [0] * (bound + 1)
    assoc[0] = 1
    for n in range(1, bound + 1):
        assoc[n] = sum(assoc[n - w] for w in weights if w <= n)
    if flavor == "associative":
        return assoc
    if flavor == "lie":
        # PBW: prod_n (1 - t^n)^(-l_n) = assoc series; peel the l_n off
        # degree by degree via the logarithm.
        logA = _log_int_series(assoc, bound)
        # n * [t^n] log A = sum_{d | n} d * l_d
        lie = [0] * (bound + 1)
        for n in range(1, bound + 1):
            s = sum(d * lie[d] for d in range(1, n) if n % d == 0)
            val = int(logA[n] * n - s)
            assert val == logA[n] * n - s and val % n == 0
            lie[n] = val // n
        return lie
    if flavor == "polynomial-on-lyndon":
        counts = [0] * (bound + 1)
        for n in range(1, bound + 1):
            counts[n] = len(lyndon_generators(n, profile))
        return polynomial_hilbert(
            [w for w in range(1, bound + 1) for _ in range(counts[w])], bound
        )
    raise ValueError("unknown flavor %r" % flavor)


def _log_int_series(coeffs, bound):
    """Rational log of an integer series with constant term 1."""
    from .core import PowerSeries1

    s = PowerSeries1([Q(c) for c in coeffs[: bound + 1]])
    return s.log().coeffs


def polynomial_hilbert(generator_degrees, bound):
    """Coefficients of prod (1 - t^d)^(-1) over the given degrees."""
    out = [0] * (bound + 1)
    out[0] = 1
    for d in generator_degrees:
        if d <= 0:
            raise ValueError("degrees must be positive")
        for n in range(d, bound + 1):
            out[n] += out[n - d]
    return out
