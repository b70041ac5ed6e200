import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfgenus.core import (
    BoundMismatchError,
    ConstantTermError,
    GradedPolynomial,
    ParseError,
    PowerSeries1,
    TruncatedSeries,
    format_polynomial,
    gen_id,
    gid_degree,
    gid_family,
    gid_index,
    parse_polynomial,
)
from hopfgenus.rational import Q


def poly(text):
    return parse_polynomial(text)


class TestGeneratorIds:
    def test_roundtrip(self):
        g = gen_id("c", 7)
        assert gid_family(g) == "c"
        assert gid_index(g) == 7
        assert gid_degree(g) == 7

    def test_explicit_degree(self):
        g = gen_id("x", 1, 2)
        assert gid_degree(g) == 2

    def test_ordering_by_degree(self):
        assert gen_id("c", 2) > gen_id("c", 1)
        assert gen_id("x", 1, 5) > gen_id("c", 3)

    def test_bad_family(self):
        with pytest.raises(ValueError):
            gen_id("cc", 1)

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            gen_id("c", 1, 0)


coeffs = st.builds(
    Q, st.integers(-50, 50), st.integers(1, 9)
)


@st.composite
def polynomials(draw, maxgens=3, maxdeg=4):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        mon = []
        for i in range(draw(st.integers(0, maxgens))):
            idx = draw(st.integers(1, maxdeg))
            mon.append((gen_id("c", idx), draw(st.integers(1, 2))))
        c = draw(coeffs)
        if c != 0:
            key = tuple(sorted(dict(mon).items()))
            terms[key] = c
    return GradedPolynomial(terms)


class TestGradedPolynomial:
    def test_example_product(self):
        a = poly("c[1] + c[2]")
        b = poly("c[1] - c[2]")
        assert a * b == poly("c[1]^2 - c[2]^2")

    @given(polynomials(), polynomials(), polynomials())
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + GradedPolynomial.zero() == a
        assert a * GradedPolynomial.one() == a

    @given(polynomials())
    @settings(max_examples=40, deadline=None)
    def test_sub_is_additive_inverse(self, a):
        assert a - a == GradedPolynomial.zero()

    def test_truncate_and_parts(self):
        p = poly("c[1] + c[1]*c[2] + c[4]")
        assert p.truncate(2) == poly("c[1]")
        assert p.homogeneous_part(3) == poly("c[1]*c[2]")
        assert p.max_degree() == 4

    def test_mul_truncated_matches_full(self):
        a = poly("1 + c[1] + c[2]")
        b = poly("1 + c[1] + c[3]")
        assert a.mul_truncated(b, 3) == (a * b).truncate(3)

    def test_substitute(self):
        p = poly("c[2]^2 + c[1]")
        images = {gen_id("c", 2): poly("c[1]^2")}
        assert p.substitute(images) == poly("c[1]^4 + c[1]")

    def test_pow(self):
        p = poly("1 + c[1]")
        assert p**3 == poly("1 + 3*c[1] + 3*c[1]^2 + c[1]^3")


class TestTextFormat:
    def test_example(self):
        p = poly("3*c[1]^2 - 2*c[2]")
        assert p.coefficient(((gen_id("c", 1), 2),)) == 3
        assert p.coefficient(((gen_id("c", 2), 1),)) == -2

    def test_rational_coefficients(self):
        p = poly("1/2*c[1] + 5")
        assert p.coefficient(((gen_id("c", 1), 1),)) == Q(1, 2)
        assert p.coefficient(()) == 5

    @given(polynomials())
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_bit_exact(self, p):
        text = format_polynomial(p)
        assert parse_polynomial(text) == p
        assert format_polynomial(parse_polynomial(text)) == text

    def test_garbage_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("c[1] @ c[2]")


class TestTruncatedSeries:
    def test_inverse_example(self):
        # degree-3 term of 1/(1 + c1 + c2 + c3) is 2 c1 c2 - c1^3 - c3
        comps = [poly("1"), poly("c[1]"), poly("c[2]"), poly("c[3]")]
        inv = TruncatedSeries(comps).inverse()
        assert inv.comps[3] == poly("2*c[1]*c[2] - c[1]^3 - c[3]")

    def test_exp_log_roundtrip(self):
        comps = [GradedPolynomial.zero(), poly("c[1]"), poly("2*c[2]"), poly("c[3]")]
        s = TruncatedSeries(comps)
        back = s.exp().log()
        assert all(a == b for a, b in zip(back.comps, s.comps))

    def test_mul_inverse_is_one(self):
        comps = [poly("1"), poly("c[1]"), poly("c[1]^2 + c[2]")]
        s = TruncatedSeries(comps)
        prod = s * s.inverse()
        assert prod.comps[0] == poly("1")
        assert not prod.comps[1].terms and not prod.comps[2].terms

    def test_bound_mismatch(self):
        a = TruncatedSeries.one(3)
        b = TruncatedSeries.one(4)
        with pytest.raises(BoundMismatchError):
            a * b

    def test_exp_needs_zero_constant(self):
        with pytest.raises(ConstantTermError):
            TruncatedSeries.one(2).exp()


class TestPowerSeries1:
    def test_lagrange_inverse_example(self):
        f = PowerSeries1([Q(0), Q(1), Q(1), Q(0), Q(0)])
        g = f.compose_inverse()
        assert g.coeffs[:5] == [Q(0), Q(1), Q(-1), Q(2), Q(-5)]

    def test_compose_inverse_identity(self):
        f = PowerSeries1([Q(0), Q(1), Q(2), Q(-1), Q(3)])
        g = f.compose_inverse()
        assert f.compose(g).coeffs == PowerSeries1.x(4).coeffs

    def test_exp_log(self):
        s = PowerSeries1([Q(0), Q(1), Q(1, 2), Q(0)])
        assert s.exp().log().coeffs == s.coeffs

    def test_float_coefficients(self):
        s = PowerSeries1([0.0, 0.5, -0.25])
        e = s.exp()
        assert e.coeffs[0] == 1.0
        assert abs(e.coeffs[1] - 0.5) < 1e-15

    def test_inverse(self):
        s = PowerSeries1([Q(1), Q(1), Q(0)])
        assert s.inverse().coeffs == [Q(1), Q(-1), Q(1)]
