import math
import random

import pytest

from hopfgenus import genus as G
from hopfgenus.core import GradedPolynomial, PowerSeries1, parse_polynomial
from hopfgenus.rational import Q


@pytest.fixture(scope="module")
def cp1():
    return G.cp(1)


@pytest.fixture(scope="module")
def cp2():
    return G.cp(2)


class TestManifoldModels:
    def test_cp_chern_class(self, cp2):
        # c(T CP^2) = 1 + 3x + 3x^2
        x = G.GradedPolynomial.generator("x", 1, degree=2)
        assert cp2.total_chern == GradedPolynomial.one() + x * 3 + (x * x) * 3

    def test_pairing_top_degree_only(self, cp2):
        x = G.GradedPolynomial.generator("x", 1, degree=2)
        assert cp2.pairing(x * x) == 1
        assert cp2.pairing(x) == 0

    def test_nilpotency(self, cp1):
        x = G.GradedPolynomial.generator("x", 1, degree=2)
        assert cp1.reduce(x * x).terms == {}

    def test_betti(self, cp2):
        assert cp2.betti_numbers() == [1, 0, 1, 0, 1]

    def test_product(self, cp1, cp2):
        m = G.product(cp1, cp2)
        assert m.dim_c == 3
        assert m.betti_numbers() == [1, 0, 2, 0, 2, 0, 1]

    def test_catalog(self):
        assert G.catalog_model("CP3").dim_c == 3
        assert G.catalog_model("CP1xCP1").dim_c == 2
        with pytest.raises(KeyError):
            G.catalog_model("K3")

    def test_json_roundtrip(self):
        js = {
            "name": "myCP1",
            "dim_c": 1,
            "generators": [{"sym": "x", "deg": 2, "nilpotency": 1}],
            "total_chern": "1 + 2*x[1]",
            "volume_monomial": "x[1]",
        }
        m = G.manifold_from_json(js)
        assert G.genus(m, G.todd_series(4)) == 1


class TestChernCharacter:
    def test_ch0_is_rank(self, cp1):
        assert G.chern_character(cp1, 0) == GradedPolynomial.constant(Q(1))

    def test_ch1_cp1(self, cp1):
        x = G.GradedPolynomial.generator("x", 1, degree=2)
        assert G.chern_character(cp1, 1) == x * 2

    def test_ch2_cp2(self, cp2):
        x = G.GradedPolynomial.generator("x", 1, degree=2)
        assert G.chern_character(cp2, 2) == (x * x) * Q(3, 2)

    def test_ch_above_dimension_vanishes(self, cp1):
        assert G.chern_character(cp1, 3).terms == {}


class TestGenera:
    def test_ahat_cp1_cp2(self, cp1, cp2):
        ahat = G.a_hat_series(6)
        assert G.genus(cp1, ahat) == 0
        assert G.genus(cp2, ahat) == Q(-1, 8)

    def test_todd_cpn(self):
        todd = G.todd_series(8)
        for n in range(1, 7):
            assert G.genus(G.cp(n), todd) == 1

    def test_todd_products(self, cp1, cp2):
        todd = G.todd_series(8)
        assert G.genus(G.product(cp1, cp2), todd) == 1

    def test_exponential_additive(self):
        f = PowerSeries1([Q(0), Q(1)] + [Q(0)] * 4)
        assert G.genus_from_exponential(f, 0) == 1
        for n in range(1, 5):
            assert G.genus_from_exponential(f, n) == 0

    def test_exponential_x_plus_x2(self):
        f = PowerSeries1([Q(0), Q(1), Q(1), Q(0)])
        assert G.genus_from_exponential(f, 1) == -2

    def test_cross_path_todd_pair(self):
        f = PowerSeries1([Q(0)] + [Q(1, math.factorial(k)) for k in range(1, 7)])
        qf = G.series_from_exponential(f)
        for n in range(1, 5):
            assert G.genus_from_exponential(f, n) == G.genus(G.cp(n), qf)

    def test_multiplicative_class_rejects_floats(self, cp1):
        with pytest.raises(ValueError):
            G.multiplicative_class(cp1, PowerSeries1([1.0, 0.5]))


class TestGammaExponential:
    def test_coefficients(self):
        src = G.NumericZetaSource(1e-13)
        ge = G.gamma_exponential(5, src)
        g = G.EULER_GAMMA
        z2 = math.pi**2 / 6
        z3 = 1.2020569031595942854
        assert ge.coeffs[1] == 1.0
        assert abs(ge.coeffs[2] - g) < 1e-10
        assert abs(ge.coeffs[3] - (g * g / 2 - z2 / 2)) < 1e-10
        assert abs(ge.coeffs[4] - (g**3 / 6 - g * z2 / 2 + z3 / 3)) < 1e-10


class TestDeformations:
    def test_zero_recovers_genus(self, cp2):
        ahat = G.a_hat_series(6)
        t0 = G.DeformationParameters.zero()
        assert G.deform_genus(cp2, ahat, t0) == G.genus(cp2, ahat)

    def test_cp1_t1(self, cp1):
        ahat = G.a_hat_series(6)
        t = G.DeformationParameters.from_dict({1: Q(1, 3)})
        assert G.deform_genus(cp1, ahat, t) == Q(2, 3)

    def test_imaginary_parameter(self, cp1):
        ahat = G.a_hat_series(6)
        t = G.DeformationParameters.from_dict({1: 0.5j})
        v = G.deform_genus(cp1, ahat, t)
        assert v.real == 0.0 and v.imag == 1.0

    def test_even_index_rejected(self):
        with pytest.raises(ValueError):
            G.DeformationParameters.from_dict({2: Q(1)})

    def test_exclude_ch1_flag(self, cp1):
        ahat = G.a_hat_series(6)
        t = G.DeformationParameters.from_dict({1: Q(1)})
        assert G.deform_genus(cp1, ahat, t, include_ch1=False) == 0

    def test_torsor_law_exact(self, cp1, cp2):
        rng = random.Random(11)
        ahat = G.a_hat_series(6)
        models = [cp1, cp2, G.product(G.cp(1), G.cp(1))]
        for trial in range(6):
            m = models[trial % 3]
            t = G.DeformationParameters.from_dict(
                {1: Q(rng.randint(-5, 5), rng.randint(1, 7)), 3: Q(rng.randint(-5, 5), 3)}
            )
            s = G.DeformationParameters.from_dict({1: Q(rng.randint(-5, 5), 2)})
            k = G.multiplicative_class(m, ahat)
            seq = m.pairing(
                m.reduce(
                    G.deformation_exponential(m, t)
                    * G.deformation_exponential(m, s)
                    * k
                )
            )
            assert seq == G.deform_genus(m, ahat, t + s)

    def test_deformed_genus_object(self, cp1):
        ahat = G.a_hat_series(6)
        t = G.DeformationParameters.from_dict({1: Q(1, 2)})
        s = G.DeformationParameters.from_dict({1: Q(1, 2)})
        d = G.DeformedGenus(ahat).deform(t).deform(s)
        assert d.evaluate(cp1) == G.deform_genus(cp1, ahat, t + s)


class TestTheoremChecks:
    def test_diagonal_vanishing_odd(self):
        for n in range(1, 7):
            m = G.cp(n)
            for k in range(1, 2 * n, 2):
                assert G.diagonal_vanishing_check(m, k)

    def test_diagonal_nonvacuous_even(self, cp2):
        assert not G.diagonal_vanishing_check(cp2, 2)

    def test_primitivity(self, cp1, cp2):
        assert G.primitivity_check(cp1, cp1, 1)
        assert G.primitivity_check(cp1, cp2, 3)
        assert G.primitivity_check(cp2, cp2, 3)

    def test_primitivity_even_k_rejected(self, cp1):
        with pytest.raises(ValueError):
            G.primitivity_check(cp1, cp1, 0)


class TestModuleSeriesAndCoaction:
    def test_point_series(self):
        from hopfgenus.homology import SOMEGA, coefficient_ring_series

        assert G.morphism_module_series(G.point(), 9) == coefficient_ring_series(
            SOMEGA, 9
        )

    def test_cp1_series(self, cp1):
        assert G.morphism_module_series(cp1, 5) == [1, 0, 1, 0, 0, 1]

    def test_cp2_degree5(self, cp2):
        assert G.morphism_module_series(cp2, 5)[5] == 1

    def test_point_coaction_trivial(self):
        one = GradedPolynomial.one()
        assert G.coaction(G.point(), one, 8) == {(): one}

    def test_cp1_degree2_component(self, cp1):
        psi = G.coaction(cp1, GradedPolynomial.one(), 4)
        x = G.GradedPolynomial.generator("x", 1, degree=2)
        assert psi[((1, 1),)] == x * (-4)

    def test_counit(self, cp2):
        for cls in [GradedPolynomial.one(), G.chern_character(cp2, 1)]:
            assert G.counit_check(cp2, cls, 12)

    def test_coassociativity(self, cp2):
        for cls in [GradedPolynomial.one(), G.chern_character(cp2, 1)]:
            assert G.coassociativity_check(cp2, cls, 12)
