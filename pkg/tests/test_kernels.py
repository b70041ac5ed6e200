"""The pure and compiled kernels must agree exactly."""

import random

import pytest

from hopfgenus._kernels import BACKEND, pure
from hopfgenus.core import gen_id
from hopfgenus.rational import Q

try:
    from hopfgenus._kernels import _speedups
except ImportError:
    _speedups = None

BACKENDS = [pure] + ([_speedups] if _speedups is not None else [])


def random_terms(rng, nterms, maxidx=5):
    terms = {}
    for _ in range(nterms):
        mon = {}
        for _ in range(rng.randint(0, 3)):
            mon[gen_id("c", rng.randint(1, maxidx))] = rng.randint(1, 3)
        terms[tuple(sorted(mon.items()))] = Q(rng.randint(-9, 9) or 1, rng.randint(1, 5))
    return terms


class TestBackendAgreement:
    def test_selected_backend_is_reported(self):
        assert BACKEND in ("pure", "cython")

    def test_monomial_degree(self):
        mon = ((gen_id("c", 3), 2), (gen_id("c", 5), 1))
        for mod in BACKENDS:
            assert mod.monomial_degree(mon) == 11

    def test_monomial_mul_merges(self):
        a = ((gen_id("c", 1), 1), (gen_id("c", 3), 2))
        b = ((gen_id("c", 1), 2), (gen_id("c", 2), 1))
        for mod in BACKENDS:
            out = mod.monomial_mul(a, b)
            assert out == tuple(
                sorted(
                    {
                        gen_id("c", 1): 3,
                        gen_id("c", 2): 1,
                        gen_id("c", 3): 2,
                    }.items()
                )
            )

    @pytest.mark.skipif(_speedups is None, reason="compiled backend not built")
    def test_mul_terms_agree(self):
        rng = random.Random(5)
        for _ in range(25):
            a = random_terms(rng, rng.randint(0, 6))
            b = random_terms(rng, rng.randint(0, 6))
            for cap in (-1, 4, 9):
                assert pure.mul_terms(a, b, cap) == _speedups.mul_terms(a, b, cap)

    @pytest.mark.skipif(_speedups is None, reason="compiled backend not built")
    def test_rank_agrees(self):
        rng = random.Random(9)
        for _ in range(25):
            nr, nc = rng.randint(1, 6), rng.randint(1, 6)
            m = [[rng.randint(-4, 4) for _ in range(nc)] for _ in range(nr)]
            assert pure.rank_bareiss(m) == _speedups.rank_bareiss(m)

    def test_rank_known_values(self):
        for mod in BACKENDS:
            assert mod.rank_bareiss([[1, 2], [2, 4]]) == 1
            assert mod.rank_bareiss([[1, 2], [3, 4]]) == 2
            assert mod.rank_bareiss([[0, 0], [0, 0]]) == 0
            assert mod.rank_bareiss([]) == 0
