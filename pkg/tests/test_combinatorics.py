"""Binomial identities and their brute-force verifiers."""

import math

import pytest

from jetdet.combinatorics import (
    binom,
    koszul_kernel_dim,
    m_sum,
    n_dim,
    verify_lemma_comb,
)
from jetdet.polyring import monomials_of_degree


class TestNDim:
    @pytest.mark.parametrize("n,d,expected", [(3, 2, 6), (2, 5, 6), (4, -1, 0)])
    def test_values(self, n, d, expected):
        assert n_dim(n, d) == expected

    def test_matches_enumeration(self):
        for n in range(1, 5):
            for d in range(7):
                assert n_dim(n, d) == len(list(monomials_of_degree(n, d)))

    def test_zero_convention_not_clamping(self):
        assert binom(3, 5) == 0
        assert binom(-2, 1) == 0
        assert binom(5, 3) == math.comb(5, 3)


class TestMSum:
    @pytest.mark.parametrize("n,m,expected", [(2, 3, 4), (2, 4, 6), (3, 3, 15)])
    def test_values(self, n, m, expected):
        assert m_sum(n, m) == expected

    def test_identity_at_scale(self):
        for n in range(2, 11):
            for m in range(2, 11):
                assert m_sum(n, m) == binom(n * (m - 1), n - 1)


class TestKoszulKernel:
    @pytest.mark.parametrize("n,m,expected", [(2, 4, 0), (3, 3, 3), (2, 3, 0)])
    def test_values(self, n, m, expected):
        assert koszul_kernel_dim(n, m) == expected

    def test_dimension_accounting(self):
        # source minus kernel equals the target dimension of the top-degree
        # multiplication map whenever that map makes sense
        for n in range(2, 9):
            for m in range(2, 9):
                if n * (m - 2) < m:
                    continue
                source = n * n_dim(n, n * (m - 2) - m + 2)
                assert source - koszul_kernel_dim(n, m) == m_sum(n, m)
                assert m_sum(n, m) == n_dim(n, n * (m - 2) + 1)


class TestMultiplicationMapRank:
    @pytest.mark.parametrize("n,m", [(2, 4), (2, 5), (3, 3), (3, 4)])
    def test_empirical_rank_matches_m_sum(self, n, m):
        # the linear algebra of the actual multiplication map on the Fermat
        # form agrees with the inclusion-exclusion count
        from jetdet.jetspace import build_jet_space, ideal_image
        from jetdet.polyring import jacobian
        from jetdet.sharpness import fermat

        top = n * (m - 2) + 1
        js = build_jet_space(n, top)
        img = ideal_image(
            list(jacobian(fermat(n, m))), js, multiplier_floor=top - m + 1
        )
        assert img.rank() == m_sum(n, m)
        assert img.span_matrix.cols == n * n_dim(n, top - m + 1)


class TestLemmaTable:
    def test_small_range_all_equal(self):
        rows = verify_lemma_comb(4, 4)
        assert all(r.equal for r in rows)
        assert len(rows) == 9

    def test_brute_force_fields(self):
        rows = {(r.n, r.m): r for r in verify_lemma_comb(3, 3)}
        r23 = rows[(2, 3)]
        assert (r23.alternating_sum, r23.binomial, r23.brute_total) == (4, 4, 4)
        assert r23.brute_alternating == 4
        r33 = rows[(3, 3)]
        assert (r33.alternating_sum, r33.binomial) == (15, 15)

    def test_brute_force_skipped_above_limit(self):
        rows = {(r.n, r.m): r for r in verify_lemma_comb(2, 12, brute_limit=20)}
        assert rows[(2, 12)].brute_total is None
        assert rows[(2, 12)].equal  # formula vs binomial still checked

    def test_bad_bounds_rejected(self):
        with pytest.raises(ValueError):
            verify_lemma_comb(1, 4)
