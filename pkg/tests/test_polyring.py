"""Polynomial arithmetic, derivatives, Hessians, truncation, Euler operator."""

import random
from fractions import Fraction

import pytest

from jetdet.errors import DimensionMismatch
from jetdet.polyring import (
    Poly,
    WeightSystem,
    euler_defect,
    hessian_det,
    homogeneous_degree,
    jacobian,
    mono_divides,
    monomials_of_degree,
    monomials_of_weighted_degree,
    monomials_up_to_degree,
    permute_variables,
    primitive_part,
    scale_variables,
    weighted_degree_range,
)

from conftest import P


def rand_poly(rng: random.Random, n: int, max_deg: int = 4, terms: int = 5) -> Poly:
    monos = list(monomials_up_to_degree(n, max_deg))
    return Poly(
        n,
        [
            (rng.choice(monos), Fraction(rng.randrange(-6, 7)))
            for _ in range(rng.randrange(terms + 1))
        ],
    )


class TestBasics:
    def test_zero_poly_has_empty_table(self):
        assert Poly.zero(3).terms() == ()
        assert (P("x") - P("x")).is_zero

    def test_duplicate_terms_accumulate(self):
        p = Poly(2, [((1, 0), 2), ((1, 0), -2), ((0, 1), 1)])
        assert p == P("y")

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Poly(2, {(-1, 0): 1})

    def test_nvars_mismatch_rejected(self):
        with pytest.raises(DimensionMismatch):
            Poly(2, {(1, 0, 0): 1})
        with pytest.raises(DimensionMismatch):
            P("x^2", nvars=2) + P("x^2", nvars=3)

    def test_canonical_term_order(self):
        p = P("x^3 + y^3 + x*y")
        assert [m for m, _ in p.terms()] == [(1, 1), (3, 0), (0, 3)]

    def test_hash_and_eq(self):
        assert hash(P("x+y")) == hash(P("y+x"))
        assert P("x + 2*y") == P("2*y + x")
        assert P("x") != P("y")

    def test_degrees(self):
        p = P("x^5+y^5+x^3*y^3")
        assert p.degree() == 6
        assert p.low_degree() == 5
        assert Poly.zero(2).degree() is None

    def test_pow(self):
        assert P("x+y") ** 2 == P("x^2 + 2*x*y + y^2")
        assert P("x") ** 0 == Poly.constant(1, 1)


class TestWeightedDegree:
    def test_homogeneous_cubic(self):
        assert weighted_degree_range(P("x^3+y^3")) == (3, 3)

    def test_quasihomogeneous_cusp(self):
        assert weighted_degree_range(P("x^3+y^2"), WeightSystem((2, 3), 6)) == (6, 6)

    def test_mixed_degrees(self):
        # n = 3, unit weights: direct scan over term degrees
        assert weighted_degree_range(P("x^4+y^4+x^2*y^2*z^2")) == (4, 6)

    def test_zero_poly_is_empty(self):
        assert weighted_degree_range(Poly.zero(2)) is None

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            weighted_degree_range(P("x+y"), WeightSystem((1, 1, 1), 2))


class TestDerivative:
    def test_cubic(self):
        assert P("x^3+y^3").derivative(0) == P("3*x^2", nvars=2)

    def test_power_rule(self):
        assert P("x^5+y^5+x^3*y^3").derivative(0) == P("5*x^4 + 3*x^2*y^3")

    def test_constant(self):
        assert Poly.constant(2, 7).derivative(0).is_zero

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            P("x").derivative(1)

    def test_linearity(self):
        rng = random.Random(1)
        for _ in range(50):
            p, q = rand_poly(rng, 2), rand_poly(rng, 2)
            assert (p + q).derivative(0) == p.derivative(0) + q.derivative(0)


class TestEulerDefect:
    def test_homogeneous(self):
        assert euler_defect(P("x^3+y^3"), WeightSystem.unit(2, 3)).is_zero

    def test_isobaric(self):
        assert euler_defect(P("x^3+y^2"), WeightSystem((2, 3), 6)).is_zero

    def test_defect_value(self):
        # 3*(x^3 + y^4) - (3x^3 + 4y^4) = -y^4
        assert euler_defect(P("x^3+y^4"), WeightSystem.unit(2, 3)) == P("-y^4")

    def test_random_homogeneous_forms(self):
        rng = random.Random(2)
        for _ in range(60):
            n = rng.randrange(2, 5)
            m = rng.randrange(1, 7)
            monos = list(monomials_of_degree(n, m))
            f = Poly(n, [(rng.choice(monos), rng.randrange(-5, 6)) for _ in range(4)])
            assert euler_defect(f, WeightSystem.unit(n, m)).is_zero


class TestHessian:
    def test_nondegenerate_quadric(self):
        assert hessian_det(P("x^2+y^2")) == Poly.constant(2, 4)

    def test_quartic(self):
        assert hessian_det(P("x^4+y^4")) == P("144*x^2*y^2")

    @pytest.mark.parametrize("n,m", [(2, 3), (2, 5), (3, 3), (3, 4), (4, 3)])
    def test_fermat_closed_form(self, n, m):
        f = Poly(n, {tuple(m if i == j else 0 for j in range(n)): 1 for i in range(n)})
        expected = Poly.monomial(n, (m - 2,) * n, (m * (m - 1)) ** n)
        assert hessian_det(f) == expected

    def test_permutation_equivariance(self):
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randrange(2, 4)
            p = rand_poly(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            assert permute_variables(hessian_det(p), perm) == hessian_det(
                permute_variables(p, perm)
            )


class TestTruncate:
    def test_degree_filter(self):
        assert P("x^5+y^5+x^3*y^3").truncate(5) == P("x^5+y^5")

    def test_identity_when_low_order(self):
        assert P("x^3+y^3").truncate(3) == P("x^3+y^3")

    def test_order_zero_keeps_constant(self):
        assert P("x^2 + 7", nvars=2).truncate(0) == Poly.constant(2, 7)

    def test_idempotent_and_linear(self):
        rng = random.Random(4)
        for _ in range(40):
            p, q = rand_poly(rng, 3), rand_poly(rng, 3)
            k = rng.randrange(5)
            assert p.truncate(k).truncate(k) == p.truncate(k)
            assert (p + q).truncate(k) == p.truncate(k) + q.truncate(k)


class TestHelpers:
    def test_monomials_of_degree_count(self):
        assert len(list(monomials_of_degree(3, 2))) == 6
        assert list(monomials_of_degree(2, 2)) == [(2, 0), (1, 1), (0, 2)]

    def test_monomials_of_weighted_degree(self):
        monos = monomials_of_weighted_degree((2, 3), 6)
        assert set(monos) == {(3, 0), (0, 2)}

    def test_mono_divides(self):
        assert mono_divides((1, 2), (3, 2))
        assert not mono_divides((4, 0), (3, 3))

    def test_homogeneous_degree(self):
        assert homogeneous_degree(P("x^4+y^4")) == 4
        assert homogeneous_degree(P("x^4+y^3")) is None

    def test_jacobian(self):
        assert jacobian(P("x^2*y")) == (P("2*x*y"), P("x^2", nvars=2))

    def test_scale_variables(self):
        assert scale_variables(P("x^2+y"), [2, 3]) == P("4*x^2 + 3*y")
        with pytest.raises(ValueError):
            scale_variables(P("x"), [0])

    def test_primitive_part(self):
        assert primitive_part(P("6*x^2 + 4*y^2")) == P("3*x^2 + 2*y^2")
        assert primitive_part(P("-1/2*x")) == P("x")  # leading term made positive
        assert primitive_part(P("-x^2 - x^4")) == P("x^2 + x^4")
