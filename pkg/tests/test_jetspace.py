"""Jet spaces, ideal images, membership, Nakayama-certified power containment."""

import random

import pytest

from jetdet.errors import HypothesisViolation, NotCertified, ResourceCapExceeded
from jetdet.jetspace import (
    build_jet_space,
    certified_jacobian,
    certified_jacobian_order,
    certify_power_containment,
    contains_monomials,
    ideal_image,
    jet_membership,
)
from jetdet.polyring import (
    Poly,
    jacobian,
    mono_divides,
    monomials_of_degree,
    monomials_up_to_degree,
)

from conftest import P


class TestJetSpace:
    def test_order_one_basis(self):
        js = build_jet_space(2, 1)
        assert js.basis == ((0, 0), (1, 0), (0, 1))

    def test_sizes(self):
        assert build_jet_space(2, 4).dim == 15
        assert build_jet_space(3, 2).dim == 10

    def test_index_inverts_basis(self):
        js = build_jet_space(3, 4)
        assert all(js.basis[js.index[m]] == m for m in js.basis)

    def test_resource_cap(self):
        with pytest.raises(ResourceCapExceeded):
            build_jet_space(6, 40, basis_cap=10_000)

    def test_coords_roundtrip(self):
        js = build_jet_space(2, 5)
        p = P("x^3 + 1/2*x*y^4 + 7")
        assert js.poly(js.coords(p)) == p


class TestIdealImage:
    def test_monomial_square_ideal_order2(self):
        js = build_jet_space(2, 2)
        img = ideal_image([P("x^2", nvars=2), P("y^2")], js)
        assert img.rank() == 2  # only degree-0 multipliers survive truncation

    def test_monomial_square_ideal_order3(self):
        js = build_jet_space(2, 3)
        img = ideal_image([P("x^2", nvars=2), P("y^2")], js)
        assert img.rank() == 6  # x^2, y^2, x^3, x^2 y, x y^2, y^3

    def test_plane_cubic_multiplication_map(self):
        # degree-2 multipliers against the derivatives of x^3+y^3 span the
        # whole 5-dimensional space of degree-4 forms: rank 3*2 - 1 = 5
        js = build_jet_space(2, 4)
        img = ideal_image(list(jacobian(P("x^3+y^3"))), js, multiplier_floor=2)
        assert img.span_matrix.cols == 6
        assert img.rank() == 5
        ok, _ = contains_monomials(img, monomials_of_degree(2, 4))
        assert ok

    def test_floor_validated(self):
        with pytest.raises(ValueError):
            ideal_image([P("x")], build_jet_space(1, 2), multiplier_floor=-1)


class TestMembership:
    def test_zero_is_member(self):
        js = build_jet_space(2, 3)
        img = ideal_image(list(jacobian(P("x^3+y^3"))), js)
        assert jet_membership(Poly.zero(2), img) == (True, None)

    def test_euler_witness(self):
        f = P("x^3+y^3")
        js = build_jet_space(2, 3)
        img = ideal_image(list(jacobian(f)), js)
        member, witness = jet_membership(f, img, witness=True)
        assert member
        assert witness == (P("1/3*x", nvars=2), P("1/3*y"))

    def test_obstruction_monomial_not_member(self):
        js = build_jet_space(2, 6)
        img = ideal_image([P("x^4", nvars=2), P("y^4")], js)
        member, witness = jet_membership(P("x^3*y^3"), img)
        assert not member and witness is None

    def test_witness_expansion_reproduces_jet(self):
        rng = random.Random(7)
        js = build_jet_space(2, 5)
        gens = [P("x^2 + y^3"), P("x*y")]
        img = ideal_image(gens, js)
        monos = list(monomials_up_to_degree(2, 5))
        for _ in range(20):
            combo = [
                (rng.choice(monos), rng.randrange(-2, 3), rng.randrange(2))
                for _ in range(3)
            ]
            g = Poly.zero(2)
            for mono, c, gi in combo:
                g = g + Poly.monomial(2, mono, c) * gens[gi]
            member, witness = jet_membership(g, img, witness=True)
            assert member
            expansion = sum(
                (w * gen for w, gen in zip(witness, gens)), Poly.zero(2)
            )
            assert expansion.truncate(5) == g.truncate(5)


class TestPowerContainment:
    def test_cubic_cases(self):
        f = P("x^3+y^3")
        assert certify_power_containment(f, 3)
        assert not certify_power_containment(f, 2)  # xy is missed by (x^2, y^2)

    def test_quintic_sharpness_obstruction(self):
        assert not certify_power_containment(P("x^5+y^5"), 6)  # x^3 y^3
        assert certify_power_containment(P("x^5+y^5"), 7)

    def test_monotone_in_the_power(self, regular_forms):
        explicit = [P("x^3+y^3"), P("x^4+y^4"), P("x^3+y^2"), P("x^2+y^5")]
        for f in explicit + regular_forms[:6]:
            previous = False
            top = f.nvars * ((f.degree() or 2) - 2) + 3
            for order in range(1, min(top, 9) + 1):
                now = certify_power_containment(f, order)
                assert not (previous and not now)
                previous = now

    def test_cylinder_never_contains(self):
        f = P("x^3+y^3", nvars=3)
        for order in (2, 4, 6, 8):
            assert not certify_power_containment(f, order)

    def test_degenerate_vs_smooth_cubic(self):
        # Hesse pencil: t = -3 is singular at (1,1,1), t = +3 is smooth
        assert not certify_power_containment(P("x^3+y^3+z^3 - 3*x*y*z"), 4)
        assert certify_power_containment(P("x^3+y^3+z^3 + 3*x*y*z"), 4)


class TestCertifiedLadder:
    def test_certifies_fermat(self):
        order, js, img = certified_jacobian(P("x^3+y^3"))
        assert order == 4
        assert js.dim - img.rank() == 4  # Milnor number via codimension

    def test_non_isolated_raises(self):
        with pytest.raises(NotCertified):
            certified_jacobian_order(P("x^2*y"), doublings=2)

    def test_cylinder_raises_fast(self):
        with pytest.raises(NotCertified):
            certified_jacobian_order(P("x^3+y^3", nvars=3))

    def test_constant_term_rejected(self):
        with pytest.raises(HypothesisViolation):
            certified_jacobian_order(P("1 + x^2"))

    def test_start_override(self):
        order, _, _ = certified_jacobian_order(P("x^3+y^3"), start=9)
        assert order == 9


class TestDivisibilityOracle:
    def test_monomial_ideals_match_divisibility(self):
        # jet membership of a monomial in a monomial ideal is divisibility
        rng = random.Random(8)
        for _ in range(30):
            n = rng.randrange(2, 4)
            order = rng.randrange(4, 8)
            js = build_jet_space(n, order)
            gens = []
            for _ in range(rng.randrange(1, 4)):
                d = rng.randrange(1, order)
                gens.append(Poly.monomial(n, rng.choice(list(monomials_of_degree(n, d)))))
            img = ideal_image(gens, js)
            for _ in range(8):
                d = rng.randrange(order + 1)
                mono = rng.choice(list(monomials_of_degree(n, d)))
                member, _ = jet_membership(Poly.monomial(n, mono), img)
                divisible = any(
                    mono_divides(g.monomials()[0], mono) for g in gens
                )
                assert member == divisible


class TestTopDegreeDimension:
    def test_matches_koszul_prediction(self, regular_forms):
        from jetdet.combinatorics import n_dim
        from jetdet.invariants import koszul_hilbert_value

        for f in regular_forms[:8]:
            n = f.nvars
            m = f.degree()
            order = n * (m - 2) + 1
            js = build_jet_space(n, order)
            img = ideal_image(list(jacobian(f)), js)
            ech = img.span_matrix.echelon()
            from jetdet.polyring import mono_degree

            top_rank = sum(
                1 for r in ech.pivots if mono_degree(js.basis[r]) == order
            )
            assert top_rank == n_dim(n, order) - koszul_hilbert_value(n, m, order)
