"""Counterexample families showing the graded determinacy bound is tight.

For admissible (n, m) the Fermat form f = x_1^m + ... + x_n^m admits the
deformation

    g = f + t * x_1^(m-2) * ... * x_n^(m-2),

a perturbation of order exactly n(m-2).  At a concrete nonzero rational t the
package verifies, with exact certificates, that g is not analytically
equivalent to any quasihomogeneous germ (the Saito test fails, tau < mu);
since f itself is quasihomogeneous, g is not equivalent to f, so f is not
(n(m-2)-1)-determined at that witness.  The same deformation direction works
for any regular form via its Hessian determinant, which spans the socle of
the Milnor algebra.

Admissibility: m >= 3, n >= 4 when m = 3, n >= 3 when m = 4, and m >= 5 when
n = 2 (so the deformation sits above degree m); these also force
n*m - 2*n - m != 0, which the verified Euler-combination identity

    (1/m) * sum_i x_i * dg/dx_i - g == t * (n(m-2)/m - 1) * x_1^(m-2)...x_n^(m-2)

relies on to isolate the deformation monomial inside the Jacobian ideal of g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisViolation, InadmissiblePair
from .invariants import milnor_number, saito_test
from .jetspace import certified_jacobian
from .polyring import (
    Poly,
    Scalar,
    hessian_det,
    homogeneous_degree,
    primitive_part,
)


@dataclass(frozen=True, slots=True)
class SharpnessReport:
    """Everything the non-equivalence argument checks at one witness (n, m, t)."""

    n: int
    m: int
    t: Fraction
    f: Poly
    g: Poly
    mu_f: int
    mu_g: int
    tau_g: int
    saito_g: bool
    obstruction_monomial_in_Jf: bool
    euler_identity_holds: bool
    euler_coefficient: Fraction
    conclusion: str


def fermat(n: int, m: int) -> Poly:
    """x_1^m + ... + x_n^m; regular for every n >= 2, m >= 2."""
    if n < 2 or m < 2:
        raise HypothesisViolation(f"Fermat form needs n, m >= 2, got ({n}, {m})")
    return Poly(n, {tuple(m if i == j else 0 for j in range(n)): 1 for i in range(n)})


def obstruction_monomial(n: int, m: int) -> Poly:
    """x_1^(m-2) * ... * x_n^(m-2): the socle generator of the Fermat Milnor algebra."""
    if n < 2 or m < 2:
        raise HypothesisViolation(f"obstruction monomial needs n, m >= 2, got ({n}, {m})")
    return Poly.monomial(n, (m - 2,) * n)


def check_admissible(n: int, m: int) -> None:
    """Raise InadmissiblePair unless (n, m) satisfies the sharpness hypotheses."""
    if n < 2:
        raise InadmissiblePair(f"need n >= 2, got n={n}")
    if m < 3:
        raise InadmissiblePair(f"need m >= 3, got m={m}")
    if m == 3 and n < 4:
        raise InadmissiblePair(f"need n >= 4 when m = 3, got n={n}")
    if m == 4 and n < 3:
        raise InadmissiblePair(f"need n >= 3 when m = 4, got n={n}")
    if n == 2 and m < 5:
        raise InadmissiblePair(
            f"need m >= 5 when n = 2 (deformation degree n(m-2) must exceed m), got m={m}"
        )
    if n * m - 2 * n - m == 0:
        raise InadmissiblePair(
            f"need n*m - 2n - m != 0, got 0 for (n, m) = ({n}, {m})"
        )


def deformed_fermat(n: int, m: int, t: Scalar) -> Poly:
    """Fermat form plus t times the obstruction monomial, for admissible (n, m)."""
    check_admissible(n, m)
    return fermat(n, m) + Fraction(t) * obstruction_monomial(n, m)


def hessian_deformation(f: Poly, t: Scalar) -> Poly:
    """f plus t times its Hessian determinant, normalized to primitive coefficients.

    For the Fermat form this recovers the obstruction-monomial deformation.
    Requires f regular homogeneous with (n, deg f) admissible as for
    `deformed_fermat`.
    """
    m = homogeneous_degree(f)
    if m is None:
        raise HypothesisViolation("Hessian deformation needs a homogeneous form")
    check_admissible(f.nvars, m)
    hess = primitive_part(hessian_det(f))
    if hess.is_zero:
        raise HypothesisViolation("the Hessian determinant vanishes; f is not regular")
    return f + Fraction(t) * hess


def euler_combination_defect(g: Poly, m: int) -> Poly:
    """(1/m) * sum_i x_i * dg/dx_i - g, expanded exactly."""
    acc = Poly.zero(g.nvars)
    for i in range(g.nvars):
        acc = acc + Poly.variable(g.nvars, i) * g.derivative(i)
    return acc * Fraction(1, m) - g


def sharpness_report(n: int, m: int, t: Scalar) -> SharpnessReport:
    """Run the whole non-equivalence argument at one rational witness t != 0."""
    t = Fraction(t)
    if not t:
        raise HypothesisViolation("the sharpness witness needs t != 0")
    f = fermat(n, m)
    g = deformed_fermat(n, m, t)
    mono = obstruction_monomial(n, m)

    mu_f = milnor_number(f).value
    verdict = saito_test(g)

    _, _, img_f = certified_jacobian(f)
    obstruction_in = img_f.contains(mono)

    coefficient = t * (Fraction(n * (m - 2), m) - 1)
    identity = euler_combination_defect(g, m) == coefficient * mono

    if verdict.is_quasihomogeneous_type:
        conclusion = (
            f"inconclusive at t = {t}: g passes the quasihomogeneity test "
            "at this witness"
        )
    else:
        conclusion = (
            "g is not analytically equivalent to any quasihomogeneous germ; "
            f"the Fermat form is not {n * (m - 2) - 1}-determined at this witness"
        )
    return SharpnessReport(
        n=n,
        m=m,
        t=t,
        f=f,
        g=g,
        mu_f=mu_f,
        mu_g=verdict.mu,
        tau_g=verdict.tau,
        saito_g=verdict.is_quasihomogeneous_type,
        obstruction_monomial_in_Jf=obstruction_in,
        euler_identity_holds=identity,
        euler_coefficient=coefficient,
        conclusion=conclusion,
    )
