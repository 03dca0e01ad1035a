"""Milnor and Tyurina numbers, Hilbert functions, socle data, Saito's test.

Every number here is certified: the Jacobian ideal is first shown to contain
a power of the maximal ideal at some jet order (see `jetspace`), and all
dimensions and membership questions are then answered at that order, where
they are conclusive for the untruncated local ring.

For graded inputs the Hilbert function of the quotient by the Jacobian ideal
is computed twice: empirically, from per-degree codimensions, and in closed
form from the Hilbert series of a complete intersection,

    product (1 - t^(d - w_i)) / (1 - t^(w_i)),

which for unit weights is (1 + t + ... + t^(m-2))^n.  The two must agree for
regular forms; disagreement is reported, never papered over.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import exactla
from .combinatorics import binom, n_dim
from .errors import ConsistencyError, HypothesisViolation, NotRegular
from .jetspace import certified_jacobian, ideal_image, jet_membership
from .polyring import (
    Poly,
    WeightSystem,
    hessian_det,
    homogeneous_degree,
    is_quasihomogeneous,
    jacobian,
    mono_degree,
    monomials_of_weighted_degree,
)


@dataclass(frozen=True, slots=True)
class CertifiedValue:
    """An exact integer invariant plus the jet order that certified it."""

    value: int
    order: int


@dataclass(frozen=True, slots=True)
class HilbertFunction:
    """Graded dimensions of the Milnor algebra, indexed by (weighted) degree."""

    values: tuple[int, ...]
    socle_degree: int  # largest degree with a nonzero value; -1 for the zero algebra
    total: int

    @classmethod
    def from_values(cls, values) -> "HilbertFunction":
        vals = list(values)
        while vals and vals[-1] == 0:
            vals.pop()
        return cls(tuple(vals), len(vals) - 1, sum(vals))


@dataclass(frozen=True, slots=True)
class HilbertResult:
    """Empirical Hilbert function next to its closed-form prediction."""

    empirical: HilbertFunction
    predicted: tuple[int, ...]
    weights: WeightSystem

    @property
    def matches(self) -> bool:
        return self.empirical.values == self.predicted


@dataclass(frozen=True, slots=True)
class SocleReport:
    socle_degree: int
    socle_dimension: int
    # Hess(f) is outside the Jacobian ideal while every x_i * Hess(f) is inside.
    hessian_in_socle: bool


@dataclass(frozen=True, slots=True)
class SaitoVerdict:
    """Outcome of the quasihomogeneity test.

    The two equivalent criteria (f in its Jacobian ideal; mu == tau) are both
    evaluated and cross-checked on every run.
    """

    is_quasihomogeneous_type: bool
    mu: int
    tau: int
    order: int
    membership_witness: tuple[Poly, ...] | None


def milnor_number(f: Poly, start_order: int | None = None) -> CertifiedValue:
    """dim of the local ring modulo the Jacobian ideal, at a certified order."""
    order, js, img = certified_jacobian(f, start_order)
    return CertifiedValue(js.dim - img.rank(), order)


@lru_cache(maxsize=256)
def tyurina_number(f: Poly, start_order: int | None = None) -> CertifiedValue:
    """dim of the local ring modulo (f) + J(f), at the same certified order."""
    order, js, img = certified_jacobian(f, start_order)
    extended = ideal_image(jacobian(f) + (f,), js)
    tau = js.dim - extended.rank()
    return CertifiedValue(tau, order)


def saito_test(f: Poly, start_order: int | None = None) -> SaitoVerdict:
    """Is the germ of f analytically equivalent to a quasihomogeneous one?

    True iff f lies in its own Jacobian ideal, equivalently iff mu == tau;
    both routes are computed and must agree.  Membership is decided at a
    certified jet order, where it is conclusive even for terms the jet cuts
    off (the tail lies in a power of the maximal ideal already inside J(f)).
    """
    order, js, img = certified_jacobian(f, start_order)
    mu = js.dim - img.rank()
    tau = tyurina_number(f, start_order).value
    contained = img.contains(f)
    if contained != (mu == tau):
        raise ConsistencyError(
            f"membership ({contained}) and mu == tau ({mu} == {tau}) disagree"
        )
    witness = None
    if contained:
        _, witness = jet_membership(f, img, witness=True)
    return SaitoVerdict(contained, mu, tau, order, witness)


# -- Hilbert functions -------------------------------------------------------


def koszul_hilbert_value(n: int, m: int, d: int) -> int:
    """Closed-form graded dimension sum_h (-1)^h C(n,h) N(n, d - h(m-1)).

    Dimension in degree d of the quotient by an ideal generated by a regular
    sequence of n forms of degree m-1 in n variables.
    """
    return sum(
        (-1) ** h * binom(n, h) * n_dim(n, d - h * (m - 1)) for h in range(n + 1)
    )


def predicted_hilbert(ws: WeightSystem) -> tuple[int, ...]:
    """Coefficients of product_i (1 - t^(d - w_i)) / (1 - t^(w_i)).

    The Hilbert series of the quotient by a regular sequence of the partials
    of a form of isobaric type (w; d); a polynomial with socle degree
    n*d - 2*sum(w).  Raises NotRegular when the division is not exact (the
    weight system cannot belong to a regular form).
    """
    d = ws.degree
    if any(d < w for w in ws.weights):
        raise HypothesisViolation(
            f"isobaric degree {d} below a weight in {ws.weights}"
        )
    if any(d == w for w in ws.weights):
        # Some partial is a unit; the quotient algebra is zero.
        return ()
    num = [1]
    for w in ws.weights:
        num = _mul_one_minus_power(num, d - w)
    den = [1]
    for w in ws.weights:
        den = _mul_one_minus_power(den, w)
    quotient = _poly_div_exact(num, den)
    if quotient is None:
        raise NotRegular(
            f"weighted Hilbert series for type {ws.weights}; {d} is not a polynomial"
        )
    while quotient and quotient[-1] == 0:
        quotient.pop()
    return tuple(quotient)


def _mul_one_minus_power(coeffs: list[int], k: int) -> list[int]:
    """Multiply a coefficient list by (1 - t^k)."""
    out = coeffs + [0] * k
    for i, c in enumerate(coeffs):
        out[i + k] -= c
    return out


def _poly_div_exact(num: list[int], den: list[int]) -> list[int] | None:
    """Exact univariate polynomial division; None when a remainder is left."""
    num = list(num)
    while den and den[-1] == 0:
        den.pop()
    lead = den[-1]
    out = [0] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        if r:
            return None
        if q:
            out[i] = q
            for j, c in enumerate(den):
                num[i + j] -= q * c
    return None if any(num) else out


def hilbert_function(f: Poly, weights: WeightSystem | None = None) -> HilbertResult:
    """Empirical graded dimensions of the Milnor algebra, plus the prediction.

    With no weight system the input must be homogeneous (unit weights are
    inferred); otherwise it must be isobaric for the given weights.  Values
    are indexed by weighted degree.  For the weighted route, vanishing above
    the expected socle degree is verified on a window of graded pieces, which
    by dividing monomials propagates to all higher degrees; failure there
    means the form is not regular and is reported as such.
    """
    if weights is None:
        m = homogeneous_degree(f)
        if m is None:
            raise HypothesisViolation(
                "input is not homogeneous; supply the weight system explicitly"
            )
        if m < 1:
            raise HypothesisViolation("input is a constant")
        weights = WeightSystem.unit(f.nvars, m)
    else:
        if weights.nvars != f.nvars:
            raise HypothesisViolation(
                f"weight system in {weights.nvars} variables, f in {f.nvars}"
            )
        if not is_quasihomogeneous(f, weights):
            raise HypothesisViolation(
                f"input is not isobaric of type ({weights.weights}; {weights.degree})"
            )
    predicted = predicted_hilbert(weights)
    if weights.is_unit:
        empirical = _unit_hilbert_values(f)
    else:
        empirical = _weighted_hilbert_values(f, weights)
    result = HilbertResult(HilbertFunction.from_values(empirical), predicted, weights)
    if weights.is_unit and not result.matches:
        # The unit route only gets here once mu is certified, i.e. f regular;
        # the closed form is a theorem there.
        raise ConsistencyError(
            f"certified Hilbert function {result.empirical.values} differs from "
            f"closed form {predicted}"
        )
    if not weights.is_unit and not result.matches:
        raise NotRegular(
            f"weighted Hilbert function {result.empirical.values} differs from "
            f"closed form {predicted}; the partials are not a regular sequence"
        )
    return result


def _unit_hilbert_values(f: Poly) -> list[int]:
    """Per-degree codimension of the Jacobian image, read off the certified echelon."""
    order, js, img = certified_jacobian(f)
    ech = img.span_matrix.echelon()
    rank_by_degree = Counter(mono_degree(js.basis[r]) for r in ech.pivots)
    values = [
        n_dim(f.nvars, d) - rank_by_degree.get(d, 0) for d in range(order + 1)
    ]
    mu = js.dim - img.rank()
    if sum(values) != mu:
        raise ConsistencyError(
            f"per-degree codimensions sum to {sum(values)}, Milnor number is {mu}"
        )
    return values


def _weighted_block(f: Poly, ws: WeightSystem, wdeg: int) -> tuple[int, exactla.RatMatrix]:
    """Rows and matrix of the weighted-degree piece of the Jacobian ideal."""
    rows = monomials_of_weighted_degree(ws.weights, wdeg)
    index = {m: i for i, m in enumerate(rows)}
    columns: list[exactla.Vec] = []
    for i, g in enumerate(jacobian(f)):
        if g.is_zero:
            continue
        gen_wdeg = ws.degree - ws.weights[i]
        for alpha in monomials_of_weighted_degree(ws.weights, wdeg - gen_wdeg):
            col: exactla.Vec = {}
            for mono, c in g.terms():
                merged = tuple(a + b for a, b in zip(alpha, mono))
                col[index[merged]] = col.get(index[merged], Fraction(0)) + c
            columns.append({k: v for k, v in col.items() if v})
    return len(rows), exactla.RatMatrix(len(rows), columns)


def _weighted_hilbert_values(f: Poly, ws: WeightSystem) -> list[int]:
    """Per-weighted-degree codimensions, with vanishing above the socle verified."""
    socle = ws.nvars * ws.degree - 2 * sum(ws.weights)
    values = []
    for e in range(max(socle, -1) + 1):
        nrows, block = _weighted_block(f, ws, e)
        values.append(nrows - exactla.rank(block))
    for e in range(socle + 1, socle + max(ws.weights) + 1):
        nrows, block = _weighted_block(f, ws, e)
        if exactla.rank(block) != nrows:
            raise NotRegular(
                f"graded piece at weighted degree {e} does not vanish; "
                "the partials are not a regular sequence"
            )
    return values


def weighted_vanishing_above(f: Poly, ws: WeightSystem, bound: int) -> bool:
    """Certificate that every graded piece of weighted degree > bound vanishes.

    Checks the window (bound, bound + max weight]; every higher monomial maps
    into the window by repeatedly dividing off variables, so membership there
    propagates upward through the ideal.
    """
    for e in range(bound + 1, bound + max(ws.weights) + 1):
        nrows, block = _weighted_block(f, ws, e)
        if exactla.rank(block) != nrows:
            return False
    return True


def socle_report(f: Poly, weights: WeightSystem | None = None) -> SocleReport:
    """Socle degree and dimension, and whether the Hessian generates the socle."""
    hr = hilbert_function(f, weights)
    socle_degree = hr.empirical.socle_degree
    socle_dimension = (
        hr.empirical.values[socle_degree] if socle_degree >= 0 else 0
    )
    hess = hessian_det(f)
    if hess.is_zero:
        return SocleReport(socle_degree, socle_dimension, False)
    _, _, img = certified_jacobian(f)
    hess_outside = not img.contains(hess)
    multiples_inside = all(
        img.contains(Poly.variable(f.nvars, i) * hess) for i in range(f.nvars)
    )
    return SocleReport(socle_degree, socle_dimension, hess_outside and multiples_inside)


# -- weight detection ---------------------------------------------------------


def detect_weight_system(f: Poly) -> WeightSystem | None:
    """Search for positive integer weights making f isobaric.

    Solves the linear system forcing all exponent vectors of f onto one
    weighted degree and looks for a strictly positive kernel vector (trying
    sign combinations of a kernel basis).  Returns a primitive weight system,
    or None when f is constant, zero, or admits no positive solution found by
    the search.
    """
    monos = f.monomials()
    if not monos or f.low_degree() == 0:
        return None
    n = f.nvars
    if len(monos) == 1:
        return WeightSystem.unit(n, mono_degree(monos[0]))
    base = monos[0]
    diffs = [
        tuple(a - b for a, b in zip(mono, base)) for mono in monos[1:]
    ]
    columns = [
        {i: Fraction(diffs[i][j]) for i in range(len(diffs)) if diffs[i][j]}
        for j in range(n)
    ]
    matrix = exactla.RatMatrix(len(diffs), columns)
    basis = exactla.kernel_basis(matrix)
    if not basis:
        return None
    dense = [[vec.get(j, Fraction(0)) for j in range(n)] for vec in basis]
    for signs in product((1, -1), repeat=len(dense)):
        cand = [
            sum(s * vec[j] for s, vec in zip(signs, dense)) for j in range(n)
        ]
        if all(c > 0 for c in cand):
            break
    else:
        return None
    from math import gcd, lcm

    scale = lcm(*(c.denominator for c in cand))
    ints = [int(c * scale) for c in cand]
    g = gcd(*ints)
    weights = tuple(v // g for v in ints)
    degree = sum(w * e for w, e in zip(weights, base))
    ws = WeightSystem(weights, degree)
    if not is_quasihomogeneous(f, ws):
        return None
    return ws
