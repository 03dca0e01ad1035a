"""Determinacy bounds and machine-checked sufficiency certificates.

The headline quantity: for a regular homogeneous form of degree m in n
variables, perturbations of order at least

    D(n, m) = 3 if m == 2;  4 if (n, m) == (2, 3);  n(m-2) + 1 otherwise

never change the analytic type of the germ, and below that order they can.

Certificates issued here verify *sufficient* conditions for k-determinacy:

  fdt        m^(k+1) inside m^2 * J(f)            (any f in the maximal ideal)
  corollary  m^(k+1) inside J(f)                  (homogeneous f, k >= m)
  main       k = n(m-2), via the corollary check  (regular homogeneous, m >= 3)
  weighted   k = n*d - 2*sum(w), graded vanishing above the socle
  tougeron   k = mu + 1

A verdict with certified=False never asserts that f fails to be k-determined;
it only reports that the sufficient condition could not be verified.  Actual
non-determinacy statements live in the `sharpness` module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, HypothesisViolation, NotRegular
from .invariants import milnor_number, weighted_vanishing_above
from .jetspace import (
    build_jet_space,
    certify_power_containment,
    contains_monomials,
    graded_piece_contains_degree,
    ideal_image,
)
from .polyring import (
    Poly,
    WeightSystem,
    homogeneous_degree,
    is_quasihomogeneous,
    jacobian,
    monomials_of_degree,
)

CRITERIA = ("fdt", "corollary", "main", "weighted", "tougeron")


@dataclass(frozen=True, slots=True)
class DeterminacyVerdict:
    """A k-determinacy assertion together with how it was certified.

    `sufficient_only` is always True: a failed certificate is not a proof of
    non-determinacy.
    """

    k: int
    criterion: str
    certified: bool
    certificate_order: int
    sufficient_only: bool = True
    note: str = ""


def d_bound_case(n: int, m: int) -> tuple[int, str]:
    """The determinacy threshold D(n, m) and which case produced it."""
    if n < 2 or m < 2:
        raise HypothesisViolation(f"D(n, m) needs n, m >= 2, got ({n}, {m})")
    if m == 2:
        return 3, "m=2"
    if (n, m) == (2, 3):
        return 4, "n=2, m=3"
    return n * (m - 2) + 1, "n(m-2)+1, otherwise"


def d_bound(n: int, m: int) -> int:
    """Least d such that all order->=d perturbations of every regular degree-m
    form in n variables preserve the germ."""
    return d_bound_case(n, m)[0]


def certify_k_determined(f: Poly, k: int, criterion: str = "fdt") -> DeterminacyVerdict:
    """Check a sufficient containment for k-determinacy at jet order k+1.

    criterion="fdt": every monomial of degree k+1 must lie in m^2 * J(f).
    criterion="corollary": f homogeneous of degree m with k >= m (rejected
    otherwise), and the containment asked of J(f) itself.

    A True containment at jet order k+1 certifies the untruncated statement
    (Nakayama); False means this sufficient condition fails, nothing more.
    """
    if criterion not in ("fdt", "corollary"):
        raise ValueError(f"criterion must be 'fdt' or 'corollary', got {criterion!r}")
    if k < 1:
        raise HypothesisViolation(f"determinacy order must be >= 1, got {k}")
    if f.is_zero or f.constant_term():
        raise HypothesisViolation("f must be a nonzero element of the maximal ideal")
    floor = 2 if criterion == "fdt" else 0
    if criterion == "corollary":
        m = homogeneous_degree(f)
        if m is None:
            raise HypothesisViolation("the corollary criterion needs homogeneous f")
        if k < m:
            raise HypothesisViolation(
                f"the corollary criterion needs k >= deg f ({k} < {m})"
            )
    gens = [g for g in jacobian(f) if not g.is_zero]
    if all(homogeneous_degree(g) is not None for g in gens):
        ok, _ = graded_piece_contains_degree(gens, f.nvars, k + 1, floor)
    else:
        js = build_jet_space(f.nvars, k + 1)
        img = ideal_image(gens, js, multiplier_floor=floor)
        ok, _ = contains_monomials(img, monomials_of_degree(f.nvars, k + 1))
    return DeterminacyVerdict(k, criterion, ok, k + 1)


def is_regular(f: Poly, weights: WeightSystem | None = None) -> bool:
    """Do the partials of a graded form cut out the origin only?

    Equivalent formulations: the projective hypersurface is smooth (unit
    weights); the partials form a regular sequence; the quotient by the
    Jacobian ideal is finite-dimensional.  Decided by certifying that the
    power of the maximal ideal just above the socle degree lies in J(f): for
    a regular form the quotient vanishes there, and for a non-regular form no
    power of the maximal ideal is contained at all.
    """
    weights = _resolve_weights(f, weights)
    socle = _socle_degree(weights)
    return certify_power_containment(f, max(socle + 1, 1))


def main_bound(f: Poly, weights: WeightSystem | None = None) -> DeterminacyVerdict:
    """The graded determinacy bound k = n(m-2), resp. k = n*d - 2*sum(w).

    Requires a certified-regular graded form (m >= 3 for unit weights; the
    plane-cubic case n=2, m=3 is routed through the fdt check at k=3).  The
    certificate must succeed for every regular input; a failure would mean an
    implementation fault and raises instead of returning quietly.
    """
    weights = _resolve_weights(f, weights)
    n = f.nvars
    if weights.is_unit:
        m = weights.degree
        if m < 3:
            raise HypothesisViolation(
                f"the graded bound needs degree >= 3, got {m}"
            )
        if not is_regular(f, weights):
            raise NotRegular("f is not regular; the graded bound does not apply")
        if (n, m) == (2, 3):
            verdict = certify_k_determined(f, 3, "fdt")
            if not verdict.certified:
                raise ConsistencyError(
                    "fdt certificate failed for a regular plane cubic"
                )
            return DeterminacyVerdict(
                3, "fdt", True, verdict.certificate_order, note="plane cubic case"
            )
        k = n * (m - 2)
        verdict = certify_k_determined(f, k, "corollary")
        if not verdict.certified:
            raise ConsistencyError(
                f"corollary certificate failed at k={k} for a certified-regular form"
            )
        return DeterminacyVerdict(k, "main", True, verdict.certificate_order)
    if not is_quasihomogeneous(f, weights):
        raise HypothesisViolation(
            f"f is not isobaric of type ({weights.weights}; {weights.degree})"
        )
    k = _socle_degree(weights)
    if k < 1:
        raise HypothesisViolation(
            f"degenerate weighted bound k={k} for type ({weights.weights}; {weights.degree})"
        )
    if not is_regular(f, weights):
        raise NotRegular("f is not regular; the weighted bound does not apply")
    if not weighted_vanishing_above(f, weights, k):
        raise ConsistencyError(
            f"weighted vanishing above degree {k} failed for a certified-regular form"
        )
    return DeterminacyVerdict(
        k,
        "weighted",
        True,
        k + 1,
        note="k counts weighted degree: perturbations of weighted order > k",
    )


def tougeron_bound(f: Poly) -> DeterminacyVerdict:
    """k = mu + 1: every isolated singularity is (mu+1)-determined."""
    mu = milnor_number(f)
    return DeterminacyVerdict(mu.value + 1, "tougeron", True, mu.order)


def _resolve_weights(f: Poly, weights: WeightSystem | None) -> WeightSystem:
    if weights is not None:
        if not is_quasihomogeneous(f, weights):
            raise HypothesisViolation(
                f"f is not isobaric of type ({weights.weights}; {weights.degree})"
            )
        return weights
    m = homogeneous_degree(f)
    if m is None or m < 1:
        raise HypothesisViolation(
            "input is not homogeneous; supply the weight system explicitly"
        )
    return WeightSystem.unit(f.nvars, m)


def _socle_degree(ws: WeightSystem) -> int:
    """n*d - 2*sum(w); for unit weights n*(m-2)."""
    return ws.nvars * ws.degree - 2 * sum(ws.weights)
