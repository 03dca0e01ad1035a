"""Truncated local rings as finite-dimensional vector spaces.

A `JetSpace` of order N in n variables is the quotient of the local ring by
the (N+1)-st power of the maximal ideal, concretely: the span of all
monomials of total degree <= N, in the canonical monomial order.

An `IdealImage` is the subspace spanned by the images of monomial multiples
of a list of generators (optionally only multiples by monomials of degree at
least a floor c, which realizes m^c * (generators)).  Membership in that
subspace, and containment of whole powers of the maximal ideal, are exact
linear-algebra questions answered by the `exactla` engine.

The upgrade from truncated statements to honest ideal statements is
Nakayama's lemma: verifying that every degree-N monomial lies in the ideal's
image at jet order N shows m^N is contained in the ideal plus m^(N+1), and
hence in the ideal itself.  That single trick replaces standard-basis
machinery for every question this package asks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import exactla
from .errors import (
    DimensionMismatch,
    HypothesisViolation,
    NotCertified,
    ResourceCapExceeded,
)
from .polyring import (
    Mono,
    Poly,
    grlex_key,
    homogeneous_degree,
    jacobian,
    mono_degree,
    mono_mul,
    monomials_of_degree,
    monomials_up_to_degree,
)

# Largest number of basis monomials a jet space may have by default.
DEFAULT_BASIS_CAP = 200_000

# Certification ladder: starting order guess is doubled this many times.
DEFAULT_DOUBLINGS = 4


class JetSpace:
    """The monomials of degree <= order as an indexed vector-space basis."""

    __slots__ = ("nvars", "order", "basis", "index")

    def __init__(self, nvars: int, order: int, basis: tuple[Mono, ...]):
        self.nvars = nvars
        self.order = order
        self.basis = basis
        self.index = {mono: i for i, mono in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, p: Poly) -> exactla.Vec:
        """Coordinates of the order-jet of p (terms above the order are cut)."""
        if p.nvars != self.nvars:
            raise DimensionMismatch(
                f"polynomial in {p.nvars} variables, jet space in {self.nvars}"
            )
        return {
            self.index[m]: c
            for m, c in p.terms()
            if mono_degree(m) <= self.order
        }

    def poly(self, vec: exactla.Vec) -> Poly:
        """Inverse of coords on this space."""
        return Poly(self.nvars, {self.basis[i]: c for i, c in vec.items()})

    def __repr__(self) -> str:
        return f"JetSpace(nvars={self.nvars}, order={self.order}, dim={self.dim})"


@lru_cache(maxsize=None)
def _build(nvars: int, order: int) -> JetSpace:
    basis = tuple(monomials_up_to_degree(nvars, order))
    return JetSpace(nvars, order, basis)


def build_jet_space(
    nvars: int, order: int, basis_cap: int = DEFAULT_BASIS_CAP
) -> JetSpace:
    """Jet space of the given order; instances are cached per (nvars, order)."""
    if nvars < 1:
        raise ValueError(f"nvars must be >= 1, got {nvars}")
    if order < 0:
        raise ValueError(f"jet order must be >= 0, got {order}")
    size = math.comb(order + nvars, nvars)
    if size > basis_cap:
        raise ResourceCapExceeded(
            f"jet space of order {order} in {nvars} variables needs {size} "
            f"basis monomials (cap {basis_cap})"
        )
    return _build(nvars, order)


class IdealImage:
    """Image of m^floor * (generators) inside a jet space.

    Columns of `span_matrix` are the jet coordinates of one product
    (multiplier monomial) * (generator); `labels[j]` records which.
    """

    __slots__ = ("ambient", "generators", "multiplier_floor", "span_matrix", "labels")

    def __init__(
        self,
        ambient: JetSpace,
        generators: tuple[Poly, ...],
        multiplier_floor: int,
        span_matrix: exactla.RatMatrix,
        labels: tuple[tuple[Mono, int], ...],
    ):
        self.ambient = ambient
        self.generators = generators
        self.multiplier_floor = multiplier_floor
        self.span_matrix = span_matrix
        self.labels = labels

    def rank(self) -> int:
        """Dimension of the image (exact)."""
        return self.span_matrix.echelon().rank

    def codim(self) -> int:
        return self.ambient.dim - self.rank()

    def contains(self, p: Poly) -> bool:
        """Is the jet of p in the image?"""
        return self.span_matrix.echelon().contains(self.ambient.coords(p))

    def pivot_row_monomials(self) -> tuple[Mono, ...]:
        """Basis monomials carrying the pivots of the image's echelon."""
        ech = self.span_matrix.echelon()
        return tuple(self.ambient.basis[r] for r in ech.pivots)

    def __repr__(self) -> str:
        return (
            f"IdealImage(order={self.ambient.order}, generators={len(self.generators)}, "
            f"floor={self.multiplier_floor}, columns={self.span_matrix.cols})"
        )


def ideal_image(
    generators: Sequence[Poly], js: JetSpace, multiplier_floor: int = 0
) -> IdealImage:
    """Span of all (monomial of degree in [floor, N]) * generator jets.

    Multipliers of degree up to the jet order are enough: anything higher
    lands in m^(N+1) and truncates away.  Multipliers whose product with a
    generator cannot reach back below the truncation are skipped outright.
    """
    if multiplier_floor < 0:
        raise ValueError("multiplier floor must be >= 0")
    n, order = js.nvars, js.order
    for g in generators:
        if g.nvars != n:
            raise DimensionMismatch(
                f"generator in {g.nvars} variables, jet space in {n}"
            )
    entries: list[tuple[int, int, Mono]] = []
    for gi, g in enumerate(generators):
        lo = g.low_degree()
        if lo is None:
            continue
        for alpha in monomials_up_to_degree(n, order - lo):
            if mono_degree(alpha) >= multiplier_floor:
                entries.append((mono_degree(alpha) + lo, gi, alpha))
    entries.sort(key=lambda t: (t[0], t[1], grlex_key(t[2])))
    columns: list[exactla.Vec] = []
    labels: list[tuple[Mono, int]] = []
    for _, gi, alpha in entries:
        adeg = mono_degree(alpha)
        col: exactla.Vec = {}
        for mono, c in generators[gi].terms():
            if adeg + mono_degree(mono) <= order:
                col[js.index[mono_mul(alpha, mono)]] = c
        columns.append(col)
        labels.append((alpha, gi))
    matrix = exactla.RatMatrix(js.dim, columns)
    return IdealImage(js, tuple(generators), multiplier_floor, matrix, tuple(labels))


def jet_membership(
    g: Poly, img: IdealImage, witness: bool = False
) -> tuple[bool, tuple[Poly, ...] | None]:
    """Does the jet of g lie in the image?

    With witness=True a positive answer also returns one multiplier
    polynomial per generator, with sum_i w_i * gen_i congruent to g modulo
    m^(order+1); the expansion is re-verified exactly before returning.
    """
    js = img.ambient
    vec = js.coords(g)
    if img.span_matrix.echelon().reduce(vec):
        return False, None
    if not witness:
        return True, None
    ok, combo = exactla.in_span(vec, img.span_matrix)
    if not ok or combo is None:
        raise AssertionError("membership flipped between passes; this is a bug")
    parts: list[dict[Mono, Fraction]] = [dict() for _ in img.generators]
    for j, coeff in combo.items():
        alpha, gi = img.labels[j]
        parts[gi][alpha] = parts[gi].get(alpha, Fraction(0)) + coeff
    polys = tuple(Poly(js.nvars, part) for part in parts)
    expansion = Poly.zero(js.nvars)
    for w, gen in zip(polys, img.generators):
        expansion = expansion + w * gen
    if expansion.truncate(js.order) != g.truncate(js.order):
        raise AssertionError("witness expansion failed verification; this is a bug")
    return True, polys


def contains_monomials(
    img: IdealImage, monos: Iterable[Mono]
) -> tuple[bool, Mono | None]:
    """Are all given monomials in the image?  Else also the first failure."""
    idx = img.ambient.index
    ech = img.span_matrix.echelon()
    one = Fraction(1)
    for mono in monos:
        if ech.reduce({idx[mono]: one}):
            return False, mono
    return True, None


def graded_piece_contains_degree(
    generators: Sequence[Poly],
    nvars: int,
    target_degree: int,
    multiplier_floor: int = 0,
) -> tuple[bool, Mono | None]:
    """For homogeneous generators: is every degree-d monomial in the ideal piece?

    Since a homogeneous multiplier times a homogeneous generator is pure of
    one degree, the degree-d piece of m^floor * (generators) is spanned by
    the products landing exactly in degree d, and the question reduces to
    full row rank of that single block.  Columns are streamed, never stored:
    a modular elimination (sound as a full-rank certificate) runs first with
    early exit, and the exact elimination decides everything it leaves open.
    """
    rows = list(monomials_of_degree(nvars, target_degree))
    index = {m: i for i, m in enumerate(rows)}
    homogeneous: list[Poly] = []
    for g in generators:
        if g.is_zero:
            continue
        if homogeneous_degree(g) is None:
            raise HypothesisViolation("graded piece check needs homogeneous generators")
        homogeneous.append(g)

    def columns():
        for g in homogeneous:
            mdeg = target_degree - homogeneous_degree(g)
            if mdeg < multiplier_floor or mdeg < 0:
                continue
            for alpha in monomials_of_degree(nvars, mdeg):
                yield {index[mono_mul(alpha, mono)]: c for mono, c in g.terms()}

    if exactla.streaming_full_row_rank(columns, len(rows)):
        return True, None
    ech = exactla.Echelon()
    for col in columns():
        ech.add_column(col)
        if ech.rank == len(rows):
            return True, None
    one = Fraction(1)
    for mono in rows:
        if ech.reduce({index[mono]: one}):
            return False, mono
    raise AssertionError("rank below row count but no unit vector missing")


def certify_power_containment(
    f: Poly, order: int, basis_cap: int = DEFAULT_BASIS_CAP
) -> bool:
    """Certificate that m^order is contained in the Jacobian ideal of f.

    True is exact for the untruncated ideals (checked at jet order `order`,
    upgraded by Nakayama); False exactly means the truncated containment
    fails, which refutes the untruncated one as well.

    A polynomial of order >= 2 with an identically-zero partial derivative is
    a cylinder; no power of the maximal ideal ever enters its Jacobian ideal,
    so the answer is False without building anything.
    """
    if order < 1:
        raise ValueError(f"power must be >= 1, got {order}")
    if f.is_zero:
        return False
    n = f.nvars
    gens = jacobian(f)
    lo = f.low_degree()
    if lo is not None and lo >= 2 and any(g.is_zero for g in gens):
        return False
    nonzero = [g for g in gens if not g.is_zero]
    if all(homogeneous_degree(g) is not None for g in nonzero):
        ok, _ = graded_piece_contains_degree(nonzero, n, order)
        return ok
    js = build_jet_space(n, order, basis_cap)
    img = ideal_image(nonzero, js)
    ok, _ = contains_monomials(img, monomials_of_degree(n, order))
    return ok


def certified_jacobian_order(
    f: Poly,
    start: int | None = None,
    doublings: int = DEFAULT_DOUBLINGS,
    basis_cap: int = DEFAULT_BASIS_CAP,
) -> tuple[int, JetSpace, IdealImage]:
    """Find a jet order N with m^N certified inside J(f), plus the image at N.

    Starts at max(n*(ord(f)-2)+1, deg(f)+1) unless told otherwise and doubles
    up to `doublings` times.  Raises NotCertified when no tried order works
    (non-isolated singularity, or caps too small to decide).
    """
    if f.is_zero:
        raise HypothesisViolation("the zero polynomial has no isolated singularity")
    if f.constant_term():
        raise HypothesisViolation(
            "expected a polynomial in the maximal ideal (zero constant term)"
        )
    n = f.nvars
    gens = jacobian(f)
    lo = f.low_degree()
    if lo >= 2 and any(g.is_zero for g in gens):
        dead = next(i for i, g in enumerate(gens) if g.is_zero)
        raise NotCertified(
            f"partial derivative {dead} vanishes identically; "
            "the singularity is non-isolated"
        )
    order = start if start is not None else max(n * (lo - 2) + 1, f.degree() + 1, 1)
    tried: list[int] = []
    for _ in range(doublings + 1):
        js = build_jet_space(n, order, basis_cap)
        img = ideal_image(gens, js)
        ok, _ = contains_monomials(img, monomials_of_degree(n, order))
        if ok:
            return order, js, img
        tried.append(order)
        order *= 2
    raise NotCertified(
        f"no jet order in {tried} certifies containment of a power of the "
        "maximal ideal; non-isolated or uncertified within the cap"
    )


@lru_cache(maxsize=256)
def certified_jacobian(
    f: Poly, start: int | None = None
) -> tuple[int, JetSpace, IdealImage]:
    """Cached certified_jacobian_order; `start` overrides the first rung."""
    return certified_jacobian_order(f, start=start)
