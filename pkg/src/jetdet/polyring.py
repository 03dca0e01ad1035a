"""Exact multivariate polynomial arithmetic over the rationals.

A polynomial in n variables is a finite map from exponent vectors to nonzero
Fraction coefficients:

    x^3 + 1/2*x*y   ->   {(3, 0): Fraction(1), (1, 1): Fraction(1, 2)}

The zero polynomial has an empty term table.  All values are immutable and
every operation is a pure function, so instances can be shared freely.

Terms are kept in a single canonical order everywhere (equality, hashing,
printing, jet-space bases): ascending total degree, and within one degree the
order that puts x before y before z.  No algorithm depends on the order; it
only makes results deterministic.

Everything is exact: coefficients are arbitrary-precision rationals and there
is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import DimensionMismatch

# Exponent vector: element i is the degree of variable i in the monomial.
Mono = tuple[int, ...]

Scalar = Union[int, Fraction]


def mono_degree(mono: Mono) -> int:
    """Total degree of an exponent vector."""
    return sum(mono)


def mono_mul(a: Mono, b: Mono) -> Mono:
    """Product of two monomials (componentwise sum of exponents)."""
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True iff the monomial a divides the monomial b."""
    return all(x <= y for x, y in zip(a, b))


def grlex_key(mono: Mono):
    """Canonical sort key: ascending degree, x before y within a degree."""
    return (sum(mono), tuple(-e for e in mono))


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Mono]:
    """All exponent vectors of the given total degree, in canonical order."""
    if degree < 0:
        return
    if nvars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - e):
            yield (e, *rest)


def monomials_up_to_degree(nvars: int, bound: int) -> Iterator[Mono]:
    """All exponent vectors of total degree <= bound, in canonical order."""
    for d in range(bound + 1):
        yield from monomials_of_degree(nvars, d)


def monomials_of_weighted_degree(
    weights: Sequence[int], target: int
) -> list[Mono]:
    """All exponent vectors a with sum(w[i]*a[i]) == target, canonical order.

    Finite because all weights are positive.
    """
    out: list[Mono] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if i == len(weights) - 1:
            q, r = divmod(remaining, weights[i])
            if r == 0:
                out.append(prefix + (q,))
            return
        w = weights[i]
        for e in range(remaining // w, -1, -1):
            rec(i + 1, remaining - e * w, prefix + (e,))

    if target >= 0:
        rec(0, target, ())
    out.sort(key=grlex_key)
    return out


@dataclass(frozen=True, slots=True)
class WeightSystem:
    """Positive integer weights together with a target isobaric degree.

    A polynomial is quasihomogeneous of this type when every monomial
    x^a satisfies sum(weights[i] * a[i]) == degree.
    """

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self):
        if not self.weights:
            raise ValueError("weight system needs at least one weight")
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be >= 1, got {self.weights}")
        if self.degree < 1:
            raise ValueError(f"isobaric degree must be >= 1, got {self.degree}")

    @classmethod
    def unit(cls, nvars: int, degree: int) -> "WeightSystem":
        """Unit weights (1, ..., 1); quasihomogeneous == homogeneous."""
        return cls((1,) * nvars, degree)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def is_unit(self) -> bool:
        return all(w == 1 for w in self.weights)

    def weighted_degree(self, mono: Mono) -> int:
        if len(mono) != self.nvars:
            raise DimensionMismatch(
                f"monomial has {len(mono)} exponents, weight system has {self.nvars}"
            )
        return sum(w * e for w, e in zip(self.weights, mono))


class Poly:
    """Immutable multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_nvars", "_terms", "_sorted", "_hash")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Mono, Scalar] | Iterable[tuple[Mono, Scalar]] = (),
    ):
        if nvars < 1:
            raise ValueError(f"nvars must be >= 1, got {nvars}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        table: dict[Mono, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise DimensionMismatch(
                    f"exponent vector {mono} has length {len(mono)}, expected {nvars}"
                )
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = table.get(mono, _ZERO) + Fraction(coeff)
            if c:
                table[mono] = c
            elif mono in table:
                del table[mono]
        self._nvars = nvars
        self._terms = table
        self._sorted: tuple[tuple[Mono, Fraction], ...] | None = None
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for nvars={nvars}")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, mono: Mono, coeff: Scalar = 1) -> "Poly":
        return cls(nvars, {tuple(mono): Fraction(coeff)})

    # -- inspection --------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    def terms(self) -> tuple[tuple[Mono, Fraction], ...]:
        """Terms as (monomial, coefficient) pairs in canonical order."""
        if self._sorted is None:
            self._sorted = tuple(
                sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))
            )
        return self._sorted

    def monomials(self) -> tuple[Mono, ...]:
        return tuple(m for m, _ in self.terms())

    def coefficient(self, mono: Mono) -> Fraction:
        return self._terms.get(tuple(mono), _ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int | None:
        """Maximal total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(mono_degree(m) for m in self._terms)

    def low_degree(self) -> int | None:
        """Minimal total degree (the order), or None for the zero polynomial."""
        if not self._terms:
            return None
        return min(mono_degree(m) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self._nvars, _ZERO)

    # -- algebra -----------------------------------------------------------

    def _check_same_ring(self, other: "Poly") -> None:
        if self._nvars != other._nvars:
            raise DimensionMismatch(
                f"polynomials in {self._nvars} and {other._nvars} variables"
            )

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self._nvars, other)
        return None

    def __add__(self, other) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        self._check_same_ring(q)
        table = dict(self._terms)
        for mono, c in q._terms.items():
            s = table.get(mono, _ZERO) + c
            if s:
                table[mono] = s
            elif mono in table:
                del table[mono]
        return _raw(self._nvars, table)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return _raw(self._nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly.zero(self._nvars)
            return _raw(self._nvars, {m: c * v for m, v in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_ring(other)
        table: dict[Mono, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = mono_mul(ma, mb)
                s = table.get(mono, _ZERO) + ca * cb
                if s:
                    table[mono] = s
                elif mono in table:
                    del table[mono]
        return _raw(self._nvars, table)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial power must be a non-negative integer")
        result = Poly.constant(self._nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def derivative(self, index: int) -> "Poly":
        """Formal partial derivative with respect to variable `index` (0-based)."""
        if not 0 <= index < self._nvars:
            raise IndexError(
                f"variable index {index} out of range for nvars={self._nvars}"
            )
        table: dict[Mono, Fraction] = {}
        for mono, c in self._terms.items():
            e = mono[index]
            if e:
                lowered = mono[:index] + (e - 1,) + mono[index + 1 :]
                table[lowered] = c * e
        return _raw(self._nvars, table)

    def truncate(self, order: int) -> "Poly":
        """Drop every term of total degree > order (the jet of this order)."""
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        return _raw(
            self._nvars,
            {m: c for m, c in self._terms.items() if mono_degree(m) <= order},
        )

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self._nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, self.terms()))
        return self._hash

    def __repr__(self) -> str:
        head = ", ".join(
            f"{tuple(m)}: {c}" for m, c in self.terms()[:4]
        )
        more = ", ..." if len(self) > 4 else ""
        return f"Poly(nvars={self._nvars}, {{{head}{more}}})"


_ZERO = Fraction(0)


def _raw(nvars: int, table: dict[Mono, Fraction]) -> Poly:
    """Build a Poly from an already-normalized term table (no validation)."""
    p = Poly.__new__(Poly)
    p._nvars = nvars
    p._terms = table
    p._sorted = None
    p._hash = None
    return p


# -- degree data and differential operators ---------------------------------


def weighted_degree_range(
    p: Poly, weights: WeightSystem | None = None
) -> tuple[int, int] | None:
    """(min, max) weighted degree over the terms of p, or None if p == 0.

    With weights omitted the plain total degree is used.  p is
    quasihomogeneous of type (weights; d) iff this returns (d, d).
    """
    if weights is not None and weights.nvars != p.nvars:
        raise DimensionMismatch(
            f"polynomial in {p.nvars} variables, weight system in {weights.nvars}"
        )
    if p.is_zero:
        return None
    degs = [
        weights.weighted_degree(m) if weights is not None else mono_degree(m)
        for m in p._terms
    ]
    return (min(degs), max(degs))


def is_quasihomogeneous(p: Poly, weights: WeightSystem) -> bool:
    """True iff every term of p has weighted degree weights.degree."""
    rng = weighted_degree_range(p, weights)
    return rng is not None and rng == (weights.degree, weights.degree)


def homogeneous_degree(p: Poly) -> int | None:
    """The common total degree of all terms, or None if p is 0 or mixed."""
    rng = weighted_degree_range(p)
    if rng is None or rng[0] != rng[1]:
        return None
    return rng[0]


def euler_defect(p: Poly, weights: WeightSystem) -> Poly:
    """d*p - sum_i w_i * x_i * dp/dx_i.

    Zero exactly when p is quasihomogeneous of type (weights; d): each term
    x^a contributes (d - sum_i w_i*a_i) * x^a.
    """
    if weights.nvars != p.nvars:
        raise DimensionMismatch(
            f"polynomial in {p.nvars} variables, weight system in {weights.nvars}"
        )
    table: dict[Mono, Fraction] = {}
    for mono, c in p._terms.items():
        gap = weights.degree - weights.weighted_degree(mono)
        if gap:
            table[mono] = c * gap
    return _raw(p.nvars, table)


def jacobian(p: Poly) -> tuple[Poly, ...]:
    """All first partial derivatives of p, in variable order."""
    return tuple(p.derivative(i) for i in range(p.nvars))


def hessian_det(p: Poly) -> Poly:
    """Determinant of the matrix of second partials, expanded exactly.

    For a regular homogeneous p of degree m the result is homogeneous of
    degree n*(m-2) and spans the socle of the Milnor algebra.
    """
    n = p.nvars
    grad = jacobian(p)
    second = [[grad[i].derivative(j) for j in range(n)] for i in range(n)]
    memo: dict[tuple[int, tuple[int, ...]], Poly] = {}

    def minor(row: int, cols: tuple[int, ...]) -> Poly:
        if not cols:
            return Poly.constant(n, 1)
        key = (row, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = Poly.zero(n)
        for pos, col in enumerate(cols):
            entry = second[row][col]
            if entry.is_zero:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def permute_variables(p: Poly, perm: Sequence[int]) -> Poly:
    """Relabel variables: variable i of p becomes variable perm[i]."""
    if sorted(perm) != list(range(p.nvars)):
        raise ValueError(f"{perm} is not a permutation of 0..{p.nvars - 1}")
    table: dict[Mono, Fraction] = {}
    for mono, c in p._terms.items():
        new = [0] * p.nvars
        for i, e in enumerate(mono):
            new[perm[i]] = e
        table[tuple(new)] = c
    return _raw(p.nvars, table)


def scale_variables(p: Poly, scalars: Sequence[Scalar]) -> Poly:
    """Substitute x_i -> scalars[i] * x_i; all scalars must be nonzero."""
    if len(scalars) != p.nvars:
        raise DimensionMismatch(
            f"{len(scalars)} scalars for {p.nvars} variables"
        )
    lam = [Fraction(s) for s in scalars]
    if any(not s for s in lam):
        raise ValueError("variable scaling must be invertible (nonzero scalars)")
    table: dict[Mono, Fraction] = {}
    for mono, c in p._terms.items():
        factor = c
        for s, e in zip(lam, mono):
            factor *= s**e
        table[mono] = factor
    return _raw(p.nvars, table)


def linear_substitution(p: Poly, matrix: Sequence[Sequence[Scalar]]) -> Poly:
    """Substitute x_i -> sum_j matrix[i][j] * x_j."""
    n = p.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimensionMismatch(f"need an {n}x{n} matrix")
    images = [
        Poly(n, {tuple(1 if j == k else 0 for k in range(n)): Fraction(c)
                 for j, c in enumerate(row) if Fraction(c)})
        for row in matrix
    ]
    acc = Poly.zero(n)
    for mono, coeff in p._terms.items():
        term = Poly.constant(n, coeff)
        for img, e in zip(images, mono):
            if e:
                term = term * img**e
        acc = acc + term
    return acc


def primitive_part(p: Poly) -> Poly:
    """p divided by its content, signed so the canonical leading term is positive.

    The result has coprime integer coefficients; primitive_part(0) == 0.
    """
    if p.is_zero:
        return p
    from math import gcd, lcm

    denom = lcm(*(c.denominator for c in p._terms.values()))
    numer = gcd(*(abs(c.numerator) for c in p._terms.values()))
    factor = Fraction(denom, numer)
    if p.terms()[-1][1] < 0:
        factor = -factor
    return p * factor
