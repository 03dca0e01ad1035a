"""Shared helpers: parsing shortcut, reference corpus, random form generators."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from jetdet import deformed_fermat, fermat, is_regular
from jetdet.frontend import parse_poly
from jetdet.polyring import Poly, WeightSystem, monomials_of_degree


def P(text: str, variables=None, nvars=None) -> Poly:
    return parse_poly(text, variables=variables, nvars=nvars)


# Quasihomogeneous inputs (saito test must come back True).  Weighted entries
# carry the weight system they are isobaric for.
QUASIHOMOGENEOUS_CASES: list[tuple[str, WeightSystem | None]] = [
    ("x^2 + y^2", None),
    ("x^3 + y^3", None),
    ("x^4 + y^4", None),
    ("x^5 + y^5", None),
    ("x^3 + y^3 + z^3", None),
    ("x^4 + y^4 + z^4", None),
    ("x^3 + y^2", WeightSystem((2, 3), 6)),
    ("x^2 + y^3", WeightSystem((3, 2), 6)),
    ("x^3 + x*y^3", WeightSystem((3, 2), 9)),
    ("x^3 + y^4 + z^2", WeightSystem((4, 3, 6), 12)),
    ("x^4 + y^4 + z^2", WeightSystem((1, 1, 2), 4)),
]

# Inputs whose germ is not equivalent to a quasihomogeneous one.
NON_QUASIHOMOGENEOUS_CASES: list[str] = [
    "x^5 + y^5 + x^3*y^3",
    "x^4 + y^4 + z^4 + x^2*y^2*z^2",
    "x^3 + y^3 + z^3 + w^3 + x*y*z*w",
]


def corpus() -> list[tuple[str, Poly]]:
    """Every certified-isolated input the cross-validation suites run over."""
    entries = [(text, P(text)) for text, _ in QUASIHOMOGENEOUS_CASES]
    entries += [(text, P(text)) for text in NON_QUASIHOMOGENEOUS_CASES]
    entries += [
        (f"fermat({n},{m})", fermat(n, m))
        for n, m in [(2, 6), (3, 5), (4, 3)]
    ]
    entries += [
        (f"deformed({n},{m},{t})", deformed_fermat(n, m, Fraction(t)))
        for n, m, t in [(2, 5, -1), (3, 4, "1/2")]
    ]
    return entries


def random_homogeneous(rng: random.Random, n: int, m: int, extra_terms: int = 3) -> Poly:
    """A random degree-m form: fully dense, or Fermat plus a few monomials."""
    monos = list(monomials_of_degree(n, m))
    if rng.random() < 0.4:
        return Poly(n, {mono: rng.randrange(-9, 10) or 1 for mono in monos})
    terms = {tuple(m if i == j else 0 for j in range(n)): Fraction(1) for i in range(n)}
    for _ in range(rng.randrange(1, extra_terms + 1)):
        mono = rng.choice(monos)
        coeff = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return Poly(n, {k: v for k, v in terms.items() if v})


def random_regular_form(rng: random.Random, n: int, m: int) -> Poly:
    """A random certified-regular form of degree m in n variables."""
    for _ in range(64):
        f = random_homogeneous(rng, n, m)
        if not f.is_zero and is_regular(f):
            return f
    raise AssertionError(f"no regular form found for (n, m) = ({n}, {m})")


# 20 regular forms spread over n <= 3, m <= 5, deterministic across runs.
REGULAR_FORM_SHAPES = [
    (2, 3), (2, 3), (2, 3), (2, 4), (2, 4), (2, 4), (2, 5), (2, 5), (2, 5),
    (3, 3), (3, 3), (3, 3), (3, 3), (3, 4), (3, 4), (3, 4), (3, 5), (3, 5),
    (2, 4), (2, 5),
]


@pytest.fixture(scope="session")
def regular_forms() -> list[Poly]:
    rng = random.Random(20240811)
    return [random_regular_form(rng, n, m) for n, m in REGULAR_FORM_SHAPES]
