"""Binomial bookkeeping for graded dimension counts.

Everything here is exact integer arithmetic.  The one convention that matters:
C(a, b) = 0 whenever a < b (in particular for negative a), applied at the
boundary of each operation rather than by clamping inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the zero convention C(a, b) = 0 for a < b."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def n_dim(n: int, d: int) -> int:
    """Dimension of the space of homogeneous polynomials of degree d in n variables.

    C(d + n - 1, n - 1); zero for negative d.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return binom(d + n - 1, n - 1)


def m_sum(n: int, m: int) -> int:
    """Inclusion-exclusion count sum_{h=1}^{n} (-1)^(h-1) C(n,h) C((n-h)(m-1), n-1).

    Counts (n-1)-subsets of n(m-1) objects split into n blocks of size m-1,
    grouped by a block the subset avoids; equals C(n(m-1), n-1).
    """
    _check_pair(n, m)
    return sum(
        (-1) ** (h - 1) * binom(n, h) * binom((n - h) * (m - 1), n - 1)
        for h in range(1, n + 1)
    )


def koszul_kernel_dim(n: int, m: int) -> int:
    """sum_{h=2}^{n} (-1)^h C(n,h) C((n-h)(m-1), n-1).

    Dimension of the syzygy space of the multiplication map from degree
    n(m-2)-m+2 multipliers times the n degree-(m-1) generators onto the
    forms of degree n(m-2)+1, for a regular sequence of generators.
    """
    _check_pair(n, m)
    return sum(
        (-1) ** h * binom(n, h) * binom((n - h) * (m - 1), n - 1)
        for h in range(2, n + 1)
    )


@dataclass(frozen=True, slots=True)
class LemmaCheck:
    """One row of the inclusion-exclusion identity verification."""

    n: int
    m: int
    alternating_sum: int  # m_sum(n, m)
    binomial: int  # C(n(m-1), n-1)
    brute_total: int | None  # enumerated subset count (small cases only)
    brute_alternating: int | None  # inclusion-exclusion with enumerated terms
    equal: bool


def verify_lemma_comb(
    max_n: int, max_m: int, brute_limit: int = 20
) -> list[LemmaCheck]:
    """Check m_sum(n, m) == C(n(m-1), n-1) over 2..max_n x 2..max_m.

    Wherever n(m-1) <= brute_limit the identity is additionally confirmed by
    brute force: the subsets are enumerated outright, and the alternating sum
    is rebuilt from enumerated per-block-avoidance counts.  All routes must
    agree for `equal` to hold.
    """
    if max_n < 2 or max_m < 2:
        raise ValueError("bounds must be >= 2")
    out: list[LemmaCheck] = []
    for n in range(2, max_n + 1):
        for m in range(2, max_m + 1):
            lhs = m_sum(n, m)
            rhs = binom(n * (m - 1), n - 1)
            brute_total = brute_alt = None
            if n * (m - 1) <= brute_limit:
                objects = range(n * (m - 1))
                brute_total = sum(1 for _ in combinations(objects, n - 1))
                # Subsets avoiding h specific blocks live among the
                # (n-h)(m-1) remaining objects; enumerate those directly.
                brute_alt = 0
                for h in range(1, n + 1):
                    pool = range((n - h) * (m - 1))
                    cnt = sum(1 for _ in combinations(pool, n - 1))
                    brute_alt += (-1) ** (h - 1) * binom(n, h) * cnt
            candidates = [v for v in (lhs, rhs, brute_total, brute_alt) if v is not None]
            out.append(
                LemmaCheck(
                    n=n,
                    m=m,
                    alternating_sum=lhs,
                    binomial=rhs,
                    brute_total=brute_total,
                    brute_alternating=brute_alt,
                    equal=all(v == candidates[0] for v in candidates),
                )
            )
    return out


def _check_pair(n: int, m: int) -> None:
    if n < 2 or m < 2:
        raise ValueError(f"need n, m >= 2, got ({n}, {m})")
