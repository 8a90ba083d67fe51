"""Root-system data for type A_{n-1}.

Simple coroots are indexed by I = {1, ..., n-1}.  A coroot vector is a
plain tuple of n-1 nonnegative integers.  Positive coroots are the
interval sums i_q + i_{q+1} + ... + i_p for 1 <= q <= p <= n-1; the
canonical order on them is lexicographic in (q, p).

The Weyl group is S_n with length = number of inversions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

from .charseries import LaurentPoly

WEYL_ENUMERATION_CAP = 8


class RankError(ValueError):
    """Raised for ranks outside the supported range (n >= 2)."""


class ResourceCapError(ValueError):
    """Raised when an enumeration would exceed its configured cap."""


def _check_rank(n):
    if n < 2:
        raise RankError(f"rank parameter n must be >= 2, got {n}")


@lru_cache(maxsize=None)
def coroot_intervals(n):
    """All pairs (q, p) with 1 <= q <= p <= n-1, in canonical order."""
    _check_rank(n)
    return tuple((q, p) for q in range(1, n) for p in range(q, n))


def interval_to_coroot(n, q, p):
    """Coordinate vector of the positive coroot i_q + ... + i_p."""
    if not 1 <= q <= p <= n - 1:
        raise ValueError(f"bad coroot interval ({q},{p}) for n={n}")
    return tuple(1 if q <= i <= p else 0 for i in range(1, n))


@lru_cache(maxsize=None)
def positive_coroots(n):
    """All n(n-1)/2 positive coroots as vectors, in canonical order."""
    return tuple(interval_to_coroot(n, q, p) for q, p in coroot_intervals(n))


@lru_cache(maxsize=None)
def two_rho(n):
    """Sum of all positive coroots; coordinate i equals i*(n-i)."""
    total = [0] * (n - 1)
    for theta in positive_coroots(n):
        for i, a in enumerate(theta):
            total[i] += a
    return tuple(total)


def height(alpha):
    """|alpha| = sum of the coordinates."""
    return sum(alpha)


def dim_flag(n):
    """Dimension n(n-1)/2 of the complete flag variety."""
    _check_rank(n)
    return n * (n - 1) // 2


def pairing(i, beta):
    """Cartan pairing <i', beta> = 2b_i - b_{i-1} - b_{i+1}.

    i' is the simple root dual to the simple coroot i; beta is a coroot
    vector of any rank.  Missing neighbours count as zero.
    """
    rank = len(beta)
    if not 1 <= i <= rank:
        raise ValueError(f"simple-root index {i} out of range 1..{rank}")
    b = lambda j: beta[j - 1] if 1 <= j <= rank else 0
    return 2 * b(i) - b(i - 1) - b(i + 1)


@dataclass(frozen=True)
class WeylElement:
    """A permutation of {1..n} in one-line notation, with its length."""

    perm: tuple
    length: int


def inversions(perm):
    return sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )


@lru_cache(maxsize=None)
def weyl_elements(n, cap=WEYL_ENUMERATION_CAP):
    """All n! permutations with inversion counts, in lexicographic order."""
    if n < 1:
        raise RankError(f"n must be >= 1, got {n}")
    if n > cap:
        raise ResourceCapError(f"Weyl enumeration cap {cap} exceeded by n={n}")
    return tuple(
        WeylElement(perm=w, length=inversions(w))
        for w in permutations(range(1, n + 1))
    )


def _weyl_poincare_product(n):
    # prod_{k=1}^{n} (1 + t + ... + t^{k-1})
    poly = LaurentPoly.one()
    for k in range(1, n + 1):
        poly = poly * LaurentPoly({2 * j: 1 for j in range(k)})
    return poly


@lru_cache(maxsize=None)
def weyl_poincare(n):
    """Length generating function sum_{w in S_n} t^{l(w)}.

    Computed by the t-factorial product; for small n the inversion
    enumeration is run as well and the two must agree.
    """
    if n < 1:
        raise RankError(f"n must be >= 1, got {n}")
    poly = _weyl_poincare_product(n)
    if n <= WEYL_ENUMERATION_CAP:
        by_count = {}
        for w in weyl_elements(n):
            by_count[2 * w.length] = by_count.get(2 * w.length, 0) + 1
        if LaurentPoly(by_count) != poly:
            raise AssertionError(f"Weyl Poincare mismatch at n={n}")
    assert poly.eval_at_one() == factorial(n)
    return poly
