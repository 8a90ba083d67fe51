"""Kostant partitions: enumeration, statistics, and the partition-count polynomial.

A Kostant partition of a coroot vector gamma is a multiset of positive
coroots summing to gamma, stored as multiplicities along the canonical
interval order.  Besides the partitions themselves this module computes
the derived collections mu(kappa) and the fixed-point exponents d(kappa),
and the polynomial K_alpha(t) = t^{|alpha|} * sum_kappa t^{-K(kappa)}
whose value at t=1 is the Kostant partition count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .charseries import LaurentPoly
from .rootdata import ResourceCapError, coroot_intervals, height

DEFAULT_WEIGHT_CAP = 12


@dataclass(frozen=True)
class KostantPartition:
    """Multiset of positive coroots, as multiplicities in canonical order.

    mults[k] is the multiplicity of the k-th interval of
    coroot_intervals(n).
    """

    n: int
    mults: tuple

    def __post_init__(self):
        intervals = coroot_intervals(self.n)
        if len(self.mults) != len(intervals):
            raise ValueError("multiplicity vector has wrong length")
        if any(m < 0 for m in self.mults):
            raise ValueError("multiplicities must be nonnegative")

    @classmethod
    def empty(cls, n):
        return cls(n, (0,) * len(coroot_intervals(n)))

    @classmethod
    def from_intervals(cls, n, intervals):
        """Build from an iterable of (q, p) pairs (with repetition)."""
        index = {iv: k for k, iv in enumerate(coroot_intervals(n))}
        mults = [0] * len(index)
        for iv in intervals:
            mults[index[tuple(iv)]] += 1
        return cls(n, tuple(mults))

    def multiplicity(self, q, p):
        return self.mults[coroot_intervals(self.n).index((q, p))]

    def weight(self):
        """|kappa|: the coroot vector the partition sums to."""
        total = [0] * (self.n - 1)
        for (q, p), m in zip(coroot_intervals(self.n), self.mults):
            if m:
                for i in range(q, p + 1):
                    total[i - 1] += m
        return tuple(total)

    def norm(self):
        """||kappa|| = |weight|."""
        return height(self.weight())

    def num_summands(self):
        """K(kappa): the number of coroot summands with multiplicity."""
        return sum(self.mults)

    def intervals(self):
        """The summands as (q, p) pairs, with repetition, canonical order."""
        out = []
        for (q, p), m in zip(coroot_intervals(self.n), self.mults):
            out.extend([(q, p)] * m)
        return out

    def mu(self):
        """Collection mu_{p,q} = number of summand intervals containing [q, p]."""
        out = {}
        for q in range(1, self.n):
            for p in range(q, self.n):
                out[(p, q)] = sum(
                    m
                    for (r, s), m in zip(coroot_intervals(self.n), self.mults)
                    if r <= q and p <= s
                )
        return out

    def fixed_point_d(self):
        """Exponents d_{p,q} = sum_{r=p}^{n-1} kappa_{r,q}."""
        out = {}
        for q in range(1, self.n):
            for p in range(q, self.n):
                out[(p, q)] = sum(
                    m
                    for (r2, s2), m in zip(coroot_intervals(self.n), self.mults)
                    if r2 == q and s2 >= p
                )
        return out

    def to_json(self):
        """Nonzero summands as [{"coroot": [q, p], "mult": m}, ...]."""
        return [
            {"coroot": [q, p], "mult": m}
            for (q, p), m in zip(coroot_intervals(self.n), self.mults)
            if m
        ]

    def __le__(self, other):
        return self.mults <= other.mults


def stats(kappa):
    """(|kappa|, ||kappa||, K(kappa))."""
    return kappa.weight(), kappa.norm(), kappa.num_summands()


def _check_cap(gamma, cap):
    if height(gamma) > cap:
        raise ResourceCapError(
            f"|gamma| = {height(gamma)} exceeds enumeration cap {cap}"
        )


def kostant_partitions(gamma, cap=DEFAULT_WEIGHT_CAP):
    """All Kostant partitions of gamma, lexicographic in the multiplicity vector.

    gamma is a coroot vector for rank n = len(gamma) + 1.

    >>> [kappa.intervals() for kappa in kostant_partitions((1, 1))]
    [[(1, 2)], [(1, 1), (2, 2)]]
    >>> [kappa.num_summands() for kappa in kostant_partitions((2, 1))]
    [2, 3]
    """
    gamma = tuple(gamma)
    if any(a < 0 for a in gamma):
        raise ValueError("gamma must have nonnegative coordinates")
    _check_cap(gamma, cap)
    n = len(gamma) + 1
    intervals = coroot_intervals(n)
    results = []
    mults = [0] * len(intervals)

    def descend(idx, remaining):
        if not any(remaining):
            results.append(KostantPartition(n, tuple(mults)))
            return
        if idx == len(intervals):
            return
        q, p = intervals[idx]
        limit = min(remaining[i - 1] for i in range(q, p + 1))
        for m in range(limit + 1):
            mults[idx] = m
            rem = list(remaining)
            for i in range(q, p + 1):
                rem[i - 1] -= m
            descend(idx + 1, rem)
        mults[idx] = 0

    descend(0, list(gamma))
    return results


@lru_cache(maxsize=None)
def _count_profile(n, gamma):
    """Map K -> number of Kostant partitions of gamma with K summands.

    Dynamic-programming convolution along the canonical coroot list;
    independent of the recursive enumeration above.
    """
    intervals = coroot_intervals(n)
    # profiles: weight-so-far -> {summand count: ways}; only weights <= gamma kept
    profiles = {(0,) * (n - 1): {0: 1}}
    for q, p in intervals:
        theta = tuple(1 if q <= i <= p else 0 for i in range(1, n))
        updated = {}
        for beta, prof in profiles.items():
            cur, m = beta, 0
            while all(c <= g for c, g in zip(cur, gamma)):
                tgt = updated.setdefault(cur, {})
                for k, ways in prof.items():
                    tgt[k + m] = tgt.get(k + m, 0) + ways
                cur = tuple(c + t for c, t in zip(cur, theta))
                m += 1
        profiles = updated
    return profiles.get(tuple(gamma), {})


def kostant_count_profile(gamma):
    """Summand-count profile of K(gamma) via the DP convolution."""
    gamma = tuple(gamma)
    return dict(_count_profile(len(gamma) + 1, gamma))


def kostant_count(gamma):
    """Number of Kostant partitions of gamma (DP, cached)."""
    return sum(kostant_count_profile(gamma).values())


def lusztig_kostant_poly(alpha, cap=DEFAULT_WEIGHT_CAP):
    """K_alpha(t) = t^{|alpha|} sum_{kappa} t^{-K(kappa)} as an even q-polynomial.

    >>> lusztig_kostant_poly((1, 1)).pretty()
    '1 + t'
    >>> lusztig_kostant_poly((0, 0)).pretty()
    '1'
    """
    alpha = tuple(alpha)
    _check_cap(alpha, cap)
    h = height(alpha)
    profile = kostant_count_profile(alpha)
    return LaurentPoly.t_poly({h - k: c for k, c in profile.items()})
