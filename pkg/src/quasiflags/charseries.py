"""Exact sparse arithmetic: Laurent polynomials and truncated character series.

The single variable is q with q^2 = t (t has cohomological degree 2, so
exponents of q are cohomological degrees).  Polynomials "in t" are
q-polynomials supported on even exponents; the generating-function shift
t^{-dim/2} needs odd q-powers when dim is odd, which is why q is the
internal variable.

A character series is a finite sum  sum_alpha c_alpha(q) e^alpha  over
coroot vectors alpha with |alpha| <= D; all arithmetic truncates above
the total-degree bound D.
"""

from __future__ import annotations


class BoundMismatchError(ValueError):
    """Raised when combining character series with different degree bounds."""


class LaurentPoly:
    """Sparse Laurent polynomial in q with integer coefficients.

    Stored as a map exponent -> nonzero coefficient.  Immutable by
    convention: no method mutates self.

    >>> (LaurentPoly.t_poly({0: 1, 1: 1}) * LaurentPoly.t_poly({0: 1, 1: -1})).pretty()
    '1 - t^2'
    >>> LaurentPoly({3: 1, 1: 1}).negate_exponents().pretty()
    'q^-3 + q^-1'
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q_power(cls, e, coeff=1):
        return cls({e: coeff})

    @classmethod
    def t_power(cls, k, coeff=1):
        """coeff * t^k, i.e. coeff * q^(2k)."""
        return cls({2 * k: coeff})

    @classmethod
    def t_poly(cls, tcoeffs):
        """Build from a map t-exponent -> coefficient."""
        return cls({2 * k: c for k, c in tcoeffs.items()})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            res = LaurentPoly.__new__(LaurentPoly)
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def negate_exponents(self):
        """Substitution q -> q^{-1} (equivalently t -> t^{-1})."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {-e: c for e, c in self.terms.items()}
        return res

    def eval_at_one(self):
        """Value at q = 1 (= t = 1): the sum of the coefficients."""
        return sum(self.terms.values())

    def shift(self, e):
        """Multiply by q^e."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {k + e: c for k, c in self.terms.items()}
        return res

    def coeff(self, e):
        return self.terms.get(e, 0)

    def min_exp(self):
        return min(self.terms) if self.terms else 0

    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def support_parities(self):
        return {e % 2 for e in self.terms}

    def is_even(self):
        """True when supported on even q-powers only (a genuine t-polynomial)."""
        return all(e % 2 == 0 for e in self.terms)

    def is_palindromic(self):
        """Invariance under q -> q^{-1}."""
        return self == self.negate_exponents()

    def nonnegative(self):
        return all(c >= 0 for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        """Sorted [[q-exponent, coefficient-as-decimal-string], ...]."""
        return [[e, str(c)] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, pairs):
        return cls({int(e): int(c) for e, c in pairs})

    def pretty(self, var=None):
        """Human-readable string, ascending exponents.

        var defaults to 't' when the support is even (exponents halved),
        'q' otherwise.
        """
        if not self.terms:
            return "0"
        if var is None:
            var = "t" if self.is_even() else "q"
        parts = []
        for e, c in self.sorted_terms():
            if var == "t":
                assert e % 2 == 0, "odd q-power cannot be printed in t"
                e //= 2
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                pw = var if e == 1 else f"{var}^{e}"
                term = mag + pw
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.pretty('q')})"


class CharSeries:
    """Truncated formal sum  sum c_alpha(q) e^alpha  over coroot vectors.

    rank is the length of the alpha tuples; coefficients with
    |alpha| > bound are discarded by every operation.
    """

    __slots__ = ("rank", "bound", "coeffs")

    def __init__(self, rank, bound, coeffs=None):
        if bound < 0:
            raise ValueError("degree bound must be nonnegative")
        self.rank = rank
        self.bound = bound
        clean = {}
        if coeffs:
            for alpha, poly in coeffs.items():
                alpha = tuple(alpha)
                if len(alpha) != rank:
                    raise ValueError(f"alpha {alpha} has wrong rank (expected {rank})")
                if sum(alpha) > bound or poly.is_zero():
                    continue
                clean[alpha] = poly
        self.coeffs = clean

    @classmethod
    def zero(cls, rank, bound):
        return cls(rank, bound)

    @classmethod
    def one(cls, rank, bound):
        return cls(rank, bound, {(0,) * rank: LaurentPoly.one()})

    @classmethod
    def monomial(cls, rank, bound, alpha, poly):
        return cls(rank, bound, {tuple(alpha): poly})

    def coefficient(self, alpha):
        return self.coeffs.get(tuple(alpha), LaurentPoly.zero())

    def support(self):
        """Sorted list of alpha with nonzero coefficient (by height, then lex)."""
        return sorted(self.coeffs, key=lambda a: (sum(a), a))

    def _check_compatible(self, other):
        if self.rank != other.rank:
            raise BoundMismatchError("rank mismatch between series")
        if self.bound != other.bound:
            raise BoundMismatchError(
                f"degree bound mismatch: {self.bound} != {other.bound}"
            )

    def __eq__(self, other):
        if not isinstance(other, CharSeries):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.bound == other.bound
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for alpha, poly in other.coeffs.items():
            s = out.get(alpha, LaurentPoly.zero()) + poly
            if s.is_zero():
                out.pop(alpha, None)
            else:
                out[alpha] = s
        return CharSeries(self.rank, self.bound, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        """Multiply by an integer or a LaurentPoly scalar."""
        return CharSeries(
            self.rank, self.bound, {a: p * c for a, p in self.coeffs.items()}
        )

    def __mul__(self, other):
        self._check_compatible(other)
        out = {}
        for a, pa in self.coeffs.items():
            ha = sum(a)
            for b, pb in other.coeffs.items():
                if ha + sum(b) > self.bound:
                    continue
                ab = tuple(x + y for x, y in zip(a, b))
                prod = pa * pb
                s = out.get(ab)
                out[ab] = prod if s is None else s + prod
        return CharSeries(self.rank, self.bound, out)

    def truncate(self, bound):
        """Restriction to a smaller total-degree bound."""
        if bound > self.bound:
            raise BoundMismatchError("cannot extend a truncated series")
        return CharSeries(
            self.rank, bound, {a: p for a, p in self.coeffs.items() if sum(a) <= bound}
        )

    def eval_at_one(self):
        """Map alpha -> coefficient value at q=1, dropping zeros."""
        out = {}
        for a, p in self.coeffs.items():
            v = p.eval_at_one()
            if v:
                out[a] = v
        return out

    def to_json(self):
        """Sorted [[alpha-list, poly-json], ...]."""
        return [[list(a), self.coeffs[a].to_json()] for a in self.support()]

    def __repr__(self):
        inner = ", ".join(f"e^{a}: {self.coeffs[a].pretty()}" for a in self.support())
        return f"CharSeries(D={self.bound}; {inner})"


def geometric_inverse(coeff, theta, bound):
    """Expansion of (1 - coeff * e^theta)^{-1} up to total degree `bound`.

    coeff must be a monomial LaurentPoly (or an int); theta must have
    |theta| >= 1 so that the expansion terminates at the bound.
    """
    theta = tuple(theta)
    rank = len(theta)
    h = sum(theta)
    if h < 1:
        raise ValueError("cannot invert along a direction with |theta| = 0")
    if isinstance(coeff, int):
        coeff = LaurentPoly({0: coeff})
    if len(coeff.terms) != 1:
        raise ValueError("geometric factor coefficient must be a monomial")
    out = {}
    power = LaurentPoly.one()
    k = 0
    while k * h <= bound:
        out[tuple(k * x for x in theta)] = power
        power = power * coeff
        k += 1
    return CharSeries(rank, bound, out)
