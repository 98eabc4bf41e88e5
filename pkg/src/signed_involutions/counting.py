"""Exact counts: gamma_{k,p,q}, alpha_{p,q}, Delannoy numbers, c_{n,r}.

``gamma_{k,p,q}`` counts signed (p,q)-involutions with exactly k 2-cycles
and ``alpha_{p,q}`` is the sum over k. Every count has at least two
independent routes here so the routes can be checked against each other.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import IndexOutOfRange, KOutOfRange
from .poly import Polynomial

ALPHA_METHODS = ("recurrence", "gamma-sum", "enumeration",
                 "weighted-path-sum", "weighted-path-count")


def _check_k(k: int, p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    if k < 0 or k > min(p, q):
        raise KOutOfRange(f"k={k} outside 0..{min(p, q)} for (p,q)=({p},{q})")


def gamma_closed(k: int, p: int, q: int) -> int:
    """(p+q)! / ((p-k)! (q-k)! 2^k k!)."""
    _check_k(k, p, q)
    den = factorial(p - k) * factorial(q - k) * 2 ** k * factorial(k)
    num = factorial(p + q)
    assert num % den == 0
    return num // den


class CountTable:
    """Memo tables filled bottom-up over the rectangle [0..p] x [0..q].

    Grows on demand; once filled for a rectangle, lookups inside it are
    read-only.
    """

    def __init__(self):
        self._gamma: dict[tuple[int, int, int], int] = {}
        self._alpha: dict[tuple[int, int], int] = {}
        self._delannoy: dict[tuple[int, int], int] = {}
        self._extent = (-1, -1)

    def fill(self, p: int, q: int) -> None:
        P, Q = max(p, self._extent[0]), max(q, self._extent[1])
        if (P, Q) == self._extent:
            return
        g, a, d = self._gamma, self._alpha, self._delannoy
        for i in range(P + 1):
            for j in range(Q + 1):
                if (i, j) in a:
                    continue
                if i == 0 or j == 0:
                    g[0, i, j] = 1
                    a[i, j] = d[i, j] = 1
                    continue
                n = i + j
                for k in range(min(i, j) + 1):
                    v = g.get((k, i - 1, j), 0) + g.get((k, i, j - 1), 0)
                    if k:
                        v += (n - 1) * g[k - 1, i - 1, j - 1]
                    g[k, i, j] = v
                a[i, j] = a[i - 1, j] + a[i, j - 1] + (n - 1) * a[i - 1, j - 1]
                d[i, j] = d[i - 1, j] + d[i, j - 1] + d[i - 1, j - 1]
        self._extent = (P, Q)

    def gamma(self, k: int, p: int, q: int) -> int:
        _check_k(k, p, q)
        self.fill(p, q)
        return self._gamma[k, p, q]

    def alpha(self, p: int, q: int) -> int:
        self.fill(p, q)
        return self._alpha[p, q]

    def delannoy(self, p: int, q: int) -> int:
        self.fill(p, q)
        return self._delannoy[p, q]


_TABLE = CountTable()


def gamma_recurrence(k: int, p: int, q: int) -> int:
    """gamma via the three-term recurrence; boundary rows are all ones at k=0."""
    _check_k(k, p, q)
    return _TABLE.gamma(k, p, q)


def gamma_aux_checks(k: int, p: int, q: int) -> tuple[bool, bool, bool]:
    """Check the three ratio identities linking gamma to its neighbours.

    Each identity is tested as an exact rational equation when its
    denominator is nonzero, otherwise in cleared-denominator form (the
    neighbour then lies outside 0 <= k <= min and counts as zero).
    """
    if k < 1 or p < 1 or q < 1 or k > min(p, q):
        raise IndexOutOfRange(f"need 1 <= k <= min(p,q), got k={k}, p={p}, q={q}")

    def g(kk, pp, qq):
        return gamma_closed(kk, pp, qq) if 0 <= kk <= min(pp, qq) else 0

    lhs = g(k, p, q)
    first = lhs == Fraction((p - k + 1) * (q - k + 1), 2 * k) * g(k - 1, p, q)

    def ratio_check(den, other):
        if den:
            return lhs == Fraction(p + q, den) * other
        return den * lhs == (p + q) * other

    second = ratio_check(p - k, g(k, p - 1, q))
    third = ratio_check(q - k, g(k, p, q - 1))
    return first, second, third


def alpha(p: int, q: int, method: str = "recurrence") -> int:
    """Number of signed (p,q)-involutions, by the named method."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    if method == "recurrence":
        return _TABLE.alpha(p, q)
    if method == "gamma-sum":
        return sum(gamma_closed(k, p, q) for k in range(min(p, q) + 1))
    if method == "enumeration":
        from .involutions import enumerate_signed
        return sum(1 for _ in enumerate_signed(p, q))
    if method == "weighted-path-sum":
        from .paths import enumerate_delannoy, weight
        return sum(weight(L) for L in enumerate_delannoy(p, q))
    if method == "weighted-path-count":
        from .paths import enumerate_weighted
        return sum(1 for _ in enumerate_weighted(p, q))
    raise ValueError(f"unknown method {method!r}; choose from {ALPHA_METHODS}")


def delannoy(p: int, q: int) -> int:
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    return _TABLE.delannoy(p, q)


def binomial_count(p: int, q: int) -> int:
    """b_{p,q} = C(p+q, q), the number of (p,q) Grassmann paths."""
    return comb(p + q, q)


def c_involutions(n: int, r: int) -> int:
    """Involutions of [n] with exactly r fixed points."""
    if n < 0 or r < 0 or r > n or (n - r) % 2:
        return 0
    k = (n - r) // 2
    return comb(n, 2 * k) * factorial(2 * k) // (2 ** k * factorial(k))


def involution_count(n: int) -> int:
    return sum(c_involutions(n, r) for r in range(n + 1))


def k_poly(n: int) -> Polynomial:
    """sum_r c_{n,r} x^r, the fixed-point enumerator of involutions of [n]."""
    return Polynomial({r: c_involutions(n, r) for r in range(n + 1)})
