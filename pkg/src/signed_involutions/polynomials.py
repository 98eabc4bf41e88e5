"""The t-analogs of alpha_{p,q} and their identities.

* ``a_poly``: 2-cycle count generating function, sum_k gamma_{k,p,q} t^k.
* ``e_poly``: length generating function, sum over I_{p,q}^± of t^L(pi).
* ``e_tilde_poly``: the companion family with coefficient [p+q-1]_t.
* ``d_poly``: weight generating function (1/t) sum over Delannoy paths of t^w(L).

Each family has a recurrence route plus at least one route that does not
use the recurrence.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from . import counting
from .errors import IndexOutOfRange, NOutOfRange
from .poly import Polynomial

ONE = Polynomial.constant(1)

A_METHODS = ("recurrence", "gamma-sum", "path-enumeration")
E_METHODS = ("recurrence", "length-enumeration", "support-histogram")
D_METHODS = ("recurrence", "enumeration", "explicit-formula")


def q_int(n: int) -> Polynomial:
    """[n]_t = 1 + t + ... + t^(n-1)."""
    if n <= 0:
        raise NOutOfRange(f"[n]_t needs n >= 1, got {n}")
    return Polynomial({e: 1 for e in range(n)})


def _check(p, q):
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")


def _grid(step):
    """Memoized three-term recurrence with all-ones boundary.

    ``step(p, q, west, south, southwest)`` returns the (p,q) entry for
    p, q >= 1. Rows are filled bottom-up so recursion depth stays flat.
    """
    table: dict[tuple[int, int], Polynomial] = {}

    def get(p, q):
        if (p, q) in table:
            return table[p, q]
        for i in range(p + 1):
            for j in range(q + 1):
                if (i, j) in table:
                    continue
                if i == 0 or j == 0:
                    table[i, j] = ONE
                else:
                    table[i, j] = step(i, j, table[i - 1, j], table[i, j - 1],
                                       table[i - 1, j - 1])
        return table[p, q]

    return get


_a_rec = _grid(lambda p, q, w, s, sw: w + s + sw.shift(1) * (p + q - 1))
_e_rec = _grid(lambda p, q, w, s, sw: w + s + (q_int(p + q) - 1) * sw)
_et_rec = _grid(lambda p, q, w, s, sw: w + s + q_int(p + q - 1) * sw)
_d_rec = _grid(lambda p, q, w, s, sw:
               w + s + sw.substitute_power(p + q - 1).shift(p + q - 2))


def a_poly(p: int, q: int, method: str = "recurrence") -> Polynomial:
    _check(p, q)
    if method == "recurrence":
        return _a_rec(p, q)
    if method == "gamma-sum":
        return Polynomial({k: counting.gamma_closed(k, p, q)
                           for k in range(min(p, q) + 1)})
    if method == "path-enumeration":
        from .paths import diagonal_count, enumerate_weighted
        out: dict[int, int] = {}
        for w in enumerate_weighted(p, q):
            d = diagonal_count(w)
            out[d] = out.get(d, 0) + 1
        return Polynomial(out)
    raise ValueError(f"unknown method {method!r}; choose from {A_METHODS}")


def e_poly(p: int, q: int, method: str = "recurrence") -> Polynomial:
    _check(p, q)
    if method == "recurrence":
        return _e_rec(p, q)
    if method == "length-enumeration":
        from .involutions import enumerate_signed, length
        out: dict[int, int] = {}
        for pi in enumerate_signed(p, q):
            L = length(pi)
            out[L] = out.get(L, 0) + 1
        return Polynomial(out)
    if method == "support-histogram":
        return _e_from_supports(p, q)
    raise ValueError(f"unknown method {method!r}; choose from {E_METHODS}")


@lru_cache(maxsize=None)
def _support_histogram(n: int) -> dict:
    from .kernels import involution_length_histogram
    return involution_length_histogram(n)


def _e_from_supports(p: int, q: int) -> Polynomial:
    # Length depends only on the support; each support with f fixed points
    # and k 2-cycles carries C(f, p-k) sign patterns.
    n = p + q
    out: dict[int, int] = {}
    for (f, L), count in _support_histogram(n).items():
        k = (n - f) // 2
        if 0 <= p - k <= f:
            out[L] = out.get(L, 0) + count * comb(f, p - k)
    return Polynomial(out)


def e_tilde_poly(p: int, q: int) -> Polynomial:
    """Companion of E with [p+q-1]_t in place of [p+q]_t - 1; boundary ones."""
    _check(p, q)
    return _et_rec(p, q)


def d_poly(p: int, q: int, method: str = "recurrence") -> Polynomial:
    _check(p, q)
    if method == "recurrence":
        return _d_rec(p, q)
    if method == "enumeration":
        from .paths import enumerate_delannoy, weight
        out: dict[int, int] = {}
        for L in enumerate_delannoy(p, q):
            w = weight(L) - 1
            out[w] = out.get(w, 0) + 1
        return Polynomial(out)
    if method == "explicit-formula":
        return _d_explicit(p, q)
    raise ValueError(f"unknown method {method!r}; choose from {D_METHODS}")


def _d_explicit(p: int, q: int) -> Polynomial:
    """Sum over chains of diagonal positions of (free-segment count) t^(w-1).

    Diagonals leave (a_1,b_1) < ... < (a_r,b_r) componentwise strictly, with
    a_r < p and b_r < q. Between consecutive diagonals (and before the first,
    after the last) the path uses only N/E steps, counted by a binomial with
    boundary markers (a_0,b_0) = (-1,-1) and (a_{r+1},b_{r+1}) = (p,q).
    """
    out: dict[int, int] = {}

    def gap(a0, b0, a1, b1):
        da, db = a1 - a0 - 1, b1 - b0 - 1
        if da < 0 or db < 0:
            return 0
        return comb(da + db, da)

    def rec(a0, b0, mult, w):
        # close the chain here
        last = mult * gap(a0, b0, p, q)
        if last:
            out[w - 1] = out.get(w - 1, 0) + last
        for a in range(a0 + 1, p):
            for b in range(b0 + 1, q):
                rec(a, b, mult * gap(a0, b0, a, b), w * (a + b + 1))

    rec(-1, -1, 1, 1)
    return Polynomial(out)


def d_constant_term(p: int, q: int) -> int:
    """C(p+q, q) + C(p+q-2, q-1): paths with weight 1."""
    extra = comb(p + q - 2, q - 1) if p >= 1 and q >= 1 else 0
    return comb(p + q, q) + extra


def d_derivative_identity(p: int, q: int) -> bool:
    """D(1) + D'(1) == alpha_{p,q}, i.e. d/dt (t D(t)) at t = 1."""
    d = d_poly(p, q)
    return d(1) + d.derivative()(1) == counting.alpha(p, q)


def root_of_unity_congruence(p: int, q: int) -> bool:
    """t (D_{p,q} - D_{p-1,q} - D_{p,q-1}) == D(p-1,q-1) mod t^(p+q-1) - 1."""
    if p < 1 or q < 1:
        raise IndexOutOfRange(f"need p, q >= 1, got ({p},{q})")
    diff = (d_poly(p, q) - d_poly(p - 1, q) - d_poly(p, q - 1)).shift(1)
    return diff.reduce_cyclic(p + q - 1) == \
        Polynomial.constant(counting.delannoy(p - 1, q - 1))


def central_trinomial(n: int) -> int:
    """[x^n] (1 + x + x^2)^n by exact polynomial power."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (Polynomial.from_coeffs([1, 1, 1]) ** n).coeff(n)
