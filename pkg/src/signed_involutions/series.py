"""Truncated bivariate power series over the rationals.

A :class:`BiSeries` of order ``N`` holds the coefficients of ``u^i w^j``
for ``i + j <= N``; everything of higher total degree is dropped. The two
variables play whatever roles the caller needs, ``(x, y)``, ``(r, s)`` or
``(x, t)``.

The module also builds the generating series of alpha_{p,q},

    v(x, y) = sum_{p,q} alpha_{p,q} x^q y^p / p!,

and checks it against its closed form, the first-order PDE it satisfies,
and the solution along characteristic curves.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Mapping

from . import counting
from .errors import (
    InternalDivisibilityFailure,
    NonOneConstant,
    NonUnitConstant,
    NonZeroConstant,
    NonZeroInnerConstant,
    OrderMismatch,
)


def _monomials(d: int):
    return [(i, d - i) for i in range(d + 1)]


class BiSeries:
    __slots__ = ("order", "_c")

    def __init__(self, order: int, coeffs: Mapping[tuple[int, int], object] | None = None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.order = order
        self._c = {}
        for (i, j), v in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if i + j <= order and v:
                self._c[i, j] = Fraction(v)

    # construction helpers
    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def one(cls, order):
        return cls(order, {(0, 0): 1})

    @classmethod
    def u(cls, order):
        return cls(order, {(1, 0): 1})

    @classmethod
    def w(cls, order):
        return cls(order, {(0, 1): 1})

    @classmethod
    def from_function(cls, order: int, f: Callable[[int, int], object]):
        return cls(order, {(i, j): f(i, j) for d in range(order + 1)
                           for i, j in _monomials(d)})

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if i + j > self.order:
            raise IndexError(f"u^{i} w^{j} lies beyond order {self.order}")
        return self._c.get((i, j), Fraction(0))

    def items(self):
        return sorted(self._c.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]))

    def truncate(self, order: int) -> "BiSeries":
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return BiSeries(order, self._c)

    def constant(self) -> Fraction:
        return self._c.get((0, 0), Fraction(0))

    def _coerce(self, other) -> "BiSeries":
        if isinstance(other, BiSeries):
            if other.order != self.order:
                raise OrderMismatch(f"orders {self.order} and {other.order} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return BiSeries(self.order, {(0, 0): other})
        raise TypeError(f"cannot combine BiSeries with {type(other).__name__}")

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def agrees_with(self, other: "BiSeries", order: int | None = None) -> bool:
        """Coefficient-wise equality up to ``order`` (default: the smaller order)."""
        m = min(self.order, other.order) if order is None else order
        return self.truncate(m) == other.truncate(m)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return BiSeries(self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries(self.order, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "BiSeries":
        c = Fraction(c)
        return BiSeries(self.order, {k: v * c for k, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        N = self.order
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), v1 in self._c.items():
            room = N - i1 - j1
            for (i2, j2), v2 in other._c.items():
                if i2 + j2 <= room:
                    key = (i1 + i2, j1 + j2)
                    out[key] = out.get(key, 0) + v1 * v2
        return BiSeries(N, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        result = BiSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    # homogeneous-degree solvers
    def _by_degree(self) -> list[dict]:
        parts = [dict() for _ in range(self.order + 1)]
        for (i, j), v in self._c.items():
            parts[i + j][i, j] = v
        return parts

    @staticmethod
    def _hmul(a: dict, b: dict, out: dict, coef=1):
        for (i1, j1), v1 in a.items():
            for (i2, j2), v2 in b.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + coef * v1 * v2

    @classmethod
    def _from_parts(cls, order, parts):
        out = {}
        for part in parts:
            out.update(part)
        return cls(order, out)

    def invert(self) -> "BiSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        a0 = self.constant()
        if a0 == 0:
            raise NonUnitConstant("series with zero constant term is not invertible")
        a = self._by_degree()
        b = [{(0, 0): 1 / a0}]
        for d in range(1, self.order + 1):
            acc: dict = {}
            for e in range(1, d + 1):
                self._hmul(a[e], b[d - e], acc)
            b.append({k: -v / a0 for k, v in acc.items()})
        return self._from_parts(self.order, b)

    def sqrt_unit(self) -> "BiSeries":
        """The square root with constant term 1; needs constant term 1."""
        if self.constant() != 1:
            raise NonOneConstant("sqrt_unit needs constant term 1")
        a = self._by_degree()
        b = [{(0, 0): Fraction(1)}]
        for d in range(1, self.order + 1):
            acc = dict(a[d])
            for e in range(1, d):
                self._hmul(b[e], b[d - e], acc, -1)
            b.append({k: v / 2 for k, v in acc.items()})
        return self._from_parts(self.order, b)

    def exp_nilpotent(self) -> "BiSeries":
        """exp of a series with zero constant term.

        Solved degree by degree from d * b_d = sum_e e * a_e * b_{d-e}, the
        Euler-operator form of b' = a' b.
        """
        if self.constant() != 0:
            raise NonZeroConstant("exp_nilpotent needs zero constant term")
        a = self._by_degree()
        b = [{(0, 0): Fraction(1)}]
        for d in range(1, self.order + 1):
            acc: dict = {}
            for e in range(1, d + 1):
                self._hmul(a[e], b[d - e], acc, e)
            b.append({k: v / d for k, v in acc.items()})
        return self._from_parts(self.order, b)

    def d_u(self) -> "BiSeries":
        """Partial derivative in the first variable (order drops by one)."""
        return BiSeries(max(self.order - 1, 0),
                        {(i - 1, j): i * v for (i, j), v in self._c.items() if i})

    def d_w(self) -> "BiSeries":
        return BiSeries(max(self.order - 1, 0),
                        {(i, j - 1): j * v for (i, j), v in self._c.items() if j})

    def divide_by_u(self) -> "BiSeries":
        """Exact quotient by the first variable (order drops by one)."""
        bad = [(i, j) for (i, j) in self._c if i == 0]
        if bad:
            raise InternalDivisibilityFailure(f"terms {bad[:3]} are not divisible by u")
        return BiSeries(max(self.order - 1, 0),
                        {(i - 1, j): v for (i, j), v in self._c.items()})

    def restrict_u(self) -> list[Fraction]:
        """Coefficients of u^i at w = 0."""
        return [self[i, 0] for i in range(self.order + 1)]

    def restrict_w(self) -> list[Fraction]:
        return [self[0, j] for j in range(self.order + 1)]

    def to_dict(self) -> dict:
        return {"order": self.order,
                "coeffs": [[i, j, _frac_str(v)] for (i, j), v in self.items()]}

    def __repr__(self):
        return f"BiSeries(order={self.order}, terms={len(self._c)})"


def _frac_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def compose(outer: BiSeries, inner_u: BiSeries, inner_w: BiSeries) -> BiSeries:
    """outer(inner_u, inner_w), truncated to the smallest order involved."""
    if inner_u.constant() or inner_w.constant():
        raise NonZeroInnerConstant("substituted series must have zero constant term")
    N = min(outer.order, inner_u.order, inner_w.order)
    U, W = inner_u.truncate(N), inner_w.truncate(N)
    upow = [BiSeries.one(N)]
    wpow = [BiSeries.one(N)]
    for _ in range(N):
        upow.append(upow[-1] * U)
        wpow.append(wpow[-1] * W)
    result = BiSeries.zero(N)
    for (i, j), v in outer.items():
        if i + j <= N:
            result = result + (upow[i] * wpow[j]).scale(v)
    return result


def alpha_series(N: int) -> BiSeries:
    """sum_{p+q<=N} alpha_{p,q} x^q y^p / p! with x first, y second."""
    return BiSeries.from_function(
        N, lambda qq, pp: Fraction(counting.alpha(pp, qq), factorial(pp)))


def closed_form_series(N: int) -> BiSeries:
    """Expand the closed form of v(x, y) exactly to order N.

    With s = sqrt(x^2 - 2xy - 2x + 1):
        v = exp((1 - x - s) / x) (x - s) / (-x^2 + 2xy + 2x - 1 + x s).
    The division by x costs one order, so s is built at order N + 1.
    """
    M = N + 1
    x, y = BiSeries.u(M), BiSeries.w(M)
    s = (x * x - 2 * x * y - 2 * x + 1).sqrt_unit()
    exponent = (1 - x - s).divide_by_u()          # order N
    x, y, s = x.truncate(N), y.truncate(N), s.truncate(N)
    num = exponent.exp_nilpotent() * (x - s)
    den = -x * x + 2 * x * y + 2 * x - 1 + x * s
    return num * den.invert()


def pde_residual(v: BiSeries) -> BiSeries:
    """-x^2 v_x + (1 - x - xy) v_y - (1 + x) v, valid to order N - 1."""
    M = max(v.order - 1, 0)
    x, y = BiSeries.u(M), BiSeries.w(M)
    vt = v.truncate(M)
    return -(x * x) * v.d_u() + (1 - x - x * y) * v.d_w() - (1 + x) * vt


def characteristic_series(N: int) -> tuple[BiSeries, BiSeries, BiSeries]:
    """x(r,s), y(r,s) and e^s (rs + 1) / (1 - r) as (r, s)-series."""
    r, s = BiSeries.u(N), BiSeries.w(N)
    one_rs = 1 + r * s
    xr = r * one_rs.invert()
    yr = (r * s * s - 2 * r * s + 2 * s) * (2 * one_rs).invert()
    target = s.exp_nilpotent() * one_rs * (1 - r).invert()
    return xr, yr, target


def characteristic_check(N: int) -> bool:
    """alpha_series composed with the characteristic curves equals the target."""
    xr, yr, target = characteristic_series(N)
    return compose(alpha_series(N), xr, yr) == target


def initial_condition_checks(N: int) -> tuple[bool, bool]:
    """(v(x,0) == 1/(1-x), v(0,y) == e^y) up to order N."""
    v = alpha_series(N)
    geom = (1 - BiSeries.u(N)).invert()
    expy = BiSeries.w(N).exp_nilpotent()
    return v.restrict_u() == geom.restrict_u(), v.restrict_w() == expy.restrict_w()


def involution_egf(N: int) -> BiSeries:
    """exp(x t + t^2 / 2) with x first and t second, to order N."""
    x, t = BiSeries.u(N), BiSeries.w(N)
    return (x * t + (t * t).scale(Fraction(1, 2))).exp_nilpotent()


def involution_table_from_egf(nmax: int) -> dict[tuple[int, int], int]:
    """c_{n,r} = n! [t^n x^r] exp(x t + t^2/2) for r <= n <= nmax."""
    g = involution_egf(2 * nmax)
    out = {}
    for n in range(nmax + 1):
        for r in range(n + 1):
            v = g[r, n] * factorial(n)
            assert v.denominator == 1
            out[n, r] = int(v)
    return out
