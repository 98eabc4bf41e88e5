"""Univariate polynomials with arbitrary-precision integer coefficients.

Storage is sparse (exponent -> coefficient) because the weight polynomials
reach degrees in the thousands with only a handful of nonzero terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class Polynomial:
    __slots__ = ("_c",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        c = {}
        for e, v in (terms or {}).items():
            if e < 0:
                raise ValueError("negative exponent")
            if v:
                c[e] = c.get(e, 0) + v
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "Polynomial":
        """Build from a dense list, lowest degree first."""
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "Polynomial":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls({0: value})

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def coeffs(self) -> list[int]:
        """Dense coefficient list up to the degree (``[]`` for zero)."""
        if not self._c:
            return []
        out = [0] * (self.degree + 1)
        for e, v in self._c.items():
            out[e] = v
        return out

    @property
    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = Polynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Exact evaluation at an int or Fraction."""
        if isinstance(x, float):
            raise TypeError("floating-point evaluation is not supported")
        return sum((v * x ** e for e, v in self._c.items()), 0 if isinstance(x, int) else Fraction(0))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by t**k."""
        return Polynomial({e + k: v for e, v in self._c.items()})

    def substitute_power(self, m: int) -> "Polynomial":
        """P(t) -> P(t**m)."""
        return Polynomial({e * m: v for e, v in self._c.items()})

    def derivative(self) -> "Polynomial":
        return Polynomial({e - 1: e * v for e, v in self._c.items() if e})

    def reduce_cyclic(self, m: int) -> "Polynomial":
        """Remainder modulo t**m - 1."""
        if m < 1:
            raise ValueError("modulus degree must be positive")
        out: dict[int, int] = {}
        for e, v in self._c.items():
            out[e % m] = out.get(e % m, 0) + v
        return Polynomial(out)

    def to_dict(self) -> dict:
        return {"coeffs": [[str(e), str(v)] for e, v in self.terms()]}

    def __repr__(self):
        if not self._c:
            return "Polynomial(0)"
        parts = []
        for e, v in self.terms():
            parts.append(str(v) if e == 0 else f"{v}*t" if e == 1 else f"{v}*t^{e}")
        return "Polynomial(" + " + ".join(parts) + ")"


def unimodal(poly: Polynomial) -> bool:
    return first_violation(poly) is None


def first_violation(poly: Polynomial) -> int | None:
    """Index of the first dip: a coefficient followed by a rise after a fall.

    ``None`` means the coefficients weakly increase and then weakly decrease.
    Internal zeros count as coefficients, so ``1 + t^2`` dips at index 1.
    """
    c = poly.coeffs()
    falling = False
    for i in range(1, len(c)):
        if c[i] < c[i - 1]:
            falling = True
        elif c[i] > c[i - 1] and falling:
            return i - 1
    return None
