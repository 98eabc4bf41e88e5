"""Signed (p,q)-involutions: validation, enumeration, length statistics.

A signed involution is stored in standard form: 2-cycles ``(a, b)`` with
``a < b`` sorted by ``a``, then the fixed points in increasing order, each
carrying a ``"+"`` or ``"-"`` sign. Entries are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .errors import (
    DuplicateEntry,
    IncompleteSupport,
    KOutOfRange,
    NonIntegerDimension,
    NotAPermutation,
    NotStandardForm,
    SignBalanceViolation,
)

_SIGNS = {"+": "+", "-": "-", "−": "-"}


@dataclass(frozen=True)
class SignedInvolution:
    cycles: tuple[tuple[int, int], ...]
    fixed: tuple[tuple[int, str], ...]
    p: int
    q: int

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def k(self) -> int:
        return len(self.cycles)

    def one_line(self) -> list[int]:
        """The supporting permutation in one-line notation."""
        w = [0] * self.n
        for a, b in self.cycles:
            w[a - 1] = b
            w[b - 1] = a
        for c, _ in self.fixed:
            w[c - 1] = c
        return w

    def sort_key(self):
        return (self.cycles, self.fixed)

    def to_dict(self) -> dict:
        return {
            "cycles": [[a, b] for a, b in self.cycles],
            "fixed": [[c, s] for c, s in self.fixed],
            "p": self.p,
            "q": self.q,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "SignedInvolution":
        return validate(data.get("cycles", []), data.get("fixed", []),
                        data.get("p"), data.get("q"))

    @classmethod
    def from_json(cls, text: str) -> "SignedInvolution":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        parts = [f"({a},{b})" for a, b in self.cycles]
        parts += [f"{c}{s}" for c, s in self.fixed]
        return "".join(parts) or "()"


def _positive_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise NotStandardForm(f"entries must be positive integers, got {x!r}")
    return x


def validate(cycles: Iterable, fixed: Iterable, p: int | None = None,
             q: int | None = None) -> SignedInvolution:
    """Normalize raw cycle/fixed-point data into a :class:`SignedInvolution`.

    Out-of-order input (``b < a`` inside a cycle, unsorted cycles or fixed
    points) is silently put into standard form. ``p`` and ``q`` are derived
    from the signs when omitted; when given they must agree with them.
    """
    cyc = []
    for pair in cycles:
        a, b = (_positive_int(x) for x in pair)
        if a == b:
            raise DuplicateEntry(f"cycle ({a},{b}) repeats an entry")
        cyc.append((min(a, b), max(a, b)))
    fix = []
    for c, s in fixed:
        c = _positive_int(c)
        if s not in _SIGNS:
            raise NotStandardForm(f"sign must be '+' or '-', got {s!r}")
        fix.append((c, _SIGNS[s]))

    seen = set()
    for x in [e for pair in cyc for e in pair] + [c for c, _ in fix]:
        if x in seen:
            raise DuplicateEntry(f"entry {x} appears more than once")
        seen.add(x)
    n = len(seen)
    if seen != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - seen)
        raise IncompleteSupport(f"entries must be exactly 1..{n}; missing {missing}")

    k = len(cyc)
    plus = sum(1 for _, s in fix if s == "+")
    minus = len(fix) - plus
    dp, dq = plus + k, minus + k
    if (p is not None and p != dp) or (q is not None and q != dq):
        raise SignBalanceViolation(
            f"signs give (p,q)=({dp},{dq}), declared ({p},{q})")
    return SignedInvolution(tuple(sorted(cyc)), tuple(sorted(fix)), dp, dq)


def _sign_strings(plus: int, minus: int) -> Iterator[tuple[str, ...]]:
    # lexicographic with "+" < "-"
    if plus == 0 and minus == 0:
        yield ()
        return
    if plus:
        for rest in _sign_strings(plus - 1, minus):
            yield ("+",) + rest
    if minus:
        for rest in _sign_strings(plus, minus - 1):
            yield ("-",) + rest


def _enumerate(p: int, q: int, k_only: int | None) -> Iterator[SignedInvolution]:
    n = p + q
    kmax = min(p, q) if k_only is None else k_only
    used = [False] * (n + 1)

    def matchings(start: int, chosen: list) -> Iterator[tuple]:
        # A shorter cycle list sorts before any extension of it.
        if k_only is None or len(chosen) == k_only:
            yield tuple(chosen)
        if len(chosen) == kmax:
            return
        for a in range(start, n + 1):
            if used[a]:
                continue
            used[a] = True
            for b in range(a + 1, n + 1):
                if used[b]:
                    continue
                used[b] = True
                chosen.append((a, b))
                yield from matchings(a + 1, chosen)
                chosen.pop()
                used[b] = False
            used[a] = False

    for cyc in matchings(1, []):
        k = len(cyc)
        in_cycle = {e for pair in cyc for e in pair}
        points = [c for c in range(1, n + 1) if c not in in_cycle]
        for signs in _sign_strings(p - k, q - k):
            yield SignedInvolution(cyc, tuple(zip(points, signs)), p, q)


def enumerate_signed(p: int, q: int) -> Iterator[SignedInvolution]:
    """Yield every signed (p,q)-involution once.

    Order is lexicographic on ``(cycles, fixed)`` as tuples, with ``"+"``
    sorting before ``"-"``.
    """
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    return _enumerate(p, q, None)


def enumerate_signed_k(p: int, q: int, k: int) -> Iterator[SignedInvolution]:
    """Like :func:`enumerate_signed`, restricted to exactly ``k`` 2-cycles."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    if k < 0 or k > min(p, q):
        raise KOutOfRange(f"k={k} outside 0..{min(p, q)}")
    return _enumerate(p, q, k)


def inversions(one_line) -> int:
    w = list(one_line)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise NotAPermutation(f"{w!r} is not a permutation of 1..{len(w)}")
    return kernels.inversions(w)


def length(pi: SignedInvolution) -> int:
    """(inversions of the support + number of 2-cycles) / 2."""
    total = kernels.inversions(pi.one_line()) + pi.k
    assert total % 2 == 0, "inversions + 2-cycles is even for any involution"
    return total // 2


def max_length(p: int, q: int) -> int:
    """Largest length on I_{p,q}^±, attained by (1,n)(2,n-1)...(m,n+1-m) with m = min(p,q).

    Equals pq: the top element is the open orbit and the closed orbits sit
    pq below it.
    """
    return p * q


def orbit_dimension(pi: SignedInvolution, convention: str = "geometric") -> int:
    """Length plus the dimension of a closed orbit in SL_n / S(GL_p x GL_q).

    ``"geometric"`` uses 2pq - max_length = pq, so the top element reaches
    the full dimension 2pq. ``"quadratic"`` uses the shift (3pq - m^2)/2 with
    m = min(p,q); it agrees with the geometric one only when p == q and is
    not always an integer, in which case NonIntegerDimension is raised.
    """
    if convention == "geometric":
        return length(pi) + 2 * pi.p * pi.q - max_length(pi.p, pi.q)
    if convention != "quadratic":
        raise ValueError(f"unknown convention {convention!r}")
    m = min(pi.p, pi.q)
    num = 3 * pi.p * pi.q - m * m
    if num % 2:
        raise NonIntegerDimension(
            f"(3pq - m^2)/2 = {num}/2 is not an integer for (p,q)=({pi.p},{pi.q})")
    return length(pi) + num // 2
