"""Delannoy, weighted Delannoy and Grassmann lattice paths.

Paths run from the origin to ``(p, q)`` with steps ``E=(1,0)``, ``N=(0,1)``
and ``D=(1,1)``. A diagonal step leaving ``(a, b)`` has weight ``a+b+1``;
in a weighted path it carries a label in ``1..a+b+1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import prod
from typing import Iterator

from .errors import InvalidPath, LabelOutOfRange, ShapeMismatch

_MOVES = {"E": (1, 0), "N": (0, 1), "D": (1, 1)}


@dataclass(frozen=True)
class Step:
    dir: str
    label: int | None = None

    def to_dict(self) -> dict:
        if self.label is None:
            return {"dir": self.dir}
        return {"dir": self.dir, "label": self.label}

    def __str__(self) -> str:
        return self.dir if self.label is None else f"D({self.label})"


E, N = Step("E"), Step("N")


def D(label: int | None = None) -> Step:
    return Step("D", label)


def _walk(steps) -> Iterator[tuple[int, int, Step]]:
    """Yield ``(a, b, step)`` with ``(a, b)`` the point the step leaves."""
    a = b = 0
    for s in steps:
        yield a, b, s
        da, db = _MOVES[s.dir]
        a, b = a + da, b + db


@dataclass(frozen=True)
class DelannoyPath:
    p: int
    q: int
    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        a = b = 0
        for s in self.steps:
            if s.dir not in _MOVES:
                raise InvalidPath(f"unknown step direction {s.dir!r}")
            if s.dir != "D" and s.label is not None:
                raise InvalidPath("only diagonal steps carry labels")
            da, db = _MOVES[s.dir]
            a, b = a + da, b + db
        if (a, b) != (self.p, self.q):
            raise InvalidPath(f"path ends at {(a, b)}, expected {(self.p, self.q)}")
        self._check_labels()

    def _check_labels(self):
        if any(s.label is not None for s in self.steps):
            raise InvalidPath("unweighted Delannoy path must not carry labels")

    def points(self) -> list[tuple[int, int]]:
        pts = [(a, b) for a, b, _ in _walk(self.steps)]
        pts.append((self.p, self.q))
        return pts

    def diagonal_starts(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b, s in _walk(self.steps) if s.dir == "D"]

    def unlabelled(self) -> "DelannoyPath":
        return DelannoyPath(self.p, self.q, tuple(Step(s.dir) for s in self.steps))

    def word(self) -> str:
        return " ".join(str(s) for s in self.steps)

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "steps": [s.to_dict() for s in self.steps]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict):
        steps = tuple(Step(s["dir"], s.get("label")) for s in data["steps"])
        return cls(data["p"], data["q"], steps)

    @classmethod
    def from_json(cls, text: str):
        return cls.from_dict(json.loads(text))


class WeightedDelannoyPath(DelannoyPath):
    """Delannoy path whose diagonal steps from ``(a, b)`` carry labels 1..a+b+1."""

    def _check_labels(self):
        for a, b, s in _walk(self.steps):
            if s.dir != "D":
                continue
            if s.label is None:
                raise InvalidPath(f"diagonal step from {(a, b)} has no label")
            if isinstance(s.label, bool) or not isinstance(s.label, int) \
                    or not 1 <= s.label <= a + b + 1:
                raise LabelOutOfRange(
                    f"label {s.label!r} on diagonal from {(a, b)} not in 1..{a + b + 1}")


def enumerate_delannoy(p: int, q: int) -> Iterator[DelannoyPath]:
    """All Delannoy paths to ``(p, q)``, lexicographic with E < N < D."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    return (_trusted(DelannoyPath, p, q, steps) for steps in _step_tuples(p, q))


_D0 = Step("D")


def _step_tuples(p: int, q: int) -> Iterator[tuple[Step, ...]]:
    # Explicit stack instead of nested generators: one frame per path, not per step.
    stack = [(0, 0, ())]
    while stack:
        a, b, acc = stack.pop()
        if a == p and b == q:
            yield acc
            continue
        # pushed in reverse so E is popped first
        if a < p and b < q:
            stack.append((a + 1, b + 1, acc + (_D0,)))
        if b < q:
            stack.append((a, b + 1, acc + (N,)))
        if a < p:
            stack.append((a + 1, b, acc + (E,)))


def _trusted(cls, p, q, steps):
    """Build a path known to be valid by construction, skipping validation."""
    obj = object.__new__(cls)
    object.__setattr__(obj, "p", p)
    object.__setattr__(obj, "q", q)
    object.__setattr__(obj, "steps", steps)
    return obj


def weight(path: DelannoyPath) -> int:
    """Product of ``a+b+1`` over diagonal steps leaving ``(a, b)``."""
    return prod(a + b + 1 for a, b in path.diagonal_starts())


def diagonal_count(path: DelannoyPath) -> int:
    return sum(1 for s in path.steps if s.dir == "D")


def labellings(path: DelannoyPath) -> Iterator[WeightedDelannoyPath]:
    """Every weighted path over the underlying Delannoy path ``path``."""
    base = path.unlabelled()
    slots = []
    for a, b, s in _walk(base.steps):
        slots.append(range(1, a + b + 2) if s.dir == "D" else (None,))

    def rec(i, acc):
        if i == len(slots):
            yield WeightedDelannoyPath(base.p, base.q, tuple(acc))
            return
        for lab in slots[i]:
            acc.append(Step(base.steps[i].dir, lab))
            yield from rec(i + 1, acc)
            acc.pop()

    return rec(0, [])


def enumerate_weighted(p: int, q: int) -> Iterator[WeightedDelannoyPath]:
    for path in enumerate_delannoy(p, q):
        yield from labellings(path)


def render_text(path: DelannoyPath) -> str:
    """Plain-text picture of the path on its grid (best effort, for docs)."""
    w, h = 2 * path.p + 1, 2 * path.q + 1
    grid = [[" " if (x % 2 or y % 2) else "." for x in range(w)] for y in range(h)]
    for a, b, s in _walk(path.steps):
        x, y = 2 * a, 2 * b
        grid[y][x] = "o"
        if s.dir == "E":
            grid[y][x + 1] = "-"
        elif s.dir == "N":
            grid[y + 1][x] = "|"
        else:
            grid[y + 1][x + 1] = "/" if s.label is None else str(s.label)[-1]
    grid[2 * path.q][2 * path.p] = "o"
    return "\n".join("".join(row).rstrip() for row in reversed(grid))


@dataclass(frozen=True)
class GrassmannPath:
    """N/E lattice path from the origin to ``(q, p)``: q E steps, p N steps."""

    p: int
    q: int
    steps: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if any(s not in ("N", "E") for s in self.steps):
            raise InvalidPath("Grassmann paths use only N and E steps")
        if self.steps.count("E") != self.q or self.steps.count("N") != self.p:
            raise InvalidPath(f"need {self.q} E and {self.p} N steps")

    def column_heights(self) -> list[int]:
        """Height of the path over each unit column 0..q-1."""
        heights, h = [], 0
        for s in self.steps:
            if s == "N":
                h += 1
            else:
                heights.append(h)
        return heights


def enumerate_grassmann(p: int, q: int) -> Iterator[GrassmannPath]:
    """All (p,q) Grassmann paths, lexicographic with E < N."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")

    def rec(e, n_, acc):
        if e == q and n_ == p:
            yield GrassmannPath(p, q, tuple(acc))
            return
        if e < q:
            acc.append("E")
            yield from rec(e + 1, n_, acc)
            acc.pop()
        if n_ < p:
            acc.append("N")
            yield from rec(e, n_ + 1, acc)
            acc.pop()

    return rec(0, 0, [])


def grassmann_dimension(path: GrassmannPath) -> int:
    """Number of unit squares of the q-by-p box lying weakly above the path."""
    return sum(path.p - h for h in path.column_heights())


def grassmann_below(i: GrassmannPath, j: GrassmannPath) -> bool:
    """True when ``i`` never rises above ``j``."""
    if (i.p, i.q) != (j.p, j.q):
        raise ShapeMismatch(f"paths have shapes {(i.p, i.q)} and {(j.p, j.q)}")
    return all(a <= b for a, b in zip(i.column_heights(), j.column_heights()))
