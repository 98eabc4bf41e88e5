"""The bijection between signed (p,q)-involutions and weighted Delannoy paths.

``phi`` peels off the largest entry ``n`` repeatedly:

* ``n`` fixed with ``+``: east step into the current corner;
* ``n`` fixed with ``-``: north step;
* ``n`` in a 2-cycle ``(i, n)``: diagonal step labelled ``i``; the cycle is
  dropped and every entry larger than ``i`` is decreased by one.

``psi`` replays the path from the origin and undoes each move.
"""

from __future__ import annotations

from .errors import LabelOutOfRange
from .involutions import SignedInvolution
from .paths import Step, WeightedDelannoyPath


def phi(pi: SignedInvolution) -> WeightedDelannoyPath:
    cycles = [list(c) for c in pi.cycles]
    signs = dict(pi.fixed)
    n = pi.n
    backwards = []
    while n > 0:
        if n in signs:
            backwards.append(Step("E" if signs.pop(n) == "+" else "N"))
            n -= 1
            continue
        idx = next(j for j, (_, b) in enumerate(cycles) if b == n)
        i = cycles.pop(idx)[0]
        backwards.append(Step("D", i))
        for c in cycles:
            c[0] -= c[0] > i
            c[1] -= c[1] > i
        signs = {(c - 1 if c > i else c): s for c, s in signs.items()}
        n -= 2
    return WeightedDelannoyPath(pi.p, pi.q, tuple(reversed(backwards)))


def psi(path: WeightedDelannoyPath) -> SignedInvolution:
    cycles: list[tuple[int, int]] = []
    fixed: list[tuple[int, str]] = []
    n = 0
    for step in path.steps:
        if step.dir in ("E", "N"):
            n += 1
            fixed.append((n, "+" if step.dir == "E" else "-"))
            continue
        i = step.label
        if i is None or not 1 <= i <= n + 1:
            raise LabelOutOfRange(f"label {i!r} not in 1..{n + 1}")
        cycles = [(a + (a >= i), b + (b >= i)) for a, b in cycles]
        fixed = [(c + (c >= i), s) for c, s in fixed]
        n += 2
        cycles.append((i, n))
    return SignedInvolution(tuple(sorted(cycles)), tuple(sorted(fixed)),
                            path.p, path.q)
