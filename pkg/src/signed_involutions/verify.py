"""Cross-method verification suites used by ``signed-involutions verify``.

Every check compares two routes that share no code path for the quantity
under test:

====================  ==========================  ===========================
check                 route A                     route B
====================  ==========================  ===========================
alpha                 recurrence table            gamma sum, involution
                                                  enumeration, path weights,
                                                  weighted-path count
gamma                 closed form                 recurrence, enumeration
gamma-aux             closed form                 ratio identities
delannoy              recurrence table            path enumeration
bijection             phi                         psi (round trip both ways)
a-poly                recurrence                  gamma sum, weighted paths
e-poly                recurrence                  length enumeration
e-special             E_{n,n}(0), E_{n,n}(-1)      binomial, trinomial power
d-poly                functional recurrence       enumeration, explicit sum
d-identities          D(1)+D'(1), cyclic residue  alpha, Delannoy number
series                closed form, PDE, curves    alpha table
====================  ==========================  ===========================
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from . import counting, polynomials, series
from .bijection import phi, psi
from .involutions import enumerate_signed, enumerate_signed_k
from .paths import enumerate_delannoy, enumerate_weighted


@dataclass
class Failure:
    check: str
    indices: dict
    detail: str

    def __str__(self):
        idx = ", ".join(f"{k}={v}" for k, v in self.indices.items())
        return f"{self.check} failed at {idx}: {self.detail}"


def _grid(m):
    return [(p, q) for p in range(m + 1) for q in range(m + 1)]


def check_alpha(m: int) -> Iterator[Failure]:
    for p, q in _grid(m):
        ref = counting.alpha(p, q)
        for method in counting.ALPHA_METHODS[1:]:
            got = counting.alpha(p, q, method)
            if got != ref:
                yield Failure("alpha", {"p": p, "q": q, "method": method},
                              f"{got} != recurrence {ref}")


def check_gamma(m: int) -> Iterator[Failure]:
    for p, q in _grid(m):
        for k in range(min(p, q) + 1):
            closed = counting.gamma_closed(k, p, q)
            rec = counting.gamma_recurrence(k, p, q)
            enum = sum(1 for _ in enumerate_signed_k(p, q, k))
            if not closed == rec == enum:
                yield Failure("gamma", {"k": k, "p": p, "q": q},
                              f"closed={closed} recurrence={rec} enumeration={enum}")


def check_gamma_aux(m: int) -> Iterator[Failure]:
    for p, q in _grid(m):
        for k in range(1, min(p, q) + 1):
            res = counting.gamma_aux_checks(k, p, q)
            if not all(res):
                yield Failure("gamma-aux", {"k": k, "p": p, "q": q}, f"results {res}")


def check_delannoy(m: int) -> Iterator[Failure]:
    for p, q in _grid(m):
        n = sum(1 for _ in enumerate_delannoy(p, q))
        if n != counting.delannoy(p, q):
            yield Failure("delannoy", {"p": p, "q": q},
                          f"enumerated {n} != table {counting.delannoy(p, q)}")


def check_bijection(m: int) -> Iterator[Failure]:
    for p, q in _grid(m):
        for pi in enumerate_signed(p, q):
            if psi(phi(pi)) != pi:
                yield Failure("bijection", {"p": p, "q": q, "pi": str(pi)}, "psi(phi(pi)) != pi")
                return
        for w in enumerate_weighted(p, q):
            if phi(psi(w)) != w:
                yield Failure("bijection", {"p": p, "q": q, "path": w.word()}, "phi(psi(W)) != W")
                return


def check_a_poly(m: int) -> Iterator[Failure]:
    for p, q in _grid(m):
        ref = polynomials.a_poly(p, q)
        for method in ("gamma-sum", "path-enumeration"):
            got = polynomials.a_poly(p, q, method)
            if got != ref:
                yield Failure("a-poly", {"p": p, "q": q, "method": method}, f"{got} != {ref}")


def check_e_poly(m: int) -> Iterator[Failure]:
    for p, q in _grid(m):
        ref = polynomials.e_poly(p, q)
        got = polynomials.e_poly(p, q, "length-enumeration")
        if got != ref:
            yield Failure("e-poly", {"p": p, "q": q}, f"{got} != {ref}")


def check_e_special(m: int) -> Iterator[Failure]:
    for n in range(m + 1):
        e = polynomials.e_poly(n, n, "support-histogram")
        if e(0) != comb(2 * n, n):
            yield Failure("e-special", {"n": n, "at": 0}, f"{e(0)} != C(2n,n)")
        if e(-1) != polynomials.central_trinomial(n):
            yield Failure("e-special", {"n": n, "at": -1}, f"{e(-1)} != trinomial")


def check_d_poly(m: int) -> Iterator[Failure]:
    for p, q in _grid(m):
        ref = polynomials.d_poly(p, q, "enumeration")
        for method in ("recurrence", "explicit-formula"):
            got = polynomials.d_poly(p, q, method)
            if got != ref:
                yield Failure("d-poly", {"p": p, "q": q, "method": method}, "mismatch")


def check_d_identities(m: int) -> Iterator[Failure]:
    for p, q in _grid(m):
        d = polynomials.d_poly(p, q)
        if d.coeff(0) != polynomials.d_constant_term(p, q):
            yield Failure("d-constant", {"p": p, "q": q}, f"{d.coeff(0)}")
        if not polynomials.d_derivative_identity(p, q):
            yield Failure("d-derivative", {"p": p, "q": q}, "D(1)+D'(1) != alpha")
        if p and q and not polynomials.root_of_unity_congruence(p, q):
            yield Failure("d-root-of-unity", {"p": p, "q": q}, "residue mismatch")


def check_series(m: int) -> Iterator[Failure]:
    N = max(2 * m, 2)
    v = series.alpha_series(N)
    if series.closed_form_series(N) != v:
        yield Failure("series-closed-form", {"N": N}, "closed form != alpha series")
    res = series.pde_residual(v)
    if any(val for _, val in res.items()):
        yield Failure("series-pde", {"N": N}, "nonzero residual")
    if not series.characteristic_check(min(N, 8)):
        yield Failure("series-characteristic", {"N": min(N, 8)}, "mismatch")
    if not all(series.initial_condition_checks(N)):
        yield Failure("series-initial", {"N": N}, "axis restriction mismatch")
    table = series.involution_table_from_egf(N)
    for (n, r), val in table.items():
        if val != counting.c_involutions(n, r):
            yield Failure("series-involution-egf", {"n": n, "r": r}, f"{val}")


SUITES: dict[str, list[tuple[str, Callable[[int], Iterator[Failure]]]]] = {
    "counting": [("alpha", check_alpha), ("gamma", check_gamma),
                 ("gamma-aux", check_gamma_aux), ("delannoy", check_delannoy)],
    "bijection": [("bijection", check_bijection)],
    "polynomials": [("a-poly", check_a_poly), ("e-poly", check_e_poly),
                    ("e-special", check_e_special), ("d-poly", check_d_poly),
                    ("d-identities", check_d_identities)],
    "series": [("series", check_series)],
}
SUITES["all"] = [c for name in ("counting", "bijection", "polynomials", "series")
                 for c in SUITES[name]]


def run_suite(name: str, m: int) -> Iterator[tuple[str, Failure | None]]:
    """Yield ``(check, first_failure_or_None)`` for each check in the suite."""
    for check, fn in SUITES[name]:
        yield check, next(fn(m), None)
