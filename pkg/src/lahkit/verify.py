"""Invariant suites behind ``lahkit verify``.

Each check scans a bounded range and reports the first counterexample it
meets. Suites are ``oracle``, ``identities``, ``inequalities`` and
``closed-forms``; ``all`` runs every one.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterator

from . import oracle
from . import polynomials as P
from . import triangles as T
from .errors import ParameterError


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        return f"FAIL {self.name}: {self.detail}"


# A check yields descriptions of counterexamples; an empty iteration passes.
Check = Callable[[int, int], Iterator[str]]


def _cells(nmax, kmin=0):
    for n in range(nmax + 1):
        for k in range(kmin, n + 1):
            yield n, k


def _oracle_family(kind):
    def check(nmax, smax):
        for s in range(1, smax + 1):
            for n, k in _cells(nmax):
                got, want = oracle.oracle_count(kind, n, k, s), T.value(kind, n, k, s)
                if got != want:
                    yield f"{kind} n={n} k={k} s={s}: oracle {got} != recurrence {want}"

    return check


def _oracle_lrlah(nmax, smax):
    for r in range(4):
        kind = T.lrlah_kind(r)
        for s in range(1, smax + 1):
            for n, k in _cells(nmax):
                got, want = oracle.oracle_count(kind, n, k, s), T.lr_lah(n, k, s, r)
                if got != want:
                    yield f"r={r} n={n} k={k} s={s}: oracle {got} != recurrence {want}"


def _oracle_classic(nmax, smax):
    for n, k in _cells(nmax, 1):
        got = oracle.classic_count(n, k, oracle.BlockWeighting.LISTS)
        want = comb(n - 1, k - 1) * factorial(n) // factorial(k)
        if got != want:
            yield f"n={n} k={k}: {got} != {want}"


def _definition(nmax, smax):
    for s in range(1, smax + 1):
        for n, k in _cells(nmax):
            if T.lah_order(n, k, s) != T.lah_order_via_stirling(n, k, s):
                yield f"n={n} k={k} s={s}"


def _explicit(nmax, smax):
    for s in range(1, smax + 1):
        for n, k in _cells(nmax):
            if T.lah_hl_explicit(n, k, s) != T.lah_higher_level(n, k, s):
                yield f"n={n} k={k} s={s}"
            for r in range(2, 4):
                if T.lah_hl_explicit(n, k, s, r) != T.lr_lah(n, k, s, r):
                    yield f"r={r} n={n} k={k} s={s}"


def _lr_reduction(nmax, smax):
    for s in range(1, smax + 1):
        for n, k in _cells(nmax):
            h = T.lah_higher_level(n, k, s)
            if not (T.lr_lah(n, k, s, 0) == T.lr_lah(n, k, s, 1) == h):
                yield f"n={n} k={k} s={s}"


def _s1_collapse(nmax, smax):
    for n, k in _cells(nmax):
        classic = 1 if n == k == 0 else (comb(n - 1, k - 1) * factorial(n) // factorial(k) if k else 0)
        if not (T.lah_higher_level(n, k, 1) == T.lah_order(n, k, 1) == classic):
            yield f"n={n} k={k}"


def _rising_to_falling(nmax, smax):
    for s in range(1, smax + 1):
        for n in range(nmax + 1):
            q = P.convert(P.Polynomial.basis_element(P.rising(s), n), P.falling(s))
            want = tuple(T.lah_order(n, k, s) for k in range(n + 1))
            if q.coeffs != want:
                yield f"n={n} s={s}: {q.coeffs} != {want}"
            e = P.Polynomial.basis_element(P.rising(s), n)
            for x in range(-3, 4):
                if P.evaluate(e, x) != P.evaluate(q, x):
                    yield f"n={n} s={s} x={x}: values differ"


def _falling_to_rising(nmax, smax):
    for s in range(1, smax + 1):
        for n in range(nmax + 1):
            q = P.convert(P.Polynomial.basis_element(P.falling(s), n), P.rising(s))
            want = tuple(T.signed_value(T.OLAH, n, k, s) for k in range(n + 1))
            if q.coeffs != want:
                yield f"n={n} s={s}: {q.coeffs} != {want}"


def _bases(s):
    return (P.STANDARD, P.rising(s), P.falling(s))


def _inverse_pairs(nmax, smax):
    size = nmax + 1
    for s in range(1, smax + 1):
        for a in _bases(s):
            for b in _bases(s):
                m = P.transition_matrix(a, b, size) @ P.transition_matrix(b, a, size)
                if not m.is_identity():
                    yield f"{a}->{b}->{a} at s={s}"


def _factorization(nmax, smax):
    size = nmax + 1
    for s in range(1, smax + 1):
        direct = P.transition_matrix(P.rising(s), P.falling(s), size)
        chained = P.transition_matrix(P.rising(s), P.STANDARD, size) @ P.transition_matrix(
            P.STANDARD, P.falling(s), size
        )
        if direct != chained:
            yield f"s={s}"


def _unitriangular(nmax, smax):
    size = nmax + 1
    for s in range(1, smax + 1):
        for a in _bases(s):
            for b in _bases(s):
                if not P.transition_matrix(a, b, size).is_lower_unitriangular():
                    yield f"{a}->{b} at s={s}"


def _steppers(nmax, smax):
    for s in range(1, smax + 1):
        for n in range(1, nmax):
            if P.row_poly_hl_step(P.row_poly_hl(n, s), n, s) != P.row_poly_hl(n + 1, s):
                yield f"L step n={n} s={s}"
            if P.q_step(P.q_poly(n, s), n, s) != P.q_poly(n + 1, s):
                yield f"Q step n={n} s={s}"
            if P.lah_order_poly_step(P.lah_order_poly(n, s), n, s) != P.lah_order_poly(n + 1, s):
                yield f"order-s step n={n} s={s}"
            for r in range(0, 4):
                if n >= max(r, 1):
                    if P.lr_row_poly_step(P.lr_row_poly(n, s, r), n, s) != P.lr_row_poly(n + 1, s, r):
                        yield f"(s,r) step n={n} s={s} r={r}"


def _lemma_forms(nmax, smax):
    for s in range(1, smax + 1):
        for n in range(1, nmax + 1):
            if P.a_poly(n, s, "definition") != P.a_poly(n, s, "derivative"):
                yield f"A n={n} s={s}"
            if P.b_poly(n, s, "definition") != P.b_poly(n, s, "derivative"):
                yield f"B n={n} s={s}"


def _chain(nmax, smax):
    for s in range(1, smax + 1):
        for n, k in _cells(nmax, 1):
            h, o = T.lah_higher_level(n, k, s), T.lah_order(n, k, s)
            c1, c2 = T.stirling1_hl(n, k, s), T.stirling2_hl(n, k, s)
            if not (h >= o >= c1 >= c2):
                yield f"n={n} k={k} s={s}: {h}, {o}, {c1}, {c2}"


def _ratio(nmax, smax):
    for s in range(1, smax + 1):
        for n in range(2, nmax + 1):
            if 2 ** (s - 1) * T.lah_order(n, n - 1, s) != T.lah_higher_level(n, n - 1, s):
                yield f"n={n} s={s}"


def _closed(case):
    def check(nmax, smax):
        for kind in (T.HLAH, T.OLAH):
            for s in range(1, smax + 1):
                for n in range(1, nmax + 1):
                    k = 1 if case == "k_eq_1" else n - 1
                    got, want = T.closed_form(kind, case, n, s), T.value(kind, n, k, s)
                    if got != want:
                        yield f"{kind} n={n} s={s}: {got} != {want}"

    return check


def _small_cases(nmax, smax):
    for s in range(1, smax + 1):
        if nmax >= 2 and T.lah_order(2, 1, s) != 2:
            yield f"olah(2,1,{s})"
        if nmax >= 3 and not (T.lah_order(3, 1, s) == T.lah_order(3, 2, s) == 2 ** (s + 1) + 2):
            yield f"olah(3,1|2,{s})"


SUITES: dict[str, dict[str, Check]] = {
    "oracle": {
        "oracle.hlah": _oracle_family(T.HLAH),
        "oracle.stirling1": _oracle_family(T.STIRLING1),
        "oracle.stirling2": _oracle_family(T.STIRLING2),
        "oracle.lrlah": _oracle_lrlah,
        "oracle.classic_lah": _oracle_classic,
    },
    "identities": {
        "identities.definition": _definition,
        "identities.explicit_formula": _explicit,
        "identities.lr_reduction": _lr_reduction,
        "identities.s1_collapse": _s1_collapse,
        "identities.rising_to_falling": _rising_to_falling,
        "identities.falling_to_rising": _falling_to_rising,
        "identities.inverse_pairs": _inverse_pairs,
        "identities.factorization": _factorization,
        "identities.unitriangular": _unitriangular,
        "identities.steppers": _steppers,
        "identities.lemma_forms": _lemma_forms,
    },
    "inequalities": {
        "inequalities.chain": _chain,
        "inequalities.ratio": _ratio,
    },
    "closed-forms": {
        "closed_forms.k_eq_1": _closed("k_eq_1"),
        "closed_forms.k_eq_n_minus_1": _closed("k_eq_n_minus_1"),
        "closed_forms.small_cases": _small_cases,
    },
}


def run_suite(suite: str, nmax: int, smax: int) -> list[CheckResult]:
    """Run one suite (or ``all``); results are sorted by check name."""
    if suite == "all":
        checks = {name: fn for group in SUITES.values() for name, fn in group.items()}
    elif suite in SUITES:
        checks = SUITES[suite]
    else:
        raise ParameterError(f"unknown suite {suite!r}")
    if nmax < 0:
        raise ParameterError("nmax must be >= 0")
    if smax < 1:
        raise ParameterError("smax must be >= 1")
    if any(name.startswith("oracle.") for name in checks) and nmax > oracle.max_n():
        raise ParameterError(f"oracle suite needs nmax <= {oracle.max_n()} (LAHKIT_MAX_N)")

    results = []
    for name in sorted(checks):
        first = next(iter(checks[name](nmax, smax)), None)
        results.append(CheckResult(name, first is None, first or ""))
    return results
