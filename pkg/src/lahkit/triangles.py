"""Exact triangles of higher-level Stirling and Lah numbers.

Five families are provided, all as Python ints (unbounded):

* ``stirling1_hl`` -- Stirling numbers of the first kind with level ``s``
* ``stirling2_hl`` -- Stirling numbers of the second kind with level ``s``
* ``lah_higher_level`` -- Lah numbers with level ``s`` (combinatorial)
* ``lah_order`` -- Lah numbers of order ``s`` (Stirling product)
* ``lr_lah`` -- ``(s, r)``-Lah numbers, elements ``1..r`` in distinct lists

Every family obeys a triangular recurrence whose row ``n`` depends only on
row ``n - 1``, so values are produced row by row into an append-only cache
keyed by ``(kind, s)``. The cache is safe to share between threads.

Powers follow Python's convention, ``0 ** 0 == 1`` and ``0 ** s == 0``.
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from math import factorial

from .errors import ParameterError

__all__ = [
    "Family",
    "TriangleKind",
    "TriangleTable",
    "STIRLING1",
    "STIRLING2",
    "HLAH",
    "OLAH",
    "check_level",
    "lrlah_kind",
    "stirling1_hl",
    "stirling2_hl",
    "lah_higher_level",
    "lah_order",
    "lah_order_via_stirling",
    "lr_lah",
    "lah_hl_explicit",
    "signed_value",
    "closed_form",
    "value",
    "triangle",
]


class Family(enum.Enum):
    STIRLING1 = "stirling1"
    STIRLING2 = "stirling2"
    HLAH = "hlah"
    OLAH = "olah"
    LRLAH = "lrlah"


@dataclass(frozen=True)
class TriangleKind:
    """A number family, plus ``r`` for the ``(s, r)``-Lah family."""

    family: Family
    r: int | None = None

    def __post_init__(self):
        if self.family is Family.LRLAH:
            if not _is_int(self.r) or self.r < 0:
                raise ParameterError(f"lrlah requires an integer r >= 0, got {self.r!r}")
        elif self.r is not None:
            raise ParameterError(f"{self.family.value} takes no r parameter")

    @classmethod
    def parse(cls, name: str, r: int | None = None) -> "TriangleKind":
        try:
            family = Family(name)
        except ValueError:
            names = ", ".join(f.value for f in Family)
            raise ParameterError(f"unknown kind {name!r} (expected one of {names})") from None
        return cls(family, r)

    def __str__(self):
        if self.family is Family.LRLAH:
            return f"lrlah(r={self.r})"
        return self.family.value


STIRLING1 = TriangleKind(Family.STIRLING1)
STIRLING2 = TriangleKind(Family.STIRLING2)
HLAH = TriangleKind(Family.HLAH)
OLAH = TriangleKind(Family.OLAH)


def lrlah_kind(r: int) -> TriangleKind:
    return TriangleKind(Family.LRLAH, r)


@dataclass(frozen=True)
class TriangleTable:
    kind: TriangleKind
    s: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def nmax(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> int:
        if k > n:
            return 0
        return self.rows[n][k]


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def check_level(s) -> int:
    if not _is_int(s) or s < 1:
        raise ParameterError(f"level s must be a positive integer, got {s!r}")
    return s


def _check_index(name, value) -> int:
    if not _is_int(value) or value < 0:
        raise ParameterError(f"{name} must be a non-negative integer, got {value!r}")
    return value


def _next_row(kind: TriangleKind, s: int, n: int, prev: tuple[int, ...]) -> tuple[int, ...]:
    """Row ``n`` from row ``n - 1`` (``prev`` has length ``n``)."""
    family = kind.family
    if family is Family.LRLAH:
        r = kind.r
        if n < r:
            return (0,) * (n + 1)
        if n == r:
            return (0,) * n + (1,)
        coeff = lambda k: (n + k - 1) ** s  # noqa: E731
    elif family is Family.HLAH:
        coeff = lambda k: (n + k - 1) ** s  # noqa: E731
    elif family is Family.OLAH:
        a = (n - 1) ** s
        coeff = lambda k: a + k**s  # noqa: E731
    elif family is Family.STIRLING1:
        a = (n - 1) ** s
        coeff = lambda k: a  # noqa: E731
    else:
        coeff = lambda k: k**s  # noqa: E731

    row = [0] * (n + 1)
    for k in range(1, n):
        row[k] = prev[k - 1] + coeff(k) * prev[k]
    row[n] = prev[n - 1]
    return tuple(row)


class _RowCache:
    # Rows are immutable tuples appended under the lock; appending a finished
    # row is the publication step, so readers never see a partial row.

    def __init__(self, kind: TriangleKind, s: int):
        self.kind = kind
        self.s = s
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(rows) <= n:
                rows.append(_next_row(self.kind, self.s, len(rows), rows[-1]))
        return rows[n]


_caches: dict[tuple[TriangleKind, int], _RowCache] = {}
_caches_lock = threading.Lock()


def _cache(kind: TriangleKind, s: int) -> _RowCache:
    key = (kind, s)
    cache = _caches.get(key)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(key, _RowCache(kind, s))
    return cache


def clear_cache() -> None:
    """Drop all memoized rows."""
    with _caches_lock:
        _caches.clear()


def value(kind: TriangleKind, n: int, k: int, s: int) -> int:
    """Entry ``(n, k)`` of the level-``s`` triangle of ``kind``."""
    check_level(s)
    _check_index("n", n)
    _check_index("k", k)
    if k > n:
        return 0
    return _cache(kind, s).row(n)[k]


def stirling1_hl(n: int, k: int, s: int) -> int:
    return value(STIRLING1, n, k, s)


def stirling2_hl(n: int, k: int, s: int) -> int:
    return value(STIRLING2, n, k, s)


def lah_higher_level(n: int, k: int, s: int) -> int:
    """Lah number with level ``s``.

    Counts ordered ``s``-tuples of partitions of ``[n]`` into ``k`` lists
    whose block-leader sets coincide.

    >>> lah_higher_level(4, 3, 2)
    56
    """
    return value(HLAH, n, k, s)


def lah_order(n: int, k: int, s: int) -> int:
    """Lah number of order ``s``.

    >>> lah_order(4, 3, 2)
    28
    """
    return value(OLAH, n, k, s)


def lr_lah(n: int, k: int, s: int, r: int) -> int:
    """``(s, r)``-Lah number.

    Seeded at row ``n = r`` with a single 1 on the diagonal; rows with
    ``0 < n < r`` are identically zero and ``lr_lah(0, 0, s, r) == 1``.
    """
    return value(lrlah_kind(r), n, k, s)


def lah_order_via_stirling(n: int, k: int, s: int) -> int:
    """Order-``s`` Lah number as a sum of Stirling products over ``j = k..n``."""
    check_level(s)
    _check_index("n", n)
    _check_index("k", k)
    return sum(stirling1_hl(n, j, s) * stirling2_hl(j, k, s) for j in range(k, n + 1))


def lah_hl_explicit(n: int, k: int, s: int, r: int = 0) -> int:
    """Level-``s`` Lah number from the explicit sum over increasing tuples.

    Sums ``prod_m (2*j_m - (m + 1)) ** s`` over ``r + 1 <= j_1 < ... <
    j_{n-k} <= n``. With ``r >= 2`` this is the ``(s, r)``-Lah number for
    ``n >= r``; rows ``0 < n < r`` return 0 to match :func:`lr_lah`.
    """
    check_level(s)
    _check_index("n", n)
    _check_index("k", k)
    _check_index("r", r)
    if k > n or 0 < n < r:
        return 0
    length = n - k

    def walk(m: int, start: int) -> int:
        if m > length:
            return 1
        total = 0
        for j in range(start, n - (length - m) + 1):
            base = 2 * j - (m + 1)
            if base == 0:
                continue
            total += base**s * walk(m + 1, j + 1)
        return total

    return walk(1, r + 1)


_SIGNED = (Family.STIRLING1, Family.STIRLING2, Family.OLAH)


def signed_value(kind: TriangleKind, n: int, k: int, s: int) -> int:
    if kind.family not in _SIGNED:
        raise ParameterError(f"no signed variant is defined for {kind}")
    v = value(kind, n, k, s)
    return -v if (n + k) % 2 else v


CLOSED_FORM_CASES = ("k_eq_1", "k_eq_n_minus_1")


def closed_form(kind: TriangleKind, case: str, n: int, s: int) -> int:
    """Closed forms of the two Lah families at ``k = 1`` and ``k = n - 1``."""
    check_level(s)
    _check_index("n", n)
    if n < 1:
        raise ParameterError("closed forms need n >= 1")
    if case not in CLOSED_FORM_CASES:
        raise ParameterError(f"unknown case {case!r}")
    if kind.family is Family.HLAH:
        if case == "k_eq_1":
            return factorial(n) ** s
        return 2**s * sum(j**s for j in range(1, n))
    if kind.family is Family.OLAH:
        if case == "k_eq_1":
            out = 1
            for i in range(1, n + 1):
                out *= (n - i) ** s + 1
            return out
        return sum(2 * j**s for j in range(1, n))
    raise ParameterError(f"no closed form for {kind}")


def triangle(kind: TriangleKind, s: int, nmax: int) -> TriangleTable:
    check_level(s)
    _check_index("nmax", nmax)
    cache = _cache(kind, s)
    rows = tuple(cache.row(n) for n in range(nmax + 1))
    return TriangleTable(kind, s, rows)
