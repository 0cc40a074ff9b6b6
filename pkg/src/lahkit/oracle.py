"""Brute-force combinatorial ground truth.

Partitions of ``[n]`` into ``k`` blocks are enumerated directly and grouped
by their set of block leaders (block minima). Each set partition carries a
multiplicative weight, the number of ways to order its blocks as lists
(``|b|!``), as cycles (``(|b| - 1)!``), or not at all (1). A profile maps
each leader set to the total weight ``g`` of partitions having it; the
level-``s`` count is then ``sum(g ** s)``, the number of ordered
``s``-tuples of partitions sharing a leader set.

Nothing here uses a recurrence, so it checks :mod:`lahkit.triangles`
independently.
"""
from __future__ import annotations

import enum
import os
from itertools import permutations
from typing import Iterator

from . import _backend
from .errors import OracleLimitError, ParameterError
from .triangles import Family, TriangleKind, check_level

__all__ = [
    "BlockWeighting",
    "max_n",
    "set_partitions",
    "list_partitions",
    "enumerate_profiles",
    "oracle_count",
    "classic_count",
]

DEFAULT_MAX_N = 12


class BlockWeighting(enum.Enum):
    LISTS = 0
    CYCLES = 1
    SETS = 2


def max_n() -> int:
    """Enumeration cap, read from ``LAHKIT_MAX_N`` (default 12)."""
    raw = os.environ.get("LAHKIT_MAX_N")
    if not raw:
        return DEFAULT_MAX_N
    try:
        cap = int(raw)
    except ValueError:
        raise ParameterError(f"LAHKIT_MAX_N must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ParameterError("LAHKIT_MAX_N must be non-negative")
    return cap


def _check(n, k, r):
    for name, v in (("n", n), ("k", k), ("r", r)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ParameterError(f"{name} must be a non-negative integer, got {v!r}")
    cap = max_n()
    if n > cap:
        raise OracleLimitError(f"oracle enumeration is limited to n <= {cap} (set LAHKIT_MAX_N)")


def set_partitions(n: int, k: int | None = None, r: int = 0) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield set partitions of ``{1..n}`` as tuples of blocks ordered by minimum.

    Generated as restricted growth strings. With ``k`` given only partitions
    into exactly ``k`` blocks are produced; elements ``1..r`` are kept in
    distinct blocks by pruning during generation.
    """
    _check(n, 0 if k is None else k, r)
    if n == 0:
        if not k:
            yield ()
        return
    blocks: list[list[int]] = []

    def walk(x):
        if x > n:
            if k is None or len(blocks) == k:
                yield tuple(tuple(b) for b in blocks)
            return
        if k is not None and len(blocks) + (n - x + 1) < k:
            return
        if x > r:
            for b in blocks:
                b.append(x)
                yield from walk(x + 1)
                b.pop()
        if k is None or len(blocks) < k:
            blocks.append([x])
            yield from walk(x + 1)
            blocks.pop()

    yield from walk(1)


def list_partitions(n: int, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield partitions of ``{1..n}`` into ``k`` lists, every ordering explicit."""

    def expand(blocks):
        if not blocks:
            yield ()
            return
        for head in permutations(blocks[0]):
            for rest in expand(blocks[1:]):
                yield (head,) + rest

    for p in set_partitions(n, k):
        yield from expand(p)


def _mask_to_leaders(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def enumerate_profiles(n: int, k: int, w: BlockWeighting, r: int = 0) -> dict[tuple[int, ...], int]:
    """Leader profile: leader set -> total weight of partitions having it.

    Partitions placing two of ``1..r`` in one block are excluded. The empty
    partition of ``[0]`` satisfies every restriction, so ``n = k = 0`` gives
    ``{(): 1}``; otherwise ``r > k`` gives an empty profile.

    >>> enumerate_profiles(4, 3, BlockWeighting.LISTS)
    {(1, 2, 3): 6, (1, 2, 4): 4, (1, 3, 4): 2}
    """
    _check(n, k, r)
    raw = _backend.leader_profile(n, k, BlockWeighting(w).value, r)
    return {_mask_to_leaders(m): g for m, g in sorted(raw.items(), key=lambda kv: _mask_to_leaders(kv[0]))}


_WEIGHTING = {
    Family.HLAH: BlockWeighting.LISTS,
    Family.LRLAH: BlockWeighting.LISTS,
    Family.STIRLING1: BlockWeighting.CYCLES,
    Family.STIRLING2: BlockWeighting.SETS,
}


def oracle_count(kind: TriangleKind, n: int, k: int, s: int) -> int:
    """Count ordered ``s``-tuples of same-leader-set partitions by enumeration."""
    check_level(s)
    if kind.family not in _WEIGHTING:
        raise ParameterError(f"the oracle has no combinatorial model for {kind}")
    r = kind.r if kind.family is Family.LRLAH else 0
    profile = enumerate_profiles(n, k, _WEIGHTING[kind.family], r)
    return sum(g**s for g in profile.values())


def classic_count(n: int, k: int, w: BlockWeighting) -> int:
    """Total weighted count, i.e. the classical (level 1) number."""
    return sum(enumerate_profiles(n, k, w).values())
