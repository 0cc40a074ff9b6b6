"""Pure-Python leader-profile enumeration (fallback for ``_kernels``)."""

LISTS, CYCLES, SETS = 0, 1, 2

# Above this n the compiled kernel's uint64 accumulators could overflow.
KERNEL_MAX_N = 19


def leader_profile(n, k, weighting, r):
    """Weighted partition counts of ``[n]`` into ``k`` blocks, by leader mask.

    Set partitions are walked as restricted growth strings; element ``i``
    (0-based) either joins an open block or opens block number ``blocks``,
    in which case it is that block's leader and bit ``i`` of the mask is
    set. Block weights are built incrementally: joining a block of size
    ``c`` multiplies by ``c + 1`` for lists and ``c`` for cycles. The first
    ``r`` elements are forced to open new blocks.
    """
    profile = {}
    if n == 0:
        if k == 0:
            profile[0] = 1
        return profile
    if r > k or k > n or k == 0:
        return profile

    sizes = [0] * n

    def walk(i, blocks, mask, weight):
        if i == n:
            if blocks == k:
                profile[mask] = profile.get(mask, 0) + weight
            return
        if blocks + (n - i) < k:
            return
        if i >= r:
            for b in range(blocks):
                c = sizes[b]
                if weighting == LISTS:
                    factor = c + 1
                elif weighting == CYCLES:
                    factor = c
                else:
                    factor = 1
                sizes[b] = c + 1
                walk(i + 1, blocks, mask, weight * factor)
                sizes[b] = c
        if blocks < k:
            sizes[blocks] = 1
            walk(i + 1, blocks + 1, mask | (1 << i), weight)
            sizes[blocks] = 0

    walk(0, 0, 0, 1)
    return profile
