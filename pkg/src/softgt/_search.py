"""Exact minimum subcover search over integer bitmasks.

Iterative deepening on the subcover size, bounded above by a greedy cover and
below by a counting bound.  Members are tried in index order, so the first
cover found at the optimal size is the lexicographically smallest index tuple.
"""

from __future__ import annotations

from typing import Sequence

from .errors import PreconditionError, ThresholdExceeded

EXACT_LIMIT = 24


class NotACover(PreconditionError):
    def __init__(self, uncovered: int) -> None:
        super().__init__(f"family does not cover the target; uncovered bits {uncovered:#x}")
        self.uncovered = uncovered


def greedy_cover(target: int, masks: Sequence[int]) -> tuple[int, ...]:
    uncovered = target
    chosen = []
    while uncovered:
        j = max(range(len(masks)), key=lambda i: ((masks[i] & uncovered).bit_count(), -i))
        if not masks[j] & uncovered:
            raise NotACover(uncovered)
        chosen.append(j)
        uncovered &= ~masks[j]
    return tuple(sorted(chosen))


def _counting_bound(uncovered: int, masks: Sequence[int], start: int) -> int:
    best = 0
    for j in range(start, len(masks)):
        gain = (masks[j] & uncovered).bit_count()
        if gain > best:
            best = gain
    if best == 0:
        return len(masks) + 1
    return -(-uncovered.bit_count() // best)


def minimum_cover(
    target: int,
    members: Sequence[int],
    *,
    limit: int = EXACT_LIMIT,
) -> tuple[int, tuple[int, ...]]:
    """Smallest subfamily of ``members`` whose union contains ``target``.

    Returns ``(size, indices)`` with ``indices`` the lexicographically
    smallest optimal index tuple.  Raises ``NotACover`` when the whole family
    misses part of ``target`` and ``ThresholdExceeded`` above ``limit`` members.
    """
    if len(members) > limit:
        raise ThresholdExceeded(f"exact subcover search is limited to {limit} members, got {len(members)}")
    masks = [m & target for m in members]
    n = len(masks)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    if suffix[0] != target:
        raise NotACover(target & ~suffix[0])
    if target == 0:
        return 0, ()

    def search(start: int, uncovered: int, budget: int) -> tuple[int, ...] | None:
        if not uncovered:
            return ()
        if budget == 0 or suffix[start] & uncovered != uncovered:
            return None
        if _counting_bound(uncovered, masks, start) > budget:
            return None
        for j in range(start, n):
            if masks[j] & uncovered:
                rest = search(j + 1, uncovered & ~masks[j], budget - 1)
                if rest is not None:
                    return (j,) + rest
            # members after j alone can no longer finish the cover
            if suffix[j + 1] & uncovered != uncovered:
                return None
        return None

    upper = len(greedy_cover(target, masks))
    for k in range(_counting_bound(target, masks, 0), upper + 1):
        found = search(0, target, k)
        if found is not None:
            return len(found), found
    raise AssertionError("greedy cover exists, exact search must succeed")  # pragma: no cover
