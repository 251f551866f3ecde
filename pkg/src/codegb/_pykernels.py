"""Pure-Python kernels.  Reference implementation and fallback for _ckernels.

Words are handled as degrevlex keys: two bits per variable holding
``2 - exponent``, variable x_1 in the most significant slot.  Within one
total degree, ascending key order is ascending degrevlex order.
"""

from __future__ import annotations

import heapq

NAME = "python"


def fglm(n: int, sigma_rows, early: bool = False):
    """Enumerate terms in degrevlex order and split them into staircase / heads.

    Returns ``(staircase, emitted)``.  ``staircase`` lists the canonical words
    (masks) in the order they were found.  ``emitted`` lists
    ``(head_mask, tail_mask, square)`` in emission order, where ``square`` is
    the 0-based variable index for ``x_i^2 - 1`` and ``-1`` otherwise.
    With ``early`` the run stops after the first binomial with a standard
    head.
    """
    sigma_rows = [int(s) for s in sigma_rows]
    unit = [1 << (2 * (n - 1 - i)) for i in range(n)]
    one_key = 2 * sum(unit)

    heap: list[tuple[int, int]] = []
    # key -> [insertions, mask, sigma, square]
    pending: dict[int, list[int]] = {}
    staircase: list[int] = []
    canon: dict[int, int] = {}
    emitted: list[tuple[int, int, int]] = []

    def push(deg, key, mask, sig, sq):
        entry = pending.get(key)
        if entry is None:
            pending[key] = [1, mask, sig, sq]
            heapq.heappush(heap, (deg, key))
        else:
            entry[0] += 1

    def admit(mask, key, sig):
        staircase.append(mask)
        canon[sig] = mask
        deg = mask.bit_count() + 1
        for i in range(n):
            bit = 1 << i
            if mask & bit:
                # x_i * w with x_i | w: only x_i^2 itself can pass the
                # insertion-count test, every other such product has a
                # predecessor containing a square.
                if mask == bit:
                    push(2, key - unit[i], bit, 0, i)
            else:
                push(deg, key - unit[i], mask | bit, sig ^ sigma_rows[i], -1)

    admit(0, one_key, 0)
    while heap:
        deg, key = heapq.heappop(heap)
        count, mask, sig, sq = pending.pop(key)
        if count != (1 if sq >= 0 else deg):
            continue
        if sq >= 0:
            emitted.append((mask, 0, sq))
            continue
        tail = canon.get(sig)
        if tail is not None:
            emitted.append((mask, tail, -1))
            if early:
                break
            continue
        admit(mask, key, sig)
    return staircase, emitted


class Reducer:
    """Reduction of standard words (bitmasks) by a fixed list of heads/tails.

    Heads must be sorted ascending in degrevlex so that the first divisor
    found is the smallest one.
    """

    def __init__(self, heads, tails):
        self.heads = [int(h) for h in heads]
        self.tails = [int(t) for t in tails]

    def first_divisor(self, w: int) -> int:
        """Index of the first head dividing ``w``, or -1."""
        for idx, h in enumerate(self.heads):
            if (w & h) == h:
                return idx
        return -1

    def reduce(self, w: int) -> int:
        heads, tails = self.heads, self.tails
        while True:
            for h, t in zip(heads, tails):
                if (w & h) == h:
                    w ^= h ^ t
                    break
            else:
                return w

    def reduce_many(self, words) -> list[int]:
        return [self.reduce(int(w)) for w in words]
