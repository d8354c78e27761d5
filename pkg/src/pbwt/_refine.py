"""One round of rank refinement shared by the forward sort and the inverter."""

from __future__ import annotations

import numpy as np

_ARANGE: dict[int, np.ndarray] = {}


def _arange(n: int) -> np.ndarray:
    a = _ARANGE.get(n)
    if a is None:
        if len(_ARANGE) > 8:
            _ARANGE.clear()
        a = _ARANGE[n] = np.arange(n)
    return a


def refine(ranks: np.ndarray, keys: np.ndarray):
    """Stable-sort indices by ``(ranks, keys)`` and re-rank the groups.

    Returns ``(new_ranks, order, is_permutation)`` where ``new_ranks[i]`` is the
    0-based sorted position of the first member of the group holding ``i``,
    ``order`` lists indices in sorted order and ``is_permutation`` is True when
    every group is a singleton.

    Both arrays hold small non-negative integers, so the pair is packed into
    one int64 key and sorted once.
    """
    n = ranks.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.intp), True
    ranks = ranks.astype(np.int64, copy=False)
    keys = keys.astype(np.int64, copy=False)
    combined = ranks * (int(keys.max()) + 1) + keys
    order = np.argsort(combined, kind="stable")
    c = combined[order]
    head = np.empty(n, dtype=bool)
    head[0] = True
    np.not_equal(c[1:], c[:-1], out=head[1:])
    starts = np.maximum.accumulate(np.where(head, _arange(n), 0))
    new_ranks = np.empty(n, dtype=np.int64)
    new_ranks[order] = starts
    return new_ranks, order, bool(head.all())
