"""Forward transform: rotations, parameterized suffix array, pBWT and LF.

Rank and position arguments are 1-based throughout, matching the usual
presentation of the transform; the arrays stored on :class:`Psa`,
:class:`Pbwt` and :class:`LfMap` are plain tuples of Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from ._refine import refine
from .core import Dist, Mode, PrevString, PString, Static, marker
from .errors import InvalidToken, MalformedInput

Token = Union[int, Static]


@dataclass(frozen=True)
class Psa:
    tau: tuple

    @property
    def n(self) -> int:
        return len(self.tau)

    def inverse(self) -> tuple:
        """``rank_of[k - 1]`` is the rank of rotation ``k``."""
        inv = [0] * len(self.tau)
        for i, k in enumerate(self.tau, 1):
            inv[k - 1] = i
        return tuple(inv)


@dataclass(frozen=True)
class Pbwt:
    tokens: tuple
    mode: Mode = Mode.PREV0

    @property
    def n(self) -> int:
        return len(self.tokens)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]

    def __str__(self):
        return " ".join(str(t) for t in self.tokens)


@dataclass(frozen=True)
class LfMap:
    lf: tuple

    @property
    def n(self) -> int:
        return len(self.lf)

    def __getitem__(self, i):
        return self.lf[i]

    def __iter__(self):
        return iter(self.lf)

    def is_bijection(self) -> bool:
        return sorted(self.lf) == list(range(1, len(self.lf) + 1))


def is_rank(tok) -> bool:
    return isinstance(tok, (int, np.integer)) and not isinstance(tok, bool)


def rotation(T: PString, i: int) -> PString:
    n = len(T)
    if n == 0:
        return T
    k = (i - 1) % n
    return PString(T.symbols[k:] + T.symbols[:k], T.alphabet)


def _require_terminated(T: PString):
    if not T.is_terminated():
        raise MalformedInput(
            f"transform input must end with a single {T.alphabet.terminator!r}: {str(T)!r}"
        )


def _cyclic_gaps(T: PString):
    """Cyclic distance from each parameter position to its previous and next
    occurrence (``n`` when the symbol occurs once). Statics get 0."""
    n = len(T)
    prev_gap = [0] * n
    next_gap = [0] * n
    where = {}
    for p, sym in enumerate(T.symbols):
        if T.alphabet.is_param(sym):
            where.setdefault(sym, []).append(p)
    for occ in where.values():
        m = len(occ)
        for t, p in enumerate(occ):
            q = occ[t - 1]
            prev_gap[p] = (p - q) % n or n
            r = occ[(t + 1) % m]
            next_gap[p] = (r - p) % n or n
    return prev_gap, next_gap


def build_psa(T: PString, mode: Mode = Mode.PREV0) -> Psa:
    """Rank the prev-encoded rotations of ``T``.

    Rotations are refined one encoded column at a time until all ranks are
    distinct, so the work is proportional to ``n`` times the longest common
    prefix of two encoded rotations.
    """
    _require_terminated(T)
    n = len(T)
    alpha = T.alphabet
    sigma = alpha.sigma_s
    prev_gap, _ = _cyclic_gaps(T)
    is_static = np.array([alpha.is_static(s) for s in T.symbols])
    static_code = np.array([alpha.static(s).rank if alpha.is_static(s) else 0 for s in T.symbols])
    gap = np.array(prev_gap, dtype=np.int64)
    mark_code = sigma if mode is Mode.PREV0 else sigma + n

    starts = np.arange(n)
    ranks = np.zeros(n, dtype=np.int64)
    order = starts
    for offset in range(n):
        p = (starts + offset) % n
        col = np.where(
            is_static[p],
            static_code[p],
            np.where(gap[p] <= offset, sigma + gap[p], mark_code),
        )
        ranks, order, done = refine(ranks, col)
        if done:
            break
    return Psa(tuple(int(s) + 1 for s in order))


def build_pbwt(T: PString, mode: Mode = Mode.PREV0, psa: Psa | None = None) -> Pbwt:
    """pBWT of ``T``: per rank, the last symbol of the rotation if static,
    else the number of distinct parameters up to that parameter's first
    occurrence in the rotation."""
    if psa is None:
        psa = build_psa(T, mode)
    else:
        _require_terminated(T)
    n = len(T)
    alpha = T.alphabet
    _, next_gap = _cyclic_gaps(T)
    syms = T.symbols
    tokens = []
    for k in psa.tau:
        s = k - 1
        q = (s - 1) % n
        last = syms[q]
        if alpha.is_static(last):
            tokens.append(alpha.static(last))
            continue
        first = next_gap[q] - 1
        seen = {syms[(s + o) % n] for o in range(first + 1)}
        tokens.append(sum(1 for c in seen if alpha.is_param(c)))
    return Pbwt(tuple(tokens), mode)


def build_lf(T: PString, psa: Psa) -> LfMap:
    n = len(T)
    if psa.n != n:
        raise MalformedInput(f"suffix array of length {psa.n} does not belong to a string of length {n}")
    rank_of = psa.inverse()
    return LfMap(tuple(rank_of[(k - 2) % n] for k in psa.tau))


def prepend_step(W: PrevString, tok: Token) -> PrevString:
    """Extend ``W``, a prefix of one encoded rotation, by one symbol on the
    left, as dictated by the pBWT token of that rotation."""
    if isinstance(tok, Static):
        return PrevString((tok,) + W.symbols, W.mode)
    if not is_rank(tok):
        raise InvalidToken(f"unsupported token {tok!r}")
    if tok <= 0:
        raise InvalidToken(f"rank tokens start at 1, got {tok}")
    mark = marker(W.mode)
    seen = 0
    for d, sym in enumerate(W.symbols, 1):
        if sym == mark:
            seen += 1
            if seen == tok:
                body = W.symbols[: d - 1] + (Dist(d),) + W.symbols[d:]
                return PrevString((mark,) + body, W.mode)
    return PrevString((mark,) + W.symbols, W.mode)
