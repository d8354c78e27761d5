"""Recovering a p-string from its pBWT alone.

Two inverters are provided. :func:`invert_naive` rebuilds the sorted
multiset of encoded rotation prefixes one column at a time (cubic time,
quadratic space). :func:`invert_fast` only keeps, per rank, a tentative rank
``G``, a marker count ``Z`` and a boundary symbol ``E``, refining ``G`` until
it is a permutation; that permutation is the LF-mapping, and the string is
then read off right to left with a move-to-front queue of parameter names.

Both return the lexicographically smallest p-string that p-matches the
original, so their outputs are directly comparable.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from ._refine import refine
from .codec import LfMap, Pbwt, is_rank
from .core import (
    INF,
    TERMINATOR,
    Alphabet,
    Dist,
    Mode,
    PrevString,
    PString,
    Static,
    lex_smallest_decode,
    marker,
)
from .errors import AlphabetTooSmall, InvalidLf, NotAPbwt

DEFAULT_PARAM_NAMES = tuple(string.ascii_lowercase)


# -- validation ---------------------------------------------------------------


def validate_pbwt(tokens, mode: Mode = Mode.PREV0, alphabet: Alphabet | None = None) -> Pbwt:
    """Structural check of a raw token sequence.

    Tokens may be rank integers, :class:`Static` instances, or bare static
    symbols (resolved through ``alphabet``; by default ``$`` first, then the
    remaining statics in sorted order). Raises :class:`NotAPbwt` listing every
    violated rule.
    """
    if isinstance(tokens, Pbwt):
        mode = tokens.mode
        tokens = tokens.tokens
    tokens = list(tokens)
    n = len(tokens)
    problems = []

    if alphabet is None:
        bare = {t for t in tokens if not is_rank(t) and not isinstance(t, Static)}
        others = sorted((t for t in bare if t != TERMINATOR), key=str)
        try:
            alphabet = Alphabet((TERMINATOR, *others))
        except Exception as exc:  # unsortable or clashing symbols
            problems.append(f"cannot order static symbols: {exc}")
            raise NotAPbwt("; ".join(problems), problems) from None

    out = []
    for pos, tok in enumerate(tokens, 1):
        if is_rank(tok):
            tok = int(tok)
            if tok < 1:
                problems.append(f"position {pos}: rank {tok} < 1")
            elif tok > n:
                problems.append(f"position {pos}: rank {tok} exceeds length {n}")
            out.append(tok)
        elif isinstance(tok, Static):
            out.append(tok)
        elif alphabet.is_static(tok):
            out.append(alphabet.static(tok))
        else:
            problems.append(f"position {pos}: unknown token {tok!r}")
            out.append(None)

    terms = [p for p, t in enumerate(out, 1) if isinstance(t, Static) and t.symbol == TERMINATOR]
    if not terms:
        problems.append("no terminator token")
    elif len(terms) > 1:
        problems.append(f"terminator occurs {len(terms)} times (positions {terms})")
    if problems:
        raise NotAPbwt("; ".join(problems), problems)
    return Pbwt(tuple(out), mode)


# -- integer coding of encoded symbols ----------------------------------------


class _Coding:
    """Dense integer keys for the encoded symbols of one length-n transform.

    Statics present in the transform map to ``0..S-1`` in alphabet order,
    ``Dist(k)`` to ``S + k`` and ``INF`` to ``S + n``.
    """

    def __init__(self, L: Pbwt):
        n = L.n
        self.n = n
        self.mode = L.mode
        self.statics = sorted({t for t in L.tokens if isinstance(t, Static)}, key=lambda s: s.rank)
        self.S = len(self.statics)
        index = {s: c for c, s in enumerate(self.statics)}
        self.marker = self.S if L.mode is Mode.PREV0 else self.S + n
        self.is_rank = np.array([is_rank(t) for t in L.tokens], dtype=bool)
        self.rank = np.array([t if is_rank(t) else 0 for t in L.tokens], dtype=np.int64)
        self.first = np.array(
            [self.marker if is_rank(t) else index[t] for t in L.tokens], dtype=np.int64
        )

    def symbol(self, code: int):
        code = int(code)
        if code < self.S:
            return self.statics[code]
        if code == self.marker:
            return marker(self.mode)
        return Dist(code - self.S)

    def prev_string(self, codes) -> PrevString:
        return PrevString(tuple(self.symbol(c) for c in codes), self.mode)


def _output_alphabet(L: Pbwt, param_names) -> Alphabet:
    statics = sorted({t for t in L.tokens if isinstance(t, Static)}, key=lambda s: s.rank)
    return Alphabet(tuple(s.symbol for s in statics), tuple(param_names))


def _coerce(L) -> Pbwt:
    return validate_pbwt(L)


# -- naive inversion ----------------------------------------------------------


def _prepend_rows(P: np.ndarray, coding: _Coding) -> np.ndarray:
    """Apply the prepend rule to every row of the sorted prefix matrix ``P``,
    row ``i`` using token ``i``."""
    n, ell = P.shape
    m = coding.marker
    R = coding.is_rank
    head = coding.first
    if ell:
        # marker coordinates in row-major order: each row's markers are
        # contiguous and left to right
        mrow, mcol = np.nonzero(P == m)
        count = np.bincount(mrow, minlength=n)
        hit = R & (coding.rank <= count)
        if hit.any():
            rows = np.nonzero(hit)[0]
            first = np.cumsum(count) - count
            d = mcol[first[rows] + coding.rank[rows] - 1]
            P = P.copy(order="F")
            P[rows, d] = coding.S + d + 1
    out = np.empty((n, ell + 1), dtype=P.dtype, order="F")
    out[:, 0] = head
    out[:, 1:] = P
    return out


def invert_naive(L, param_names: Sequence = DEFAULT_PARAM_NAMES) -> PString:
    """Invert by materializing every prefix of every encoded rotation."""
    L = _coerce(L)
    coding = _Coding(L)
    n = L.n
    # small codes let the per-column stable sorts run as radix sorts
    dtype = np.int16 if coding.S + n < np.iinfo(np.int16).max else np.int64
    P = np.empty((n, 0), dtype=dtype, order="F")
    for ell in range(n):
        if ell:
            P = P[np.lexsort(P.T[::-1])]
        P = _prepend_rows(P, coding)
    P = P[np.lexsort(P.T[::-1])]

    if n > 1 and (P[1:] == P[:-1]).all(axis=1).any():
        raise NotAPbwt("rotation prefixes do not separate: tokens are inconsistent")
    top = coding.symbol(P[0, 0])
    if not (isinstance(top, Static) and top.symbol == TERMINATOR):
        raise NotAPbwt("smallest rotation does not start with the terminator")
    # the smallest rotation is $T[1..n-1]; encodings commute with the static $
    W = coding.prev_string(np.concatenate([P[0, 1:], P[0, :1]]))
    return lex_smallest_decode(W, param_names, _output_alphabet(L, ()))


# -- fast inversion -----------------------------------------------------------


@dataclass
class InversionState:
    """Refinement arrays after ``ell`` columns, indexed by rank (0-based
    arrays, 1-based values for ``G``).

    ``G[i]`` is the first rank of the interval of the length-``ell`` prefix of
    the rotation one step left of rank ``i``; ``Z[i]`` counts markers in the
    first ``ell - 1`` symbols of rotation ``i``; ``E[i]`` is its ``ell``-th
    symbol (as an integer code) and ``ext[i]`` the code of the symbol the
    left-extended rotation gets at position ``ell + 1`` (None once
    ``ell == n``).
    """

    ell: int
    G: np.ndarray
    Z: np.ndarray
    E: np.ndarray
    ext: np.ndarray | None
    is_permutation: bool
    coding: _Coding

    def e_symbols(self) -> list:
        return [self.coding.symbol(c) for c in self.E]

    def ext_symbols(self) -> list | None:
        if self.ext is None:
            return None
        return [self.coding.symbol(c) for c in self.ext]


def _extension(coding: _Coding, Z, E, ell: int):
    """Symbol ``ell + 1`` of every left-extended rotation: the old boundary
    symbol, unless it is exactly the marker the token turns into a distance."""
    turn = coding.is_rank & (E == coding.marker) & (Z == coding.rank - 1)
    return np.where(turn, coding.S + ell, E)


def iter_refinement(L, check_groups: bool = False) -> Iterator[InversionState]:
    """Yield the refinement state for ``ell = 1, 2, ...`` until ``G`` is a
    permutation (the last state yielded). Raises NotAPbwt if that does not
    happen within ``n`` columns."""
    L = _coerce(L)
    coding = _Coding(L)
    n = L.n
    m = coding.marker

    E = np.sort(coding.first)
    G = np.searchsorted(E, coding.first, side="left").astype(np.int64)
    Z = np.zeros(n, dtype=np.int64)
    perm = np.unique(coding.first).size == n
    ell = 1
    while True:
        ext = _extension(coding, Z, E, ell) if ell < n else None
        yield InversionState(ell, G + 1, Z, E, ext, perm, coding)
        if perm:
            return
        if ell >= n:
            raise NotAPbwt(f"tentative ranks still collide after {n} columns")
        G, order, perm = refine(G, ext)
        if check_groups:
            _check_group_constancy(G, order, Z, E)
        Z = Z + (E == m)
        E = ext[order]
        ell += 1


def _check_group_constancy(G, order, Z, E):
    g = G[order]
    same = g[1:] == g[:-1]
    z = Z[order]
    e = E[order]
    bad = same & ((z[1:] != z[:-1]) | (e[1:] != e[:-1]))
    if bad.any():
        raise AssertionError("Z/E differ inside a tie group")


def recover_lf(L) -> LfMap:
    """LF-mapping of the transform, read off the converged refinement."""
    for state in iter_refinement(L):
        pass
    return LfMap(tuple(int(g) for g in state.G))


def invert_fast(L, param_names: Sequence = DEFAULT_PARAM_NAMES) -> PString:
    L = _coerce(L)
    lf = recover_lf(L)
    try:
        seq = _walk(L, lf)
    except InvalidLf as exc:
        raise NotAPbwt(f"recovered LF does not spell a string: {exc}") from None
    return lex_smallest_decode(_encode_walk(seq, L.mode), param_names, _output_alphabet(L, ()))


def lf_pinpoint(L, state: InversionState, i: int) -> int | None:
    """Exact LF value of rank ``i`` (1-based) from an unconverged state, when
    the token is static or refers to a marker already inside the prefix.

    Counts prefixes below the extended prefix (``G[i] - 1``; comparing
    against the next column's multiset gives the same count, since a
    length-``ell`` string precedes all of its extensions) plus the members of
    its group up to and including ``i``.
    """
    tok = L[i - 1]
    if not (isinstance(tok, Static) or tok <= state.Z[i - 1]):
        return None
    g = state.G[i - 1]
    return int(g - 1 + np.count_nonzero(state.G[:i] == g))


# -- LF to string -------------------------------------------------------------


class MtfQueue:
    """Parameter names ordered by leftmost occurrence in the decoded suffix,
    front first. Positions are 1-based."""

    def __init__(self, items=()):
        self._items = list(items)

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def __repr__(self):
        return f"MtfQueue({self._items!r})"

    def _check(self, pos):
        if not 1 <= pos <= len(self._items):
            raise IndexError(f"position {pos} outside queue of length {len(self._items)}")

    def access(self, pos: int):
        self._check(pos)
        return self._items[pos - 1]

    def delete(self, pos: int):
        self._check(pos)
        return self._items.pop(pos - 1)

    def push_front(self, item):
        self._items.insert(0, item)

    def move_to_front(self, pos: int):
        item = self.delete(pos)
        self.push_front(item)
        return item


def _walk(L: Pbwt, lf) -> list:
    """Follow LF from the terminator rotation, emitting the string right to
    left. Parameters come out as ints 0, 1, ... in first-use order."""
    n = L.n
    lf = list(lf)
    if len(lf) != n or sorted(lf) != list(range(1, n + 1)):
        raise InvalidLf("LF is not a permutation of the ranks")
    out = [None] * n
    i = 1
    term = None
    queue = MtfQueue()
    fresh = 0
    for k in range(n, 1, -1):
        tok = L[i - 1]
        if isinstance(tok, Static):
            if tok.symbol == TERMINATOR:
                raise InvalidLf(f"terminator reached after {n - k} steps, expected {n - 1}")
            out[k - 2] = tok
        elif tok > len(queue):
            out[k - 2] = fresh
            queue.push_front(fresh)
            fresh += 1
        else:
            out[k - 2] = queue.move_to_front(tok)
        i = lf[i - 1]
    term = L[i - 1]
    if not (isinstance(term, Static) and term.symbol == TERMINATOR):
        raise InvalidLf("LF cycle does not close at the terminator")
    out[n - 1] = term
    return out


def _encode_walk(seq, mode: Mode) -> PrevString:
    first = Dist(0) if mode is Mode.PREV0 else INF
    last = {}
    out = []
    for i, s in enumerate(seq):
        if isinstance(s, Static):
            out.append(s)
        else:
            j = last.get(s)
            out.append(first if j is None else Dist(i - j))
            last[s] = i
    return PrevString(tuple(out), mode)


def reconstruct_from_lf(L, lf, param_names: Sequence = DEFAULT_PARAM_NAMES) -> PString:
    """String read off ``L`` along ``lf``; parameter names are used in the
    order they are first met while scanning right to left."""
    L = _coerce(L)
    if isinstance(lf, LfMap):
        lf = lf.lf
    seq = _walk(L, lf)
    names = list(param_names)
    used = 1 + max((s for s in seq if not isinstance(s, Static)), default=-1)
    if used > len(names):
        raise AlphabetTooSmall(f"need {used} parameter names, got {len(names)}")
    symbols = [s.symbol if isinstance(s, Static) else names[s] for s in seq]
    return PString(tuple(symbols), _output_alphabet(L, names))
