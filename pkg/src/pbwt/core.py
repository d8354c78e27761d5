"""Parameterized strings and their prev-encodings.

A p-string mixes *static* symbols, which must match literally, with
*parameter* symbols, which only have to match up to a consistent renaming.
The prev-encoding replaces every parameter occurrence by the distance back
to the previous occurrence of the same symbol, and marks leftmost
occurrences with ``Dist(0)`` (or with ``INF`` in the prev-infinity variant).
Two p-strings p-match exactly when their prev-encodings are equal.

Encoded symbols are totally ordered: every static symbol is smaller than
every distance, statics follow their alphabet order, distances follow their
value, and ``INF`` is larger than everything.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence, Union

from .errors import AlphabetTooSmall, InvalidPrevString, InvalidSymbol, ModeMismatch

TERMINATOR = "$"


class Mode(enum.Enum):
    PREV0 = "prev0"
    PREVINF = "previnf"


class _Ordered:
    """Comparisons for encoded symbols, routed through :func:`sort_key`."""

    __slots__ = ()

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def __le__(self, other):
        return sort_key(self) <= sort_key(other)

    def __gt__(self, other):
        return sort_key(self) > sort_key(other)

    def __ge__(self, other):
        return sort_key(self) >= sort_key(other)


@dataclass(frozen=True, eq=True, order=False)
class Static(_Ordered):
    symbol: Hashable
    # position of the symbol in the static order of its alphabet; identity
    # is the symbol alone
    rank: int = field(compare=False)

    def __str__(self):
        return str(self.symbol)


@dataclass(frozen=True, eq=True, order=False)
class Dist(_Ordered):
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise InvalidPrevString(f"negative distance {self.value}")

    def __str__(self):
        return str(self.value)


class _Infinity(_Ordered):
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "∞"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

PrevSymbol = Union[Static, Dist, _Infinity]


def sort_key(sym: PrevSymbol) -> tuple:
    if isinstance(sym, Static):
        return (0, sym.rank)
    if isinstance(sym, Dist):
        return (1, sym.value)
    if sym is INF:
        return (2, 0)
    raise TypeError(f"not an encoded symbol: {sym!r}")


def marker(mode: Mode) -> PrevSymbol:
    """The symbol that marks a leftmost parameter occurrence in ``mode``."""
    return Dist(0) if mode is Mode.PREV0 else INF


@dataclass(frozen=True)
class Alphabet:
    """Ordered static symbols (terminator first) and ordered parameter names."""

    statics: tuple
    params: tuple = ()
    terminator: Hashable = TERMINATOR
    _static_rank: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        statics = tuple(self.statics)
        params = tuple(self.params)
        object.__setattr__(self, "statics", statics)
        object.__setattr__(self, "params", params)
        if not statics or statics[0] != self.terminator:
            raise InvalidSymbol(f"terminator {self.terminator!r} must be the first static symbol")
        if len(set(statics)) != len(statics) or len(set(params)) != len(params):
            raise InvalidSymbol("alphabet lists contain duplicates")
        if set(statics) & set(params):
            raise InvalidSymbol("static and parameter symbols must be disjoint")
        object.__setattr__(self, "_static_rank", {s: r for r, s in enumerate(statics)})

    @property
    def sigma_s(self) -> int:
        return len(self.statics)

    @property
    def sigma_p(self) -> int:
        return len(self.params)

    def is_static(self, sym) -> bool:
        return sym in self._static_rank

    def is_param(self, sym) -> bool:
        return sym in self.params

    def static(self, sym) -> Static:
        try:
            return Static(sym, self._static_rank[sym])
        except KeyError:
            raise InvalidSymbol(f"{sym!r} is not a static symbol of this alphabet") from None

    def pstring(self, symbols: Iterable) -> "PString":
        return PString(tuple(symbols), self)


@dataclass(frozen=True)
class PString:
    symbols: tuple
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        alpha = self.alphabet
        for i, sym in enumerate(self.symbols):
            if not (alpha.is_static(sym) or alpha.is_param(sym)):
                raise InvalidSymbol(f"symbol {sym!r} at position {i + 1} is not in the alphabet")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return PString(self.symbols[item], self.alphabet)
        return self.symbols[item]

    def __str__(self):
        return "".join(str(s) for s in self.symbols)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def is_terminated(self) -> bool:
        """True when the terminator occurs exactly once, at the end."""
        term = self.alphabet.terminator
        return bool(self.symbols) and self.symbols[-1] == term and self.symbols.count(term) == 1


@dataclass(frozen=True)
class PrevString:
    symbols: tuple
    mode: Mode = Mode.PREV0

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.mode is Mode.PREV0:
            if any(s is INF for s in self.symbols):
                raise InvalidPrevString("INF cannot occur in a prev0 encoding")
        elif any(isinstance(s, Dist) and s.value == 0 for s in self.symbols):
            raise InvalidPrevString("Dist(0) cannot occur in a prev-infinity encoding")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self) -> Iterator[PrevSymbol]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return PrevString(self.symbols[item], self.mode)
        return self.symbols[item]

    def __str__(self):
        return "".join(str(s) for s in self.symbols)

    def __lt__(self, other):
        return compare_prev(self, other) < 0

    def __le__(self, other):
        return compare_prev(self, other) <= 0

    def __add__(self, other):
        if not isinstance(other, PrevString):
            return NotImplemented
        if other.mode is not self.mode:
            raise ModeMismatch("cannot concatenate encodings of different modes")
        return PrevString(self.symbols + other.symbols, self.mode)

    @property
    def marker(self) -> PrevSymbol:
        return marker(self.mode)

    def is_marker(self, sym) -> bool:
        return sym == self.marker

    def check_chains(self):
        """Raise InvalidPrevString unless every distance chain is well formed.

        A distance must land on an earlier parameter position, and no position
        may be the target of two distances (each occurrence has one successor).
        """
        targets = set()
        for i, sym in enumerate(self.symbols):
            if isinstance(sym, Dist) and sym.value >= 1:
                j = i - sym.value
                if j < 0:
                    raise InvalidPrevString(f"distance {sym.value} at position {i + 1} points before the start")
                if isinstance(self.symbols[j], Static):
                    raise InvalidPrevString(f"distance at position {i + 1} points to static symbol at {j + 1}")
                if j in targets:
                    raise InvalidPrevString(f"position {j + 1} is the target of two distances")
                targets.add(j)
            elif not isinstance(sym, (Static, Dist)) and sym is not INF:
                raise InvalidPrevString(f"not an encoded symbol: {sym!r}")


def _encode(w: PString, first: PrevSymbol, mode: Mode) -> PrevString:
    alpha = w.alphabet
    last = {}
    out = []
    for i, sym in enumerate(w.symbols):
        if alpha.is_static(sym):
            out.append(alpha.static(sym))
        elif alpha.is_param(sym):
            j = last.get(sym)
            out.append(first if j is None else Dist(i - j))
            last[sym] = i
        else:
            raise InvalidSymbol(f"symbol {sym!r} at position {i + 1} is not in the alphabet")
    return PrevString(tuple(out), mode)


def prev_encode(w: PString) -> PrevString:
    return _encode(w, Dist(0), Mode.PREV0)


def prev_inf_encode(w: PString) -> PrevString:
    return _encode(w, INF, Mode.PREVINF)


def encode(w: PString, mode: Mode = Mode.PREV0) -> PrevString:
    return prev_encode(w) if mode is Mode.PREV0 else prev_inf_encode(w)


def zeros_count(W: PrevString, upto: int | None = None) -> int:
    """Number of leftmost-occurrence markers among the first ``upto`` symbols.

    For prev-infinity encodings the ``INF`` markers are counted.
    """
    if upto is None:
        upto = len(W)
    if not 0 <= upto <= len(W):
        raise IndexError(f"upto={upto} outside [0, {len(W)}]")
    mark = W.marker
    return sum(1 for s in W.symbols[:upto] if s == mark)


def lcp(X: PrevString, Y: PrevString) -> int:
    if X.mode is not Y.mode:
        raise ModeMismatch("cannot compare prev0 and prev-infinity encodings")
    k = 0
    for a, b in zip(X.symbols, Y.symbols):
        if a != b:
            break
        k += 1
    return k


def compare_prev(X: PrevString, Y: PrevString) -> int:
    """Three-way lexicographic comparison: -1, 0 or 1."""
    k = lcp(X, Y)
    if k == len(X) and k == len(Y):
        return 0
    if k == len(X):
        return -1
    if k == len(Y):
        return 1
    return -1 if X.symbols[k] < Y.symbols[k] else 1


def lex_smallest_decode(
    W: PrevString,
    param_names: Sequence,
    alphabet: Alphabet | None = None,
) -> PString:
    """Lexicographically smallest p-string whose encoding is ``W``.

    Parameter names are handed out in ``param_names`` order as leftmost
    occurrences are met. ``alphabet`` supplies the static symbols; when
    omitted they are taken from ``W`` itself.
    """
    W.check_chains()
    names = list(param_names)
    if alphabet is None:
        seen = {s.rank: s.symbol for s in W.symbols if isinstance(s, Static)}
        statics = [seen[r] for r in sorted(seen)]
        if TERMINATOR in statics:
            statics.remove(TERMINATOR)
        alphabet = Alphabet((TERMINATOR, *statics), tuple(names))
    else:
        alphabet = Alphabet(alphabet.statics, tuple(names), alphabet.terminator)

    mark = W.marker
    out = []
    used = 0
    for i, sym in enumerate(W.symbols):
        if isinstance(sym, Static):
            out.append(sym.symbol)
        elif sym == mark:
            if used >= len(names):
                raise AlphabetTooSmall(f"need more than {len(names)} parameter names")
            out.append(names[used])
            used += 1
        else:
            out.append(out[i - sym.value])
    return PString(tuple(out), alphabet)
