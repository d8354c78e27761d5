"""Deliberately naive reference procedures.

Nothing here reuses the codec or the inverters; only the string types and
the plain prev-encoders from :mod:`pbwt.core` are shared. Everything is
written straight from the definitions and is meant for small inputs.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from typing import Iterator, Sequence

from .core import (
    TERMINATOR,
    Alphabet,
    Mode,
    PString,
    Static,
    encode,
    sort_key,
    zeros_count,
)
from .errors import MalformedInput

MAX_ENUM_N = 10


def _key(W) -> tuple:
    return tuple(sort_key(s) for s in W)


def _rotations(T: PString) -> list[PString]:
    s = T.symbols
    return [PString(s[i:] + s[:i], T.alphabet) for i in range(len(s))]


def _check(T: PString):
    term = T.alphabet.terminator
    if not T.symbols or T.symbols[-1] != term or T.symbols.count(term) != 1:
        raise MalformedInput(f"not terminator-anchored: {str(T)!r}")


def oracle_psa(T: PString, mode: Mode = Mode.PREV0) -> list[int]:
    _check(T)
    enc = [encode(r, mode) for r in _rotations(T)]
    return sorted(range(1, len(T) + 1), key=lambda i: _key(enc[i - 1]))


def oracle_pbwt(T: PString, mode: Mode = Mode.PREV0) -> list:
    _check(T)
    rots = _rotations(T)
    n = len(T)
    out = []
    for k in oracle_psa(T, mode):
        rot = rots[k - 1]
        last = rot.symbols[n - 1]
        if T.alphabet.is_static(last):
            out.append(T.alphabet.static(last))
            continue
        j = rot.symbols.index(last)
        out.append(zeros_count(encode(rot[: j + 1], mode)))
    return out


def oracle_lf(T: PString, mode: Mode = Mode.PREV0) -> list[int]:
    tau = oracle_psa(T, mode)
    n = len(tau)
    lf = []
    for i in range(n):
        want = (tau[i] - 2) % n + 1
        lf.append(next(j + 1 for j in range(n) if tau[j] == want))
    return lf


def oracle_state(T: PString, mode: Mode, ell: int) -> dict:
    """Refinement arrays at column ``ell`` computed from the definitions.

    Keys: ``G`` (first rank of the interval of each left-extended prefix),
    ``Z`` (markers in the first ``ell - 1`` symbols of each rotation), ``E``
    (``ell``-th symbol of each rotation) and ``ext`` (symbol ``ell + 1`` of
    each left-extended rotation, or None when ``ell == n``).
    """
    n = len(T)
    tau = oracle_psa(T, mode)
    enc = [encode(r, mode) for r in _rotations(T)]
    pref = sorted(_key(e[:ell]) for e in enc)
    rows = [enc[k - 1] for k in tau]
    left = [enc[(k - 2) % n] for k in tau]
    return {
        "G": [bisect_left(pref, _key(w[:ell])) + 1 for w in left],
        "Z": [zeros_count(w[: ell - 1]) for w in rows],
        "E": [w[ell - 1] for w in rows],
        "ext": None if ell >= n else [w[ell] for w in left],
    }


def oracle_pmatch(x: PString, y: PString, method: str = "bijection") -> bool:
    """Do ``x`` and ``y`` p-match?

    ``method="bijection"`` tries every injective renaming of the parameters
    used in ``x`` onto those used in ``y``; ``method="encoding"`` compares
    prev-encodings instead.
    """
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    if method == "encoding":
        return _key(encode(x)) == _key(encode(y))
    if method != "bijection":
        raise ValueError(f"unknown method {method!r}")

    ax, ay = x.alphabet, y.alphabet
    px = list(dict.fromkeys(s for s in x if ax.is_param(s)))
    py = list(dict.fromkeys(s for s in y if ay.is_param(s)))
    if len(px) != len(py):
        return False
    for image in itertools.permutations(py):
        f = dict(zip(px, image))
        if all(
            (a == b and ax.is_static(a) and ay.is_static(b)) or (ax.is_param(a) and f[a] == b)
            for a, b in zip(x, y)
        ):
            return True
    return False


def _default_alphabet(sigma_s: int, sigma_p: int) -> Alphabet:
    if sigma_s < 1:
        raise ValueError("need at least the terminator among the statics")
    if sigma_s - 1 > 26 or sigma_p > 26:
        raise ValueError("at most 26 non-terminator statics and 26 parameters")
    statics = (TERMINATOR, *"ABCDEFGHIJKLMNOPQRSTUVWXYZ"[: sigma_s - 1])
    return Alphabet(statics, tuple("abcdefghijklmnopqrstuvwxyz"[:sigma_p]))


def enumerate_pstrings(
    n: int, sigma_s: int, sigma_p: int, alphabet: Alphabet | None = None
) -> Iterator[PString]:
    """All terminator-anchored p-strings of length ``n`` over ``sigma_s``
    statics (terminator included) and ``sigma_p`` parameters, one per
    p-match class: parameters first occur in alphabet order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_ENUM_N:
        raise ValueError(f"refusing to enumerate n={n} > {MAX_ENUM_N}")
    if alphabet is None:
        alphabet = _default_alphabet(sigma_s, sigma_p)
    statics = alphabet.statics[1:]
    params = alphabet.params

    def grow(prefix, used):
        if len(prefix) == n - 1:
            yield PString(tuple(prefix) + (alphabet.terminator,), alphabet)
            return
        for c in statics:
            yield from grow(prefix + [c], used)
        for h in range(min(used + 1, len(params))):
            yield from grow(prefix + [params[h]], max(used, h + 1))

    yield from grow([], 0)


def oracle_invert(tokens: Sequence, mode: Mode, alphabet: Alphabet) -> list[PString]:
    """Every canonical p-string over ``alphabet`` whose pBWT is ``tokens``."""
    tokens = list(tokens)
    n = len(tokens)
    want = [t if isinstance(t, Static) else int(t) for t in tokens]
    found = []
    for T in enumerate_pstrings(n, alphabet.sigma_s, alphabet.sigma_p, alphabet):
        if oracle_pbwt(T, mode) == want:
            found.append(T)
    return found
