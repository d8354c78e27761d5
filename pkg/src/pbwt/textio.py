"""Line-oriented text formats.

p-string files hold one string per line. Lowercase letters are parameters,
``$`` is the terminator and any other non-whitespace character is static.
Digits are rejected, since a digit token in a pBWT file means a rank.

pBWT files hold one transform per line as whitespace-separated tokens: a run
of digits is a rank, any other single character is a static symbol.
"""

from __future__ import annotations

from .codec import Pbwt
from .core import TERMINATOR, Alphabet, Mode, PString
from .errors import MalformedInput
from .invert import validate_pbwt


def _is_param_char(c: str, param_chars) -> bool:
    if param_chars is not None:
        return c in param_chars
    return c.isalpha() and c.islower()


def static_order(statics) -> tuple:
    """Terminator first, then the remaining statics by code point."""
    rest = sorted(set(statics) - {TERMINATOR})
    return (TERMINATOR, *rest)


def parse_pstring(text: str, param_chars: str | None = None) -> PString:
    params, statics = set(), set()
    for col, c in enumerate(text, 1):
        if c.isspace():
            raise MalformedInput(f"whitespace at column {col}")
        if _is_param_char(c, param_chars):
            params.add(c)
        elif c.isdigit():
            raise MalformedInput(f"digit {c!r} at column {col} cannot be a static symbol")
        else:
            statics.add(c)
    alphabet = Alphabet(static_order(statics), tuple(sorted(params)))
    return PString(tuple(text), alphabet)


def format_pstring(w: PString) -> str:
    return "".join(str(s) for s in w.symbols)


def parse_pbwt(line: str, mode: Mode = Mode.PREV0) -> Pbwt:
    """Parse one pBWT line; token syntax errors raise MalformedInput,
    structural ones NotAPbwt."""
    raw = []
    for pos, tok in enumerate(line.split(), 1):
        if tok.isdigit():
            raw.append(int(tok))
        elif len(tok) == 1:
            raw.append(tok)
        else:
            raise MalformedInput(f"token {pos} ({tok!r}) is neither a rank nor a single symbol")
    alphabet = Alphabet(static_order(t for t in raw if isinstance(t, str)))
    return validate_pbwt(raw, mode, alphabet)


def format_pbwt(L: Pbwt) -> str:
    return " ".join(str(t) for t in L.tokens)


def parse_param_names(text: str) -> list[str]:
    """``"xyz"`` or ``"x,y,z"`` -> ``["x", "y", "z"]``."""
    names = [s.strip() for s in text.split(",")] if "," in text else list(text)
    if not names or any(not s for s in names) or len(set(names)) != len(names):
        raise MalformedInput(f"bad parameter name list {text!r}")
    return names
