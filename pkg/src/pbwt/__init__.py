"""Parameterized Burrows-Wheeler transform: forward codec and inversion."""

from .codec import LfMap, Pbwt, Psa, build_lf, build_pbwt, build_psa, prepend_step, rotation
from .core import (
    INF,
    TERMINATOR,
    Alphabet,
    Dist,
    Mode,
    PrevString,
    PString,
    Static,
    compare_prev,
    encode,
    lcp,
    lex_smallest_decode,
    prev_encode,
    prev_inf_encode,
    zeros_count,
)
from .errors import (
    AlphabetTooSmall,
    InvalidLf,
    InvalidPrevString,
    InvalidSymbol,
    InvalidToken,
    MalformedInput,
    ModeMismatch,
    NotAPbwt,
    PbwtError,
)
from .invert import (
    InversionState,
    MtfQueue,
    invert_fast,
    invert_naive,
    iter_refinement,
    lf_pinpoint,
    reconstruct_from_lf,
    recover_lf,
    validate_pbwt,
)

__version__ = "0.1.0"
