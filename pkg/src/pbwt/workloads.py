"""Input generators and the timing loop behind ``pbwt gen`` / ``pbwt bench``."""

from __future__ import annotations

import gc
import random
import string
import time

from .codec import build_pbwt
from .core import TERMINATOR, Alphabet, Mode, PString
from .invert import invert_fast, invert_naive

INVERTERS = {"naive": invert_naive, "fast": invert_fast}


def make_alphabet(sigma_s: int, sigma_p: int) -> Alphabet:
    """``sigma_s`` statics (``$`` plus uppercase letters) and ``sigma_p``
    lowercase parameters."""
    if sigma_s < 1 or sigma_s - 1 > 26:
        raise ValueError(f"sigma_s must be in [1, 27], got {sigma_s}")
    if not 0 <= sigma_p <= 26:
        raise ValueError(f"sigma_p must be in [0, 26], got {sigma_p}")
    statics = (TERMINATOR, *string.ascii_uppercase[: sigma_s - 1])
    return Alphabet(statics, tuple(string.ascii_lowercase[:sigma_p]))


def random_pstring(n: int, sigma_s: int, sigma_p: int, rng: random.Random) -> PString:
    if n < 1:
        raise ValueError("n must be at least 1")
    alphabet = make_alphabet(sigma_s, sigma_p)
    body = alphabet.statics[1:] + alphabet.params
    if n > 1 and not body:
        raise ValueError("need at least one non-terminator symbol for n > 1")
    syms = [rng.choice(body) for _ in range(n - 1)]
    return PString(tuple(syms) + (TERMINATOR,), alphabet)


def unary_pstring(n: int) -> PString:
    """``a...a$``: every pair of rotations shares a long encoded prefix, so
    the fast inverter needs about ``n`` refinement rounds."""
    alphabet = make_alphabet(1, 1)
    return PString(("a",) * (n - 1) + (TERMINATOR,), alphabet)


def bench_input(n: int, workload: str, seed: int) -> PString:
    if workload == "unary":
        return unary_pstring(n)
    if workload == "random":
        return random_pstring(n, 4, 8, random.Random(seed * 1_000_003 + n))
    raise ValueError(f"unknown workload {workload!r}")


def run_bench(algos, sizes, trials: int = 3, workload: str = "unary", seed: int = 0,
              mode: Mode = Mode.PREV0) -> list[tuple[int, str, float]]:
    """Best-of-``trials`` wall time of each inverter on each size.

    The pBWT is built once per size, outside the timed region. As with
    :mod:`timeit`, the cyclic garbage collector is paused while timing.
    """
    rows = []
    for n in sizes:
        L = build_pbwt(bench_input(n, workload, seed), mode)
        for algo in algos:
            fn = INVERTERS[algo]
            best = float("inf")
            gc_was_on = gc.isenabled()
            gc.disable()
            try:
                for _ in range(max(1, trials)):
                    t0 = time.perf_counter()
                    fn(L)
                    best = min(best, time.perf_counter() - t0)
            finally:
                if gc_was_on:
                    gc.enable()
            rows.append((n, algo, best))
    return rows
