"""Reproducible randomness: Philox4x64 sub-streams and exact rational coin flips.

Every random object is a pure function of ``(seed, stream, item)``.  The
Philox counter's two high words hold the sub-stream address:

* ``(stream, 0)`` is the primary block; item ``k`` consumes word ``k``.
* ``(stream, (k + 1) * 2**16 + attempt)`` are item ``k``'s private retry
  blocks, used when its primary word is rejected or when the probability's
  denominator needs more than 32 bits.

So the value of an item never depends on how many other items were drawn.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError

MASK64 = (1 << 64) - 1

STREAM_CLIQ = 1
STREAM_BIP = 2
STREAM_TRIANGLE = 3
STREAM_EMBED_MC = 4
STREAM_PARTITION = 5


def as_probability(alpha) -> Fraction:
    """Exact rational in ``[0, 1]`` from a Fraction, int or ``"p/q"`` string."""
    if isinstance(alpha, float):
        raise DomainError("probabilities must be exact rationals, not floats (use 'p/q')")
    try:
        a = Fraction(alpha)
    except (ValueError, ZeroDivisionError, TypeError):
        raise DomainError(f"cannot read {alpha!r} as an exact rational") from None
    if not 0 <= a <= 1:
        raise DomainError(f"probability {a} outside [0, 1]")
    return a


def check_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)) or not 0 <= int(seed) <= MASK64:
        raise DomainError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    return int(seed)


def derive_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th member of a batch generated from ``seed``."""
    ss = np.random.SeedSequence([check_seed(seed), index])
    return int(ss.generate_state(1, np.uint64)[0])


class CounterRNG:
    """Addressable 64-bit words from Philox4x64 keyed by ``seed``."""

    def __init__(self, seed: int):
        self.seed = check_seed(seed)

    def words(self, stream: int, count: int, sub: int = 0) -> np.ndarray:
        bg = np.random.Philox(key=self.seed, counter=[0, 0, stream & MASK64, sub & MASK64])
        return bg.random_raw(count).astype(np.uint64, copy=False)

    def uniform_below(self, stream: int, item: int, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection on the item's retry stream."""
        if bound < 1:
            raise DomainError("bound must be positive")
        nwords = (bound.bit_length() + 63) // 64 + 1
        space = 1 << (64 * nwords)
        limit = space - space % bound
        sub = 0
        while True:
            ws = [int(w) for w in self.words(stream, nwords, sub=((item + 1) << 16) + sub)]
            u = 0
            for w in ws:
                u = (u << 64) | w
            if u < limit:
                return u % bound
            sub += 1


def bernoulli(rng: CounterRNG, stream: int, probs: Sequence[Fraction]) -> np.ndarray:
    """Independent exact ``Bernoulli(probs[k])`` bits for items ``k = 0..len-1``."""
    count = len(probs)
    out = np.zeros(count, dtype=bool)
    if count == 0:
        return out
    primary = rng.words(stream, count)
    for p in set(probs):
        idx = np.array([k for k, q in enumerate(probs) if q == p], dtype=np.intp)
        num, den = p.numerator, p.denominator
        if num == 0:
            continue
        if num == den:
            out[idx] = True
            continue
        if den <= 1 << 32:
            limit = (1 << 64) - (1 << 64) % den
            u = primary[idx]
            ok = u < np.uint64(limit) if limit <= MASK64 else np.ones(len(idx), dtype=bool)
            out[idx[ok]] = (u[ok] % np.uint64(den)) < np.uint64(num)
            for k in idx[~ok]:
                out[k] = _slow_bit(rng, stream, int(k), num, den)
        else:
            for k in idx:
                out[k] = _slow_bit(rng, stream, int(k), num, den)
    return out


def uniform_ints(rng: CounterRNG, stream: int, bound: int, count: int) -> list[int]:
    """``count`` independent uniform integers in ``[0, bound)``; item ``k`` uses word ``k``."""
    if bound < 1:
        raise DomainError("bound must be positive")
    if bound > 1 << 32:
        return [rng.uniform_below(stream, k, bound) for k in range(count)]
    primary = rng.words(stream, count)
    limit = (1 << 64) - (1 << 64) % bound
    out = [0] * count
    for k, w in enumerate(primary.tolist()):
        out[k] = w % bound if w < limit else rng.uniform_below(stream, k, bound)
    return out


def _slow_bit(rng: CounterRNG, stream: int, item: int, num: int, den: int) -> bool:
    return rng.uniform_below(stream, item, den) < num
