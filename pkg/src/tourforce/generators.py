"""Random tournament models and deterministic constructions.

All samplers are pure functions of their parameters and a 64-bit seed; see
:mod:`tourforce.rng` for the sub-stream layout.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .designs import TrianglePartition, partition_with_leftovers, steiner_triple_system  # noqa: F401
from .errors import DomainError
from .rng import (
    STREAM_BIP,
    STREAM_CLIQ,
    STREAM_TRIANGLE,
    CounterRNG,
    as_probability,
    bernoulli,
)
from .tournament import Tournament, pair_index

HALF = Fraction(1, 2)


def _from_bits(n: int, bits) -> Tournament:
    word = 0
    for k, b in enumerate(bits):
        if b:
            word |= 1 << k
    return Tournament(n, word)


def sample_cliq(n: int, alpha, seed: int) -> Tournament:
    """``T(n, alpha)``: each pair ``i < j`` is oriented ``i -> j`` with probability ``alpha``."""
    if n < 1:
        raise DomainError("n must be positive")
    a = as_probability(alpha)
    m = n * (n - 1) // 2
    return _from_bits(n, bernoulli(CounterRNG(seed), STREAM_CLIQ, [a] * m))


def sample_bip(n: int, alpha, seed: int) -> Tournament:
    """``T(n, n, alpha)`` on ``2n`` vertices.

    Both halves ``0..n-1`` and ``n..2n-1`` are fair-coin tournaments; a cross
    pair ``i < n <= j`` points ``i -> j`` with probability ``alpha``.
    """
    if n < 1:
        raise DomainError("n must be positive")
    a = as_probability(alpha)
    N = 2 * n
    probs = [a if i < n <= j else HALF for i in range(N) for j in range(i + 1, N)]
    return _from_bits(N, bernoulli(CounterRNG(seed), STREAM_BIP, probs))


def sample_triangle_tournament(P: TrianglePartition, seed: int) -> Tournament:
    """One draw from ``D_P``: fair-coin cyclic orientation per triangle, fair coin per leftover edge."""
    h = P.h
    coins = bernoulli(CounterRNG(seed), STREAM_TRIANGLE, [HALF] * (P.L + P.F))
    word = 0

    def orient(u, v):
        nonlocal word
        if u < v:
            word |= 1 << pair_index(u, v, h)

    for i, (a, b, c) in enumerate(P.triangles):
        if coins[i]:
            orient(a, b), orient(b, c), orient(c, a)
        else:
            orient(a, c), orient(c, b), orient(b, a)
    for j, (u, v) in enumerate(P.edges):
        if coins[P.L + j]:
            orient(u, v)
        else:
            orient(v, u)
    return Tournament(h, word)


def blowup(H: Tournament, n: int) -> Tournament:
    """Blow ``H`` up to ``n`` vertices with ``n / h`` consecutive vertices per part.

    Edges between parts follow ``H``; inside a part ``u -> v`` iff ``u < v``.
    """
    h = H.order
    if n < h or n % h:
        raise DomainError(f"blow-up needs h | n (h={h}, n={n})")
    size = n // h
    word = 0
    k = 0
    for u in range(n):
        pu = u // size
        for v in range(u + 1, n):
            pv = v // size
            if pu == pv or H.has_edge(pu, pv):
                word |= 1 << k
            k += 1
    return Tournament(n, word)


def switch_vertex(T: Tournament, i: int) -> Tournament:
    """Point every edge between ``i`` and a later vertex away from ``i``."""
    n = T.order
    word = T.bits
    for j in range(i + 1, n):
        word |= 1 << pair_index(i, j, n)
    return Tournament(n, word)


def switching_path(T: Tournament) -> Iterator[Tournament]:
    """``T_1 = T, T_2, ..., T_n``; step ``i`` re-points the edges from ``v_i`` forward.

    The last element is the transitive tournament in index order.
    """
    cur = T
    yield cur
    for i in range(T.order - 1):
        cur = switch_vertex(cur, i)
        yield cur
