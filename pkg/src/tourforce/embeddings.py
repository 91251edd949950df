"""Labelled embeddings of a small tournament ``H`` into a host ``T``.

``N*_T(H)`` counts injective maps ``V(H) -> V(T)`` that preserve every edge
direction.  Exact counts come from backtracking over bitmask candidate sets;
for large hosts there is an unbiased Monte Carlo estimator over ordered
tuples of distinct vertices.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .errors import DomainError, ResourceError
from .rng import STREAM_EMBED_MC, CounterRNG, uniform_ints
from .tournament import Tournament, falling_factorial, mask_of

EXACT_BUDGET = 10**9


class CountMode(str, enum.Enum):
    EXACT = "EXACT"
    MONTE_CARLO = "MONTE_CARLO"


@dataclass(frozen=True)
class EmbeddingCount:
    mode: CountMode
    value: Optional[int] = None
    estimate: Optional[Fraction] = None
    samples: int = 0
    hits: int = 0
    std_error: float = 0.0

    def to_dict(self) -> dict:
        if self.mode is CountMode.EXACT:
            return {"mode": self.mode.value, "value": self.value}
        est = self.estimate
        return {
            "mode": self.mode.value,
            "estimate": f"{est.numerator}/{est.denominator}",
            "samples": self.samples,
            "hits": self.hits,
            "std_error": self.std_error,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EmbeddingCount":
        mode = CountMode(d["mode"])
        if mode is CountMode.EXACT:
            return cls(mode, value=int(d["value"]))
        return cls(
            mode,
            estimate=Fraction(d["estimate"]),
            samples=int(d["samples"]),
            hits=int(d["hits"]),
            std_error=float(d["std_error"]),
        )


def _host_mask(T: Tournament, U: Optional[Iterable[int]]) -> int:
    if U is None:
        return (1 << T.order) - 1
    U = list(U)
    for v in U:
        if not 0 <= v < T.order:
            raise DomainError(f"vertex {v + 1} is not in the host (n={T.order})")
    return mask_of(U)


def _within_budget(m: int, h: int) -> bool:
    return (m <= 30 and h <= 5) or math.comb(m, h) * math.factorial(h) <= EXACT_BUDGET


def _count_from(T_out, T_in, H: Tournament, allowed: int, first: int) -> int:
    h = H.order
    # need[k] lists (j, direction) for every j < k; all pairs are adjacent
    need = [[(j, H.has_edge(j, k)) for j in range(k)] for k in range(h)]
    img = [0] * h
    img[0] = first

    def rec(k: int, free: int) -> int:
        cand = free
        for j, fwd in need[k]:
            cand &= T_out[img[j]] if fwd else T_in[img[j]]
            if not cand:
                return 0
        if k == h - 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            img[k] = low.bit_length() - 1
            total += rec(k + 1, free ^ low)
            cand ^= low
        return total

    if h == 1:
        return 1
    return rec(1, allowed & ~(1 << first))


def _count_task(args) -> int:
    T, H, allowed, first = args
    return _count_from(T.out_masks, T.in_masks, H, allowed, first)


def count_embeddings(
    T: Tournament,
    H: Tournament,
    U: Optional[Iterable[int]] = None,
    threads: int = 1,
) -> EmbeddingCount:
    """Exact ``N*_T(H; U)``, the number of labelled copies of ``H`` inside ``T[U]``."""
    allowed = _host_mask(T, U)
    m = allowed.bit_count()
    h = H.order
    if not _within_budget(m, h):
        raise ResourceError(
            f"exact count over |U|={m}, h={h} exceeds the budget; use Monte Carlo (--mc)"
        )
    if m < h:
        return EmbeddingCount(CountMode.EXACT, value=0)
    firsts = [v for v in range(T.order) if (allowed >> v) & 1]
    if threads > 1 and len(firsts) > 1 and falling_factorial(m, h) > 10**6:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = ex.map(_count_task, [(T, H, allowed, v) for v in firsts])
            total = sum(parts)
    else:
        total = sum(_count_from(T.out_masks, T.in_masks, H, allowed, v) for v in firsts)
    return EmbeddingCount(CountMode.EXACT, value=total)


def mc_estimate_embeddings(
    T: Tournament,
    H: Tournament,
    U: Optional[Iterable[int]] = None,
    samples: int = 10_000,
    seed: int = 0,
) -> EmbeddingCount:
    """Unbiased estimate ``(|U|)_h * hits / samples`` from uniform ordered tuples.

    Sample ``k`` uses the ``k``-th draw of the embedding stream, so a run with
    more samples extends a run with fewer.
    """
    if samples < 1:
        raise DomainError("samples must be at least 1")
    allowed = _host_mask(T, U)
    verts = np.array([v for v in range(T.order) if (allowed >> v) & 1], dtype=np.intp)
    m, h = len(verts), H.order
    if m < h:
        raise DomainError(f"|U|={m} is smaller than h={h}")
    space = falling_factorial(m, h)
    codes = uniform_ints(CounterRNG(seed), STREAM_EMBED_MC, space, samples)
    tuples = _decode_tuples(codes, m, h)
    chosen = verts[tuples]
    adj = np.asarray(T.adjacency(), dtype=bool)
    hit = np.ones(samples, dtype=bool)
    for a in range(h):
        for b in range(a + 1, h):
            want = H.has_edge(a, b)
            hit &= adj[chosen[:, a], chosen[:, b]] == want
    hits = int(hit.sum())
    p = hits / samples
    return EmbeddingCount(
        CountMode.MONTE_CARLO,
        estimate=Fraction(space * hits, samples),
        samples=samples,
        hits=hits,
        std_error=space * math.sqrt(p * (1 - p) / samples),
    )


def _decode_tuples(codes: list[int], m: int, h: int) -> np.ndarray:
    """Mixed-radix codes in ``[0, (m)_h)`` to ordered ``h``-tuples of distinct indices.

    Digit ``j`` (radix ``m - j``) drives step ``j`` of a partial Fisher-Yates
    shuffle, which is a bijection onto ordered tuples.
    """
    S = len(codes)
    perm = np.tile(np.arange(m, dtype=np.intp), (S, 1))
    rows = np.arange(S)
    if m ** h < 1 << 63:
        r = np.array(codes, dtype=np.int64)
        digits = []
        for j in range(h):
            digits.append(r % (m - j))
            r //= m - j
    else:
        digits = [np.empty(S, dtype=np.int64) for _ in range(h)]
        for s, c in enumerate(codes):
            for j in range(h):
                c, digits[j][s] = divmod(c, m - j)
    for j in range(h):
        other = j + digits[j]
        a, b = perm[rows, j].copy(), perm[rows, other].copy()
        perm[rows, j], perm[rows, other] = b, a
    return perm[:, :h]


def transitive_lower_bound(h: int, n: int) -> Fraction:
    """``f_h(n) = prod_{j<h} ((n+1)/2**j - 1)`` when ``n >= 2**(h-1) - 1``, else 0.

    Every ``n``-vertex tournament has at least this many labelled copies of
    the transitive tournament on ``h`` vertices.
    """
    if h < 1 or n < 0:
        raise DomainError("need h >= 1 and n >= 0")
    if n < 2 ** (h - 1) - 1:
        return Fraction(0)
    out = Fraction(1)
    for j in range(h):
        out *= Fraction(n + 1, 2**j) - 1
    return out


def transitive_triples_by_degree(T: Tournament) -> int:
    """``sum_v C(d+(v), 2)``, which equals ``N*_T(Tr_3)``."""
    return sum(math.comb(d, 2) for d in T.out_degrees())
