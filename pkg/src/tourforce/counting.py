"""Counting polynomials of a tournament.

``p_H(x)`` averages ``x**F (1-x)**B`` over all orderings, where ``F``/``B``
count forward/backward edges.  Rather than summing ``h!`` terms we compute
the distribution of ``F`` with a subset dynamic programme over the vertex
placed last: if ``v`` is last among ``S`` then exactly the in-neighbours of
``v`` inside ``S`` give forward edges.  Distributions are integer vectors, so
the whole computation is exact and only converted to rationals at the end.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .designs import TrianglePartition
from .errors import DomainError, ResourceError
from .poly import RationalPolynomial, poly_divmod
from .tournament import Tournament

DP_CAP = 18
SUBSET_CAP = 24


@dataclass(frozen=True)
class CountingPolynomialBundle:
    h: int
    p: RationalPolynomial
    q: RationalPolynomial
    per_a: dict

    def labelled_texts(self) -> list[tuple[str, str]]:
        rows = [("p", self.p.to_text()), ("q", self.q.to_text())]
        rows += [(f"p_a={a}", self.per_a[a].to_text()) for a in sorted(self.per_a)]
        return rows


def binomial_mix(counts, total: int) -> list[int]:
    """Integer coefficients of ``sum_k counts[k] * x**k * (1-x)**(total-k)``."""
    out = [0] * (total + 1)
    for k, c in enumerate(counts):
        c = int(c)
        if not c:
            continue
        rest = total - k
        for i in range(rest + 1):
            term = c * math.comb(rest, i)
            out[k + i] += -term if i % 2 else term
    return out


@lru_cache(maxsize=4096)
def forward_distribution(H: Tournament, cap: int = DP_CAP) -> tuple[int, ...]:
    """``counts[k]`` = number of orderings of ``H`` with exactly ``k`` forward edges."""
    h = H.order
    if h > cap:
        raise ResourceError(f"subset DP for p_H is capped at h={cap}, got h={h}")
    inn = H.in_masks
    if h <= 8:
        return _forward_distribution_small(h, inn)
    prev = {0: np.ones(1, dtype=np.int64)}
    for size in range(1, h + 1):
        cur = {}
        width = size * (size - 1) // 2 + 1
        for combo in itertools.combinations(range(h), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            acc = np.zeros(width, dtype=np.int64)
            for v in combo:
                sub = mask ^ (1 << v)
                f = prev[sub]
                s = (inn[v] & sub).bit_count()
                acc[s : s + len(f)] += f
            cur[mask] = acc
        prev = cur
    return tuple(int(c) for c in prev[(1 << h) - 1])


def _forward_distribution_small(h: int, inn) -> tuple[int, ...]:
    f = [None] * (1 << h)
    f[0] = [1]
    for mask in range(1, 1 << h):
        size = mask.bit_count()
        acc = [0] * (size * (size - 1) // 2 + 1)
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            sub = mask ^ low
            s = (inn[v] & sub).bit_count()
            for k, c in enumerate(f[sub]):
                acc[s + k] += c
        f[mask] = acc
    return tuple(f[-1])


def counting_polynomial(H: Tournament, cap: int = DP_CAP) -> RationalPolynomial:
    """``p_H(x) = E_sigma x**|F| (1-x)**|B|``."""
    counts = forward_distribution(H, cap)
    h = H.order
    return RationalPolynomial.from_ints(binomial_mix(counts, h * (h - 1) // 2), math.factorial(h))


def rescaled_q(H: Tournament, cap: int = DP_CAP) -> RationalPolynomial:
    """``q_H(x) = 2**C(h,2) * p_H((1+x)/2)``; even, with ``q_H(0) = 1``."""
    h = H.order
    p = counting_polynomial(H, cap)
    return p.compose_affine(Fraction(1, 2), Fraction(1, 2)).scale(2 ** (h * (h - 1) // 2))


@lru_cache(maxsize=4096)
def cut_distributions(H: Tournament, cap: int = SUBSET_CAP) -> tuple[tuple[int, ...], ...]:
    """``dist[a][k]`` = number of ``a``-sets ``A`` with ``e(A, V - A) = k``.

    Cut sizes of all ``2**h`` subsets are built layer by layer on the highest
    vertex: adding ``j`` to ``S`` (all of whose vertices are below ``j``)
    loses the edges ``S -> j`` and gains ``j -> (V - S - j)``.
    """
    h = H.order
    if h > cap:
        raise ResourceError(f"subset enumeration for p_(H,a) is capped at h={cap}, got h={h}")
    full = (1 << h) - 1
    dtype = np.int64
    cut = np.zeros(1 << h, dtype=np.int16)
    for j in range(h):
        masks = np.arange(1 << j, dtype=dtype)
        lost = np.bitwise_count(masks & H.in_masks[j])
        rest = np.int64(full ^ (1 << j))
        gained = np.bitwise_count(~masks & rest & H.out_masks[j])
        cut[1 << j : 1 << (j + 1)] = cut[: 1 << j] - lost + gained
    sizes = np.bitwise_count(np.arange(1 << h, dtype=dtype))
    out = []
    for a in range(h + 1):
        sel = cut[sizes == a]
        out.append(tuple(int(c) for c in np.bincount(sel, minlength=a * (h - a) + 1)))
    return tuple(out)


def degree_counting_polynomial(H: Tournament, a: int, cap: int = SUBSET_CAP) -> RationalPolynomial:
    """``p_{H,a}(x) = C(h,a)^-1 2^-(C(a,2)+C(h-a,2)) sum_A x**e(A,V-A) (1-x)**e(V-A,A)``."""
    h = H.order
    if not 1 <= a <= h - 1:
        raise DomainError(f"a must lie in 1..h-1, got a={a} for h={h}")
    dist = cut_distributions(H, cap)[a]
    ints = binomial_mix(dist, a * (h - a))
    den = math.comb(h, a) * 2 ** (a * (a - 1) // 2 + (h - a) * (h - a - 1) // 2)
    return RationalPolynomial.from_ints(ints, den)


def degree_counting_polynomials(H: Tournament, cap: int = SUBSET_CAP) -> dict:
    return {a: degree_counting_polynomial(H, a, cap) for a in range(1, H.order)}


@lru_cache(maxsize=1024)
def bundle(H: Tournament) -> CountingPolynomialBundle:
    """``p_H``, ``q_H`` and every ``p_{H,a}``, cached per tournament."""
    return CountingPolynomialBundle(
        h=H.order,
        p=counting_polynomial(H),
        q=rescaled_q(H),
        per_a=degree_counting_polynomials(H),
    )


def triangle_factor(H: Tournament, P: TrianglePartition) -> RationalPolynomial:
    """``s_H = q_H / (1 - x**2)**L`` for ``H`` in the support of ``D_P``."""
    if P.h != H.order:
        raise DomainError(f"partition is on {P.h} vertices, tournament on {H.order}")
    for i, (a, b, c) in enumerate(P.triangles):
        cyclic = H.has_edge(a, b) == H.has_edge(b, c) == H.has_edge(c, a)
        if not cyclic:
            raise DomainError(f"triangle {i} {(a + 1, b + 1, c + 1)} is not cyclically oriented")
    q = rescaled_q(H)
    base = RationalPolynomial((1, 0, -1)) ** P.L
    quot, rem = poly_divmod(q, base)
    if not rem.is_zero():
        raise DomainError("q_H is not divisible by (1 - x^2)^L")
    return quot
