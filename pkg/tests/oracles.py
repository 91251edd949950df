"""Slow, definitional reference implementations used only by the tests.

Each one is written straight from the definition with plain lists of
Fractions, sharing no code with the library beyond the Tournament type.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


# --- plain-list polynomial helpers (index k = coefficient of x**k) -------------


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def pmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def ppow(p, k):
    out = [Fraction(1)]
    for _ in range(k):
        out = pmul(out, p)
    return out


def peval(p, x):
    v = Fraction(0)
    for c in reversed(p):
        v = v * x + c
    return v


def pderiv(p):
    return trim([k * c for k, c in enumerate(p)][1:])


def pdivmod(a, b):
    a = [Fraction(c) for c in trim(a)]
    b = trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        a = trim(a)
    return trim(q), a


def monic(p):
    p = trim(p)
    return [Fraction(c) / p[-1] for c in p] if p else []


def naive_gcd(p, q):
    """Textbook Euclid over the rationals, monic result."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, pdivmod(a, b)[1]
    return monic(a)


def naive_square_free(p):
    g = naive_gcd(p, pderiv(p))
    return monic(pdivmod(p, g)[0]) if len(g) > 1 else monic(p)


# --- root counting by Descartes bisection ---------------------------------------


def _variations(coeffs):
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _descartes_bound(f, lo, hi):
    """Sign variations of ``(1+s)**d f((lo + hi s)/(1+s))``; bounds roots in (lo, hi)."""
    d = len(f) - 1
    acc = []
    for k, c in enumerate(f):
        term = pmul(ppow([Fraction(lo), Fraction(hi)], k), ppow([Fraction(1), Fraction(1)], d - k))
        acc = padd(acc, [c * t for t in term])
    return _variations(acc)


def _open_count(f, lo, hi, min_width):
    v = _descartes_bound(f, lo, hi)
    if v == 0:
        return 0
    if v == 1:
        return 1
    mid = (lo + hi) / 2
    if hi - lo < min_width:
        raise AssertionError("bisection oracle failed to separate roots")
    hit = 1 if peval(f, mid) == 0 else 0
    return hit + _open_count(f, lo, mid, min_width) + _open_count(f, mid, hi, min_width)


def bisect_count_roots(p, a, b, include_a=False, include_b=False, min_width=Fraction(1, 2**40)):
    """Distinct real roots of ``p`` between ``a`` and ``b`` by exact bisection."""
    f = naive_square_free(p)
    a, b = Fraction(a), Fraction(b)
    n = _open_count(f, a, b, min_width) if len(f) > 1 else 0
    n += int(include_a and peval(f, a) == 0) + int(include_b and peval(f, b) == 0)
    return n


# --- definitional tournament quantities -----------------------------------------


def binom_term(k, total):
    """Coefficients of ``x**k (1-x)**(total-k)``."""
    return pmul([Fraction(0)] * k + [Fraction(1)], ppow([Fraction(1), Fraction(-1)], total - k))


def naive_counting_polynomial(H):
    """Average of ``x**F (1-x)**B`` over all ``h!`` orderings."""
    h = H.order
    C = h * (h - 1) // 2
    hist = [0] * (C + 1)
    for perm in itertools.permutations(range(h)):
        pos = {v: i for i, v in enumerate(perm)}
        F = sum(1 for u in range(h) for v in range(h) if u != v and H.has_edge(u, v) and pos[u] < pos[v])
        hist[F] += 1
    out = []
    for k, c in enumerate(hist):
        if c:
            out = padd(out, [c * t for t in binom_term(k, C)])
    return [Fraction(c) / math.factorial(h) for c in out]


def naive_degree_polynomial(H, a):
    h = H.order
    acc = []
    for A in itertools.combinations(range(h), a):
        rest = [v for v in range(h) if v not in A]
        e = sum(1 for u in A for w in rest if H.has_edge(u, w))
        acc = padd(acc, binom_term(e, a * (h - a)))
    den = math.comb(h, a) * 2 ** (math.comb(a, 2) + math.comb(h - a, 2))
    return [Fraction(c) / den for c in acc]


def brute_max_forward(H):
    """Forward-edge count of every one of the ``h!`` orderings, maximised."""
    import numpy as np

    h = H.order
    if h < 2:
        return 0
    perms = np.array(list(itertools.permutations(range(h))), dtype=np.intp)
    adj = np.asarray(H.adjacency(), dtype=np.int64)
    total = np.zeros(len(perms), dtype=np.int64)
    for i in range(h):
        for j in range(i + 1, h):
            total += adj[perms[:, i], perms[:, j]]
    return int(total.max())


def brute_surplus(H):
    """Max of ``e(U, W) - |U||W|/2`` over all ``3**h`` placements."""
    h = H.order
    best = Fraction(0)
    for labels in itertools.product((0, 1, 2), repeat=h):
        U = [v for v in range(h) if labels[v] == 1]
        W = [v for v in range(h) if labels[v] == 2]
        e = sum(1 for u in U for w in W if H.has_edge(u, w))
        best = max(best, e - Fraction(len(U) * len(W), 2))
    return best


def brute_embeddings(T, H, U=None):
    verts = list(range(T.order)) if U is None else list(U)
    h = H.order
    count = 0
    for img in itertools.permutations(verts, h):
        if all(T.has_edge(img[i], img[j]) == H.has_edge(i, j) for i in range(h) for j in range(i + 1, h)):
            count += 1
    return count


def brute_canonical_code(T):
    from tourforce import Tournament

    best = None
    h = T.order
    for perm in itertools.permutations(range(h)):
        bits = "".join(
            "1" if T.has_edge(perm[i], perm[j]) else "0" for i in range(h) for j in range(i + 1, h)
        )
        if best is None or bits < best:
            best = bits
    return Tournament.from_code(f"n={h};bits={best}").code
