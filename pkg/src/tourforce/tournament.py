"""Tournament representation, vertex orderings and basic edge statistics.

Vertices are ``0 .. h-1`` in the Python API and ``1 .. h`` in every textual
format.  The orientation is packed into a single integer: bit ``k`` is the
``k``-th pair of the row-major upper triangle ``(0,1), (0,2), ..., (h-2,h-1)``
and is set iff the lower-indexed vertex beats the higher-indexed one.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError, ParseError, ResourceError

ISO_CAP = 7
LABELLED_CAP = 6

_CODE_RE = re.compile(r"n=(\d+);bits=([01]*)")


def pair_index(i: int, j: int, h: int) -> int:
    """Position of the pair ``{i, j}`` (``i < j``) in the upper-triangle order."""
    return i * h - i * (i + 1) // 2 + (j - i - 1)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


class Tournament:
    """Immutable tournament on ``order`` vertices.

    ``out_masks[v]`` / ``in_masks[v]`` are bitmasks of the out- and
    in-neighbourhood of ``v``; they are derived once at construction.
    """

    __slots__ = ("order", "bits", "out_masks", "in_masks")

    def __init__(self, order: int, bits: int = 0):
        if order < 1:
            raise DomainError(f"a tournament needs at least one vertex, got {order}")
        m = order * (order - 1) // 2
        if bits < 0 or bits >> m:
            raise DomainError(f"orientation word has more than {m} bits")
        out = [0] * order
        inn = [0] * order
        k = 0
        for i in range(order):
            for j in range(i + 1, order):
                if (bits >> k) & 1:
                    out[i] |= 1 << j
                    inn[j] |= 1 << i
                else:
                    out[j] |= 1 << i
                    inn[i] |= 1 << j
                k += 1
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "out_masks", tuple(out))
        object.__setattr__(self, "in_masks", tuple(inn))

    def __setattr__(self, name, value):
        raise AttributeError("Tournament is immutable")

    def __eq__(self, other):
        if not isinstance(other, Tournament):
            return NotImplemented
        return self.order == other.order and self.bits == other.bits

    def __hash__(self):
        return hash((self.order, self.bits))

    def __repr__(self):
        return f"Tournament({self.code!r})"

    def __reduce__(self):
        return (Tournament, (self.order, self.bits))

    # construction -------------------------------------------------------

    @classmethod
    def from_code(cls, code: str) -> "Tournament":
        """Parse ``n=<h>;bits=<b1...>``."""
        m = _CODE_RE.fullmatch(code.strip())
        if m is None:
            pos = _first_bad_position(code.strip())
            raise ParseError(f"malformed tournament code at position {pos}: {code!r}")
        h = int(m.group(1))
        s = m.group(2)
        need = h * (h - 1) // 2
        if h < 1:
            raise ParseError("tournament code: n must be at least 1")
        if len(s) != need:
            pos = m.start(2) + min(len(s), need)
            raise ParseError(
                f"tournament code: expected {need} bits for n={h}, got {len(s)} "
                f"(position {pos})"
            )
        bits = 0
        for k, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << k
        return cls(h, bits)

    @classmethod
    def from_adjacency_text(cls, text: str) -> "Tournament":
        """Parse ``h`` lines of ``h`` characters from ``{0, 1, -}``.

        Entry ``(u, v)`` is ``1`` iff ``u -> v``; the diagonal must be ``-``.
        """
        rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
        h = len(rows)
        if h == 0:
            raise ParseError("adjacency matrix is empty")
        for r, row in enumerate(rows):
            if len(row) != h:
                raise ParseError(f"adjacency row {r + 1} has length {len(row)}, expected {h}")
            for c, ch in enumerate(row):
                if ch not in "01-":
                    raise ParseError(f"bad character {ch!r} at row {r + 1}, column {c + 1}")
                if (ch == "-") != (r == c):
                    raise ParseError(f"'-' must appear exactly on the diagonal (row {r + 1}, column {c + 1})")
        bits = 0
        k = 0
        for i in range(h):
            for j in range(i + 1, h):
                a, b = rows[i][j], rows[j][i]
                if a == b:
                    raise ParseError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not anti-symmetric")
                if a == "1":
                    bits |= 1 << k
                k += 1
        return cls(h, bits)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Tournament":
        """Build from a list of directed edges ``(u, v)``; every pair must appear once."""
        bits = 0
        seen = set()
        for u, v in edges:
            if u == v or not (0 <= u < order and 0 <= v < order):
                raise DomainError(f"invalid edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DomainError(f"pair {key} oriented twice")
            seen.add(key)
            if u < v:
                bits |= 1 << pair_index(u, v, order)
        if len(seen) != order * (order - 1) // 2:
            raise DomainError("edge list does not orient every pair")
        return cls(order, bits)

    @classmethod
    def from_matrix(cls, adj) -> "Tournament":
        a = np.asarray(adj, dtype=bool)
        h = a.shape[0]
        if a.shape != (h, h) or a.diagonal().any() or not np.array_equal(a ^ a.T, ~np.eye(h, dtype=bool)):
            raise DomainError("matrix is not the adjacency matrix of a tournament")
        bits = 0
        k = 0
        for i in range(h):
            for j in range(i + 1, h):
                if a[i, j]:
                    bits |= 1 << k
                k += 1
        return cls(h, bits)

    @classmethod
    def transitive(cls, h: int) -> "Tournament":
        """``Tr_h`` with ``i -> j`` whenever ``i < j``."""
        return cls(h, (1 << (h * (h - 1) // 2)) - 1)

    @classmethod
    def cyclic_triangle(cls) -> "Tournament":
        return cls.from_code("n=3;bits=101")

    @classmethod
    def rotational(cls, h: int, shifts: Iterable[int]) -> "Tournament":
        """Circulant tournament: ``i -> i + s (mod h)`` for every ``s`` in ``shifts``.

        ``shifts`` must contain exactly one of ``s`` and ``h - s`` for every
        nonzero residue ``s``.
        """
        sh = {s % h for s in shifts}
        for s in range(1, h):
            if (s in sh) == ((h - s) in sh):
                raise DomainError(f"shift set does not define a tournament (residue {s})")
        edges = [(i, (i + s) % h) for i in range(h) for s in sh]
        return cls.from_edges(h, edges)

    # access -------------------------------------------------------------

    @property
    def code(self) -> str:
        m = self.order * (self.order - 1) // 2
        return f"n={self.order};bits=" + "".join("1" if (self.bits >> k) & 1 else "0" for k in range(m))

    def to_code(self) -> str:
        return self.code

    def to_adjacency_text(self) -> str:
        h = self.order
        rows = []
        for u in range(h):
            rows.append("".join("-" if u == v else ("1" if (self.out_masks[u] >> v) & 1 else "0") for v in range(h)))
        return "\n".join(rows) + "\n"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.out_masks[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in vertices_of(self.out_masks[u])]

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def out_degrees(self) -> list[int]:
        return [m.bit_count() for m in self.out_masks]

    def in_degrees(self) -> list[int]:
        return [m.bit_count() for m in self.in_masks]

    def adjacency(self) -> np.ndarray:
        h = self.order
        a = np.zeros((h, h), dtype=bool)
        for u in range(h):
            for v in vertices_of(self.out_masks[u]):
                a[u, v] = True
        return a

    # derived tournaments ------------------------------------------------

    def reverse(self) -> "Tournament":
        """Reverse every edge."""
        m = self.order * (self.order - 1) // 2
        return Tournament(self.order, self.bits ^ ((1 << m) - 1))

    def relabel(self, perm: Sequence[int]) -> "Tournament":
        """Vertex ``v`` becomes ``perm[v]``."""
        h = self.order
        if sorted(perm) != list(range(h)):
            raise DomainError("relabelling is not a permutation")
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        return Tournament.from_edges(h, edges)

    def induced(self, vertices: Iterable[int]) -> "Tournament":
        """Subtournament on ``vertices``, relabelled ``0..k-1`` in increasing order."""
        vs = sorted(set(vertices))
        if not vs:
            raise DomainError("induced subtournament needs at least one vertex")
        k = len(vs)
        bits = 0
        idx = 0
        for a in range(k):
            for b in range(a + 1, k):
                if self.has_edge(vs[a], vs[b]):
                    bits |= 1 << idx
                idx += 1
        return Tournament(k, bits)


def _first_bad_position(code: str) -> int:
    prefix = "n="
    for i, ch in enumerate(code[:2]):
        if ch != prefix[i]:
            return i
    i = 2
    while i < len(code) and code[i].isdigit():
        i += 1
    rest = ";bits="
    for k, ch in enumerate(rest):
        if i + k >= len(code) or code[i + k] != ch:
            return i + k
    i += len(rest)
    while i < len(code) and code[i] in "01":
        i += 1
    return i


# orderings ----------------------------------------------------------------


def check_ordering(sigma: Sequence[int], h: int) -> None:
    if len(sigma) != h or sorted(sigma) != list(range(h)):
        raise DomainError("ordering must be a permutation of 0..h-1")


def ordering_from_sequence(seq: Sequence[int]) -> list[int]:
    """Turn a vertex sequence (first, second, ...) into positions ``sigma[v]``."""
    sigma = [0] * len(seq)
    for pos, v in enumerate(seq):
        sigma[v] = pos
    return sigma


def reversal(sigma: Sequence[int]) -> list[int]:
    h = len(sigma)
    return [h - 1 - p for p in sigma]


def forward_edges(T: Tournament, sigma: Sequence[int]) -> int:
    """Number of edges ``u -> v`` with ``sigma[u] < sigma[v]``; ``sigma[v]`` is v's position."""
    check_ordering(sigma, T.order)
    return sum(1 for u, v in T.edges() if sigma[u] < sigma[v])


def degree_imbalance_sum(T: Tournament) -> int:
    h = T.order
    return sum((2 * d - (h - 1)) ** 2 for d in T.out_degrees())


def e_between(T: Tournament, U: Iterable[int], W: Iterable[int]) -> int:
    """Number of edges starting in ``U`` and ending in ``W``."""
    um, wm = mask_of(U), mask_of(W)
    if um & wm:
        raise DomainError("U and W must be disjoint")
    if (um | wm) >> T.order:
        raise DomainError("vertex out of range")
    return sum((T.out_masks[u] & wm).bit_count() for u in vertices_of(um))


def is_transitive(T: Tournament) -> bool:
    return sorted(T.out_degrees()) == list(range(T.order))


def is_regular(T: Tournament) -> bool:
    return all(2 * d == T.order - 1 for d in T.out_degrees())


# canonical forms and enumeration -------------------------------------------


@lru_cache(maxsize=None)
def _perm_table(h: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(h))), dtype=np.intp).reshape(-1, h)


@lru_cache(maxsize=None)
def _pair_table(h: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    ii, jj = np.triu_indices(h, 1)
    m = len(ii)
    weights = np.array([1 << (m - 1 - k) for k in range(m)], dtype=np.int64)
    return ii, jj, weights


def canonical_form(T: Tournament, cap: int = ISO_CAP) -> Tournament:
    """Relabelling of ``T`` whose code is lexicographically smallest.

    Brute force over all ``h!`` relabellings; only meant for ``h <= cap``.
    """
    h = T.order
    if h > cap:
        raise ResourceError(f"canonical form is brute force; h={h} exceeds cap {cap}")
    if h <= 2:
        return Tournament(h, 0)
    adj = T.adjacency()
    perms = _perm_table(h)
    ii, jj, weights = _pair_table(h)
    # row p lists the original vertex placed at each new position
    bits = adj[perms[:, ii], perms[:, jj]]
    keys = bits.astype(np.int64) @ weights
    best = bits[int(np.argmin(keys))]
    word = 0
    for k, b in enumerate(best):
        if b:
            word |= 1 << k
    return Tournament(h, word)


def canonical_code(T: Tournament, cap: int = ISO_CAP) -> str:
    return canonical_form(T, cap).code


def enumerate_all(h: int, up_to_iso: bool = False, cap: int | None = None) -> Iterator[Tournament]:
    """All labelled tournaments on ``h`` vertices, or one canonical form per class.

    Isomorphism classes are generated by extending the classes on ``h-1``
    vertices by one vertex in every possible way and deduplicating canonical
    forms.
    """
    if cap is None:
        cap = ISO_CAP if up_to_iso else LABELLED_CAP
    if h < 1:
        raise DomainError("h must be positive")
    if h > cap:
        raise ResourceError(f"enumeration of h={h} exceeds cap {cap}")
    if not up_to_iso:
        m = h * (h - 1) // 2
        for bits in range(1 << m):
            yield Tournament(h, bits)
        return
    yield from _iso_classes(h)


@lru_cache(maxsize=None)
def _iso_classes(h: int) -> tuple[Tournament, ...]:
    if h == 1:
        return (Tournament(1),)
    found = set()
    for base in _iso_classes(h - 1):
        for pattern in range(1 << (h - 1)):
            edges = base.edges()
            for u in range(h - 1):
                edges.append((h - 1, u) if (pattern >> u) & 1 else (u, h - 1))
            found.add(canonical_form(Tournament.from_edges(h, edges), cap=max(ISO_CAP, h)))
    return tuple(sorted(found, key=lambda t: t.code))


def iso_class_count(h: int) -> int:
    return len(_iso_classes(h))


def falling_factorial(n: int, k: int) -> int:
    return math.perm(n, k) if 0 <= k <= n else 0
