"""Edge partitions of K_h into triangles and leftover edges.

Steiner triple systems come from the Bose (h = 6n+3) and Skolem (h = 6n+1)
quasigroup constructions.  For other orders a partition is obtained by
deleting vertices from the next Steiner triple system and greedily packing
triangles into what is left.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .errors import DomainError, ParseError, ResourceError


@dataclass(frozen=True)
class TrianglePartition:
    """Triangles and single edges that together cover every edge of K_h exactly once.

    Vertices are ``0 .. h-1``; triangles are sorted triples, edges sorted pairs.
    """

    h: int
    triangles: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "triangles", tuple(tuple(sorted(t)) for t in self.triangles))
        object.__setattr__(self, "edges", tuple(tuple(sorted(e)) for e in self.edges))
        self.validate()

    @property
    def L(self) -> int:
        return len(self.triangles)

    @property
    def F(self) -> int:
        return len(self.edges)

    def validate(self) -> None:
        h = self.h
        seen = set()

        def claim(u, v, what):
            if not (0 <= u < h and 0 <= v < h) or u == v:
                raise DomainError(f"{what} uses an invalid vertex pair ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DomainError(f"{what} covers edge {key} a second time")
            seen.add(key)

        for i, (a, b, c) in enumerate(self.triangles):
            for u, v in ((a, b), (a, c), (b, c)):
                claim(u, v, f"triangle {i}")
        for j, (u, v) in enumerate(self.edges):
            claim(u, v, f"edge {j}")
        if len(seen) != h * (h - 1) // 2:
            raise DomainError(f"partition covers {len(seen)} of {h * (h - 1) // 2} edges of K_{h}")

    def leftover_degrees(self) -> list[int]:
        deg = [0] * self.h
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_leftover_degree(self) -> int:
        return max(self.leftover_degrees(), default=0)

    def meets_leftover_bound(self) -> bool:
        """Every vertex lies on fewer than sqrt(h)/2 leftover edges."""
        return all(4 * d * d < self.h for d in self.leftover_degrees())

    def to_text(self) -> str:
        lines = [f"tri {a + 1} {b + 1} {c + 1}" for a, b, c in self.triangles]
        lines += [f"edge {u + 1} {v + 1}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, h: int | None = None) -> "TrianglePartition":
        """Parse ``tri a b c`` / ``edge a b`` lines (1-based).  ``h`` defaults to the largest label."""
        tris, edges = [], []
        top = 0
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            try:
                nums = [int(x) for x in parts[1:]]
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex label") from None
            if parts[0] == "tri" and len(nums) == 3:
                tris.append(tuple(x - 1 for x in nums))
            elif parts[0] == "edge" and len(nums) == 2:
                edges.append(tuple(x - 1 for x in nums))
            else:
                raise ParseError(f"line {lineno}: expected 'tri a b c' or 'edge a b'")
            if min(nums) < 1:
                raise ParseError(f"line {lineno}: labels are 1-based")
            top = max(top, *nums)
        return cls(h if h is not None else top, tuple(tris), tuple(edges))


def is_sts_order(h: int) -> bool:
    return h >= 3 and h % 6 in (1, 3)


def bose_sts(h: int) -> TrianglePartition:
    """Bose construction for ``h = 6n + 3`` on points ``Z_{2n+1} x Z_3``."""
    if h % 6 != 3:
        raise DomainError(f"Bose construction needs h = 3 (mod 6), got {h}")
    m = h // 3  # 2n + 1
    half = (m + 1) // 2  # inverse of 2 modulo m

    def pt(x, i):
        return x + m * (i % 3)

    def op(x, y):
        return (half * (x + y)) % m

    tris = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(m)]
    for x, y in itertools.combinations(range(m), 2):
        for i in range(3):
            tris.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return TrianglePartition(h, tuple(tris))


def skolem_sts(h: int) -> TrianglePartition:
    """Skolem construction for ``h = 6n + 1`` on ``{inf} + Z_{2n} x Z_3``."""
    if h % 6 != 1 or h < 7:
        raise DomainError(f"Skolem construction needs h = 1 (mod 6), h >= 7, got {h}")
    n = (h - 1) // 6
    m = 2 * n
    inf = h - 1

    def pt(x, i):
        return x + m * (i % 3)

    def op(x, y):
        # half-idempotent commutative quasigroup: relabel the Z_2n addition table
        s = (x + y) % m
        return s // 2 if s % 2 == 0 else n + s // 2

    tris = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(n)]
    for x in range(n):
        for i in range(3):
            tris.append((inf, pt(x + n, i), pt(x, i + 1)))
    for x, y in itertools.combinations(range(m), 2):
        for i in range(3):
            tris.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return TrianglePartition(h, tuple(tris))


def steiner_triple_system(h: int) -> TrianglePartition:
    """A Steiner triple system on ``h`` points (``h = 1, 3 mod 6``, ``h >= 3``)."""
    if not is_sts_order(h):
        raise DomainError(
            f"no Steiner triple system on {h} points (need h = 1 or 3 mod 6); "
            "use partition_with_leftovers instead"
        )
    return bose_sts(h) if h % 6 == 3 else skolem_sts(h)


def _greedy_pack(h: int, edges: set, rng: random.Random) -> tuple[list, set]:
    adj = {v: set() for v in range(h)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    order = sorted(edges)
    rng.shuffle(order)
    tris = []
    for u, v in order:
        if v not in adj[u]:
            continue
        common = sorted(adj[u] & adj[v])
        if not common:
            continue
        w = rng.choice(common)
        tris.append((u, v, w))
        for a, b in ((u, v), (u, w), (v, w)):
            adj[a].discard(b)
            adj[b].discard(a)
    rest = {(min(a, b), max(a, b)) for a in adj for b in adj[a]}
    return tris, rest


def partition_with_leftovers(
    h: int, seed: int = 0, retries: int = 32, require_bound: bool = True
) -> TrianglePartition:
    """Triangles plus few leftover edges, every vertex on < sqrt(h)/2 leftovers.

    Takes the smallest Steiner order ``H >= h``, deletes ``H - h`` points
    (chosen at random), keeps the triangles that survive, and greedily packs
    further triangles into the uncovered edges.  The best of ``retries``
    attempts is returned; with ``require_bound`` a partition missing the
    bound raises ``ResourceError``.
    """
    if h < 3:
        raise DomainError("partition_with_leftovers needs h >= 3")
    if is_sts_order(h):
        return steiner_triple_system(h)
    big = h
    while not is_sts_order(big):
        big += 1
    sts = steiner_triple_system(big)
    rng = random.Random(seed)
    best = None
    for _ in range(max(retries, 1)):
        labels = list(range(big))
        rng.shuffle(labels)
        keep = {old: new for new, old in enumerate(sorted(labels[:h]))}
        tris = []
        covered = set()
        for t in sts.triangles:
            if all(v in keep for v in t):
                nt = tuple(sorted(keep[v] for v in t))
                tris.append(nt)
                covered.update({(nt[0], nt[1]), (nt[0], nt[2]), (nt[1], nt[2])})
        loose = {e for e in itertools.combinations(range(h), 2) if e not in covered}
        extra, rest = _greedy_pack(h, loose, rng)
        cand = TrianglePartition(h, tuple(tris + extra), tuple(sorted(rest)))
        key = (cand.max_leftover_degree(), cand.F)
        if best is None or key < best[0]:
            best = (key, cand)
        if cand.meets_leftover_bound():
            return cand
    part = best[1]
    if require_bound:
        raise ResourceError(
            f"no partition of K_{h} with every vertex on fewer than sqrt(h)/2 = "
            f"{math.sqrt(h) / 2:.3f} leftover edges after {retries} attempts; "
            f"best achieved max leftover degree {part.max_leftover_degree()}"
        )
    return part
