"""Quasirandomness statistics that every non-transitive locally forcing tournament must satisfy.

The irrational thresholds ``h**2/4 + h**1.5 * sqrt(log h)`` and ``2 h**1.5``
are replaced by rational upper bounds with denominator ``2**20``, so a
reported failure is always genuine.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ResourceError
from .tournament import Tournament, degree_imbalance_sum, is_transitive

FORWARD_CAP = 24
SURPLUS_CAP = 18
BOUND_DENOMINATOR = 1 << 20


def _upper_rational(value: decimal.Decimal) -> Fraction:
    slack = decimal.Decimal(10) ** -40
    n = int(((value + slack) * BOUND_DENOMINATOR).to_integral_value(rounding=decimal.ROUND_FLOOR)) + 1
    return Fraction(n, BOUND_DENOMINATOR)


def forward_bound(h: int) -> Fraction:
    """Rational upper bound on ``h**2/4 + h**(3/2) sqrt(ln h)``."""
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        d = decimal.Decimal(h)
        v = d * d / 4 + d * d.sqrt() * d.ln().sqrt()
        return _upper_rational(v)


def surplus_bound(h: int) -> Fraction:
    """Rational upper bound on ``2 h**(3/2)``."""
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        d = decimal.Decimal(h)
        return _upper_rational(2 * d * d.sqrt())


def _layers(h: int) -> list[np.ndarray]:
    masks = np.arange(1 << h, dtype=np.int64)
    pc = np.bitwise_count(masks)
    order = np.argsort(pc, kind="stable")
    bounds = np.searchsorted(pc[order], np.arange(h + 2))
    return [masks[order[bounds[k] : bounds[k + 1]]] for k in range(h + 1)]


def _best_forward_table(H: Tournament, cap: int) -> np.ndarray:
    h = H.order
    if h > cap:
        raise ResourceError(f"feedback-arc-set DP is capped at h={cap}, got h={h}")
    best = np.zeros(1 << h, dtype=np.int16)
    for layer in _layers(h)[1:]:
        acc = np.full(len(layer), -1, dtype=np.int16)
        for v in range(h):
            has = (layer >> v) & 1 == 1
            sel = layer[has]
            gain = np.bitwise_count(sel & H.in_masks[v]).astype(np.int16)
            cand = best[sel ^ (1 << v)] + gain
            acc[has] = np.maximum(acc[has], cand)
        best[layer] = acc
    return best


def max_forward_edges(H: Tournament, cap: int = FORWARD_CAP) -> int:
    """Maximum over all orderings of the number of forward edges.

    ``best(S) = max_v best(S - v) + |in(v) & (S - v)|`` with ``v`` placed last.
    """
    return int(_best_forward_table(H, cap)[-1])


def max_forward_ordering(H: Tournament, cap: int = FORWARD_CAP) -> list[int]:
    """An ordering (``sigma[v]`` = position) attaining :func:`max_forward_edges`."""
    best = _best_forward_table(H, cap)
    h = H.order
    S = (1 << h) - 1
    sigma = [0] * h
    for pos in range(h - 1, -1, -1):
        for v in range(h):
            if (S >> v) & 1:
                sub = S ^ (1 << v)
                if best[S] == best[sub] + (H.in_masks[v] & sub).bit_count():
                    sigma[v] = pos
                    S = sub
                    break
    return sigma


def max_directed_surplus(H: Tournament, cap: int = SURPLUS_CAP) -> tuple[Fraction, list[int], list[int]]:
    """``max e(U, W) - |U||W|/2`` over disjoint ``U, W`` with a maximising pair.

    For fixed ``U`` the objective splits over ``w`` outside ``U``, each
    contributing ``|in(w) & U| - |U|/2``; the best ``W`` takes exactly the
    positive contributions.  So only the ``2**h`` choices of ``U`` are scanned.
    """
    h = H.order
    if h > cap:
        raise ResourceError(f"surplus enumeration is capped at h={cap}, got h={h}")
    U = np.arange(1 << h, dtype=np.int64)
    size = np.bitwise_count(U).astype(np.int32)
    twice = np.zeros(1 << h, dtype=np.int32)
    for w in range(h):
        gain = 2 * np.bitwise_count(U & H.in_masks[w]).astype(np.int32) - size
        outside = (U >> w) & 1 == 0
        twice += np.where(outside & (gain > 0), gain, 0)
    i = int(np.argmax(twice))
    best = int(twice[i])
    u_set = [v for v in range(h) if (i >> v) & 1]
    w_set = [
        w for w in range(h)
        if not (i >> w) & 1 and 2 * (H.in_masks[w] & i).bit_count() > len(u_set)
    ]
    return Fraction(best, 2), u_set, w_set


def is_nearly_regular(H: Tournament) -> bool:
    """Every vertex has ``|d+ - d-| < sqrt(h)/2``."""
    h = H.order
    return all(4 * (2 * d - (h - 1)) ** 2 < h for d in H.out_degrees())


@dataclass(frozen=True)
class MetricsReport:
    h: int
    is_transitive: bool
    imbalance_sum: int
    imbalance_bound: int
    imbalance_ok: bool
    max_forward: int
    forward_bound: Fraction
    forward_ok: bool
    max_surplus: Fraction
    surplus_bound: Fraction
    surplus_ok: bool
    surplus_witness_u: tuple[int, ...]
    surplus_witness_w: tuple[int, ...]
    nearly_regular: bool

    @property
    def all_ok(self) -> bool:
        return self.imbalance_ok and self.forward_ok and self.surplus_ok

    def to_dict(self) -> dict:
        return {
            "h": self.h,
            "is_transitive": self.is_transitive,
            "imbalance_sum": self.imbalance_sum,
            "imbalance_bound": self.imbalance_bound,
            "imbalance_ok": self.imbalance_ok,
            "max_forward": self.max_forward,
            "forward_bound": _frac_text(self.forward_bound),
            "forward_ok": self.forward_ok,
            "max_surplus": _frac_text(self.max_surplus),
            "surplus_bound": _frac_text(self.surplus_bound),
            "surplus_ok": self.surplus_ok,
            "surplus_witness_u": [v + 1 for v in self.surplus_witness_u],
            "surplus_witness_w": [v + 1 for v in self.surplus_witness_w],
            "nearly_regular": self.nearly_regular,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MetricsReport":
        d = dict(d)
        for k in ("forward_bound", "max_surplus", "surplus_bound"):
            d[k] = Fraction(d[k])
        for k in ("surplus_witness_u", "surplus_witness_w"):
            d[k] = tuple(v - 1 for v in d[k])
        return cls(**d)


def _frac_text(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def necessary_conditions(H: Tournament) -> MetricsReport:
    """Degree, ordering and cut statistics against their thresholds.

    The thresholds only constrain non-transitive tournaments; the report
    flags ``is_transitive`` so callers can tell.
    """
    h = H.order
    imb = degree_imbalance_sum(H)
    mf = max_forward_edges(H)
    fb = forward_bound(h)
    ms, u, w = max_directed_surplus(H)
    sb = surplus_bound(h)
    return MetricsReport(
        h=h,
        is_transitive=is_transitive(H),
        imbalance_sum=imb,
        imbalance_bound=h * (h - 1),
        imbalance_ok=imb <= h * (h - 1),
        max_forward=mf,
        forward_bound=fb,
        forward_ok=mf <= fb,
        max_surplus=ms,
        surplus_bound=sb,
        surplus_ok=ms <= sb,
        surplus_witness_u=tuple(u),
        surplus_witness_w=tuple(w),
        nearly_regular=is_nearly_regular(H),
    )
