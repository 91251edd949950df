"""Exact decisions: T_cliq-forcing, T_bip-forcing, locally forcing, global status.

Everything is decided by root counting on exact polynomials; no floating
point is involved.  A root count of ``-1`` means the polynomial in question
vanishes identically (every point is a root), which happens for ``h <= 2``.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from fractions import Fraction

from .counting import bundle
from .errors import DomainError
from .poly import RationalPolynomial, count_roots_in, gcd_many
from .tournament import Tournament, is_transitive

IDENTICALLY_ZERO = -1


class GlobalStatus(str, enum.Enum):
    GLOBALLY_FORCING_TRANSITIVE = "GLOBALLY_FORCING_TRANSITIVE"
    NOT_GLOBALLY_FORCING_LARGE_NONTRANSITIVE = "NOT_GLOBALLY_FORCING_LARGE_NONTRANSITIVE"
    SMALL_CASE_UNDETERMINED = "SMALL_CASE_UNDETERMINED"


@dataclass(frozen=True)
class ForcingReport:
    h: int
    is_transitive: bool
    cliq_forcing: bool
    bip_forcing: bool
    locally_forcing: bool
    global_status: GlobalStatus
    cliq_offending_root_count: int
    bip_common_root_count: int
    gcd_degree: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["global_status"] = self.global_status.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ForcingReport":
        d = dict(d)
        d["global_status"] = GlobalStatus(d["global_status"])
        return cls(**d)


def cliq_polynomial(H: Tournament) -> RationalPolynomial:
    """``(q_H - 1) / x**(2k)`` with the power of ``x`` at the origin removed."""
    g = bundle(H).q - 1
    if g.is_zero():
        return g
    return g.shift_down(g.lowest_power())


def is_cliq_forcing(H: Tournament) -> tuple[bool, int]:
    """``(verdict, offending_root_count)``.

    ``p_H(x) = 2**-C(h,2)`` at ``x != 1/2`` iff ``q_H(t) = 1`` at some
    ``t = 2x - 1 != 0``; since ``q_H`` is even it suffices to look at
    ``t`` in ``(0, 1]``.
    """
    g = cliq_polynomial(H)
    if g.is_zero():
        return False, IDENTICALLY_ZERO
    n = count_roots_in(g, 0, 1, include_a=False, include_b=True)
    return n == 0, n


def bip_gcd(H: Tournament) -> RationalPolynomial:
    """Monic GCD of ``p_{H,a} - 2**-C(h,2)`` over ``a = 1..h-1``."""
    h = H.order
    if h < 2:
        raise DomainError("T_bip-forcing needs h >= 2 (no admissible a)")
    target = Fraction(1, 2 ** (h * (h - 1) // 2))
    return gcd_many(p - target for p in bundle(H).per_a.values())


def is_bip_forcing(H: Tournament) -> tuple[bool, int, int]:
    """``(verdict, common_root_count in (1/2, 1], gcd_degree)``."""
    d = bip_gcd(H)
    if d.is_zero():
        return False, IDENTICALLY_ZERO, IDENTICALLY_ZERO
    if d.degree == 0:
        return True, 0, 0
    n = count_roots_in(d, Fraction(1, 2), 1, include_a=False, include_b=True)
    return n == 0, n, d.degree


def global_status(H: Tournament) -> GlobalStatus:
    tr = is_transitive(H)
    if tr and H.order >= 4:
        return GlobalStatus.GLOBALLY_FORCING_TRANSITIVE
    if not tr and H.order >= 7:
        return GlobalStatus.NOT_GLOBALLY_FORCING_LARGE_NONTRANSITIVE
    return GlobalStatus.SMALL_CASE_UNDETERMINED


def is_locally_forcing(H: Tournament) -> ForcingReport:
    cliq, cliq_n = is_cliq_forcing(H)
    if H.order == 1:
        # no admissible a: the condition holds vacuously at every x
        bip, bip_n, gdeg = False, IDENTICALLY_ZERO, IDENTICALLY_ZERO
    else:
        bip, bip_n, gdeg = is_bip_forcing(H)
    return ForcingReport(
        h=H.order,
        is_transitive=is_transitive(H),
        cliq_forcing=cliq,
        bip_forcing=bip,
        locally_forcing=cliq and bip,
        global_status=global_status(H),
        cliq_offending_root_count=cliq_n,
        bip_common_root_count=bip_n,
        gcd_degree=gdeg,
    )
