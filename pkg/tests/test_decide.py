import math
import random
from fractions import Fraction as Fr

import pytest

from oracles import bisect_count_roots, naive_counting_polynomial, naive_degree_polynomial, naive_gcd, padd
from tourforce import DomainError, Tournament
from tourforce.decide import (
    IDENTICALLY_ZERO,
    ForcingReport,
    GlobalStatus,
    bip_gcd,
    cliq_polynomial,
    global_status,
    is_bip_forcing,
    is_cliq_forcing,
    is_locally_forcing,
)
from tourforce.generators import sample_cliq
from tourforce.tournament import degree_imbalance_sum, enumerate_all

C3 = Tournament.cyclic_triangle()
TR3 = Tournament.transitive(3)


def oracle_cliq(H):
    """Roots of 2**C p_H((1+t)/2) - 1 on (0, 1], from the h! definition."""
    h = H.order
    C = math.comb(h, 2)
    p = naive_counting_polynomial(H)
    # q(t) = 2**C p((1+t)/2): expand by Horner in t
    q = []
    for c in reversed(p):
        q = padd([x / 2 for x in q] + [Fr(0)], [Fr(0)] + [x / 2 for x in q]) if q else []
        q = padd(q, [c])
    q = [c * 2**C for c in q]
    g = padd(q, [Fr(-1)])
    if not g:
        return False, IDENTICALLY_ZERO
    while g[0] == 0:
        g = g[1:]
    n = bisect_count_roots(g, 0, 1, include_b=True)
    return n == 0, n


def oracle_bip(H):
    h = H.order
    t = Fr(1, 2 ** math.comb(h, 2))
    g = []
    for a in range(1, h):
        g = naive_gcd(g, padd(naive_degree_polynomial(H, a), [-t]))
    if not g:
        return False, IDENTICALLY_ZERO
    n = bisect_count_roots(g, Fr(1, 2), 1, include_b=True) if len(g) > 1 else 0
    return n == 0, n


def test_c3_examples():
    assert is_cliq_forcing(C3) == (True, 0)
    assert is_bip_forcing(C3) == (True, 0, 2)
    r = is_locally_forcing(C3)
    assert r.locally_forcing and r.global_status is GlobalStatus.SMALL_CASE_UNDETERMINED


def test_tr3_examples():
    assert is_cliq_forcing(TR3) == (True, 0)
    ok, n, deg = is_bip_forcing(TR3)
    assert ok and n == 0 and deg >= 1
    assert is_locally_forcing(TR3).locally_forcing


def test_degenerate_orders():
    # p is constant 2**-C, so every x is a solution: not forcing in either sense
    assert is_cliq_forcing(Tournament.transitive(2)) == (False, IDENTICALLY_ZERO)
    assert is_bip_forcing(Tournament.transitive(2)) == (False, IDENTICALLY_ZERO, IDENTICALLY_ZERO)
    assert is_cliq_forcing(Tournament(1)) == (False, IDENTICALLY_ZERO)
    with pytest.raises(DomainError):
        is_bip_forcing(Tournament(1))
    r = is_locally_forcing(Tournament(1))
    assert not r.locally_forcing and r.bip_common_root_count == IDENTICALLY_ZERO


def test_global_status():
    assert global_status(Tournament.transitive(5)) is GlobalStatus.GLOBALLY_FORCING_TRANSITIVE
    H = sample_cliq(7, Fr(1, 2), 1)
    assert global_status(H) is GlobalStatus.NOT_GLOBALLY_FORCING_LARGE_NONTRANSITIVE
    assert global_status(C3) is GlobalStatus.SMALL_CASE_UNDETERMINED
    assert global_status(TR3) is GlobalStatus.SMALL_CASE_UNDETERMINED


def test_verdicts_match_oracles_h_le_6():
    for h in range(1, 7):
        family = enumerate_all(h) if h <= 4 else enumerate_all(h, up_to_iso=True)
        for H in family:
            assert is_cliq_forcing(H) == oracle_cliq(H), H.code
            if h >= 2:
                assert is_bip_forcing(H)[:2] == oracle_bip(H), H.code


def test_half_is_always_a_common_root():
    for h in range(2, 7):
        for H in enumerate_all(h, up_to_iso=True):
            d = bip_gcd(H)
            assert d.is_zero() or d(Fr(1, 2)) == 0


def test_invariance_under_relabel_and_reversal():
    rng = random.Random(1)
    for s in range(15):
        H = sample_cliq(7, Fr(1, 2), 50 + s)
        perm = list(range(7))
        rng.shuffle(perm)
        base = is_locally_forcing(H)
        for other in (H.relabel(perm), H.reverse()):
            r = is_locally_forcing(other)
            assert (r.cliq_forcing, r.bip_forcing) == (base.cliq_forcing, base.bip_forcing)


def test_imbalanced_random_sample_is_not_forcing():
    seed = 0
    while True:
        H = sample_cliq(15, Fr(1, 2), seed)
        if degree_imbalance_sum(H) > 15 * 14:
            break
        seed += 1
    assert degree_imbalance_sum(H) > 210
    r = is_locally_forcing(H)
    assert not r.cliq_forcing and not r.locally_forcing and r.cliq_offending_root_count >= 1


def test_cliq_polynomial_strips_origin():
    assert cliq_polynomial(C3).coeffs == (-1,)
    assert cliq_polynomial(TR3).coeffs == (Fr(1, 3),)


def test_report_round_trip():
    r = is_locally_forcing(C3)
    assert ForcingReport.from_dict(r.to_dict()) == r
    assert r.to_dict()["global_status"] == "SMALL_CASE_UNDETERMINED"
