import math
from fractions import Fraction as Fr

import pytest

from oracles import brute_embeddings
from tourforce import DomainError, ResourceError, Tournament
from tourforce.counting import counting_polynomial
from tourforce.embeddings import (
    CountMode,
    EmbeddingCount,
    count_embeddings,
    mc_estimate_embeddings,
    transitive_lower_bound,
    transitive_triples_by_degree,
)
from tourforce.generators import sample_cliq
from tourforce.tournament import enumerate_all, falling_factorial

C3 = Tournament.cyclic_triangle()
TR3 = Tournament.transitive(3)
ROT5 = Tournament.rotational(5, [1, 2])


def test_examples():
    assert count_embeddings(ROT5, C3).value == 15
    assert count_embeddings(ROT5, TR3).value == 5
    T = sample_cliq(9, Fr(1, 2), 4)
    assert count_embeddings(T, Tournament(1)).value == 9


def test_matches_brute_force():
    for s in range(20):
        T = sample_cliq(7, Fr(1, 2), s)
        for H in enumerate_all(4, up_to_iso=True):
            assert count_embeddings(T, H).value == brute_embeddings(T, H)
        U = [0, 2, 3, 5, 6]
        assert count_embeddings(T, C3, U).value == brute_embeddings(T, C3, U)


def test_triple_identities_exhaustive_n5_random_6_7():
    hosts = list(enumerate_all(5)) + [sample_cliq(n, Fr(1, 2), s) for n in (6, 7) for s in range(30)]
    for T in hosts:
        c3, tr3 = count_embeddings(T, C3).value, count_embeddings(T, TR3).value
        assert c3 // 3 + tr3 == math.comb(T.order, 3) and c3 % 3 == 0
        assert tr3 == transitive_triples_by_degree(T)


def test_monotone_in_subset():
    T = sample_cliq(12, Fr(1, 2), 3)
    prev = 0
    for k in range(3, 13):
        cur = count_embeddings(T, C3, range(k)).value
        assert cur >= prev
        prev = cur


def test_budget():
    with pytest.raises(ResourceError, match="Monte Carlo"):
        count_embeddings(sample_cliq(200, Fr(1, 2), 1), Tournament.transitive(6))
    assert count_embeddings(TR3, Tournament.transitive(4)).value == 0


def test_threads_do_not_change_result():
    T = sample_cliq(30, Fr(1, 2), 8)
    H = Tournament.rotational(5, [1, 2])
    assert count_embeddings(T, H, threads=1) == count_embeddings(T, H, threads=3)


def test_mc_against_exact_n20_h4():
    for s in range(5):
        T = sample_cliq(20, Fr(1, 2), 300 + s)
        H = sample_cliq(4, Fr(1, 2), 400 + s)
        exact = count_embeddings(T, H).value
        est = mc_estimate_embeddings(T, H, samples=20000, seed=s)
        assert est.mode is CountMode.MONTE_CARLO
        assert abs(float(est.estimate) - exact) <= 4 * est.std_error
        assert 0 <= est.estimate <= 20**4


def test_mc_large_host_matches_counting_polynomial():
    T = sample_cliq(500, Fr(7, 10), 11)
    est = mc_estimate_embeddings(T, C3, samples=40000, seed=12)
    target = falling_factorial(500, 3) * counting_polynomial(C3)(Fr(7, 10))
    assert counting_polynomial(C3)(Fr(7, 10)) == Fr(21, 200)
    # the host itself is random, so allow its own sampling noise as well
    assert abs(float(est.estimate - target)) <= 4 * est.std_error + 0.01 * float(target)


def test_mc_on_copy_of_pattern():
    est = mc_estimate_embeddings(ROT5, C3, U=[0, 1, 2, 3, 4], samples=500, seed=1)
    assert 0 <= est.hits <= est.samples
    with pytest.raises(DomainError):
        mc_estimate_embeddings(ROT5, C3, U=[0, 1], samples=10, seed=1)
    with pytest.raises(DomainError):
        mc_estimate_embeddings(ROT5, C3, samples=0, seed=1)


def test_mc_tuples_are_uniform():
    # with h = n every ordered tuple is a permutation; each of the 3! should appear
    est = mc_estimate_embeddings(C3, C3, samples=6000, seed=5)
    assert abs(est.hits / 6000 - 0.5) < 0.03  # 3 of 6 labelled maps preserve C3


def test_transitive_lower_bound():
    assert transitive_lower_bound(3, 5) == 5
    assert transitive_lower_bound(3, 4) == Fr(3, 2)
    for h in range(2, 7):
        assert transitive_lower_bound(h, 2 ** (h - 1) - 2) == 0
    for n in range(0, 20):
        assert transitive_lower_bound(1, n) == n
    with pytest.raises(DomainError):
        transitive_lower_bound(0, 3)


def test_count_json_round_trip():
    for c in (count_embeddings(ROT5, C3), mc_estimate_embeddings(ROT5, C3, samples=100, seed=3)):
        assert EmbeddingCount.from_dict(c.to_dict()) == c
