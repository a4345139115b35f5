"""Fibonacci-pair enumeration, discrete logs, and the ranked search."""

from math import gcd as int_gcd

import pytest

from tausworthe.gf2poly import (
    X,
    all_quotients_degree_one,
    continued_fraction,
    degree,
    factor_integer,
    gcd,
    modpow,
    parse_poly,
)
from tausworthe.lattice import t_value
from tausworthe.search import (
    FibonacciPair,
    SearchRecord,
    algorithm1,
    census_t3,
    discrete_log_x,
    enumerate_fibonacci,
    find_t0_s3_matrices,
    select_best,
    verify_no_t0_s3,
)

P10 = parse_poly("1 0 0 0 0 0 1 1 0 1 1")
Q10 = parse_poly("0 1 0 1 1 1 0 1 0 1")


def test_enumerate_smallest_cases():
    assert [(p.fm, p.fm1) for p in enumerate_fibonacci(1)] == [(0b10, 1), (0b11, 1)]
    pairs2 = {(p.fm, p.fm1) for p in enumerate_fibonacci(2)}
    assert (0b101, 0b10) in pairs2  # A_1 = A_2 = x gives (x^2+1, x)
    assert len(pairs2) == 4


def test_enumerate_count_and_structure():
    seen = set()
    for pair in enumerate_fibonacci(12):
        assert degree(pair.fm) == 12
        assert degree(pair.fm1) == 11
        assert gcd(pair.fm, pair.fm1) == 1
        seen.add((pair.fm, pair.fm1))
    assert len(seen) == 1 << 12


def test_enumerate_matches_recurrence_and_cf():
    # reconstruct each pair from its path and confirm the degree-one property
    for pair in enumerate_fibonacci(9):
        prev, cur = 1, 0b10 | (pair.path & 1)
        for k in range(2, 10):
            a = 0b10 | ((pair.path >> (k - 1)) & 1)
            prev, cur = cur, ((cur << 1) ^ (cur if a == 0b11 else 0)) ^ prev
        assert (cur, prev) == (pair.fm, pair.fm1)
        assert all_quotients_degree_one(continued_fraction(pair.fm1, pair.fm))


def test_discrete_log_examples():
    assert discrete_log_x(Q10, P10) == 70
    assert discrete_log_x(X, P10) == 1
    assert discrete_log_x(1, P10) == 0
    with pytest.raises(ValueError):
        discrete_log_x(0, P10)


def test_discrete_log_m32_published():
    p32 = parse_poly("1 0 0 0 1 0 1 0 1 1 0 1 1 1 1 1 1 1 0 0 0 0 0 1 0 1 0 0 0 1 1 0 1")
    q32 = parse_poly("0 1 0 0 0 0 1 1 1 0 1 1 1 0 1 1 0 1 0 1 0 1 0 1 0 1 1 1 1 1 1 1")
    assert discrete_log_x(q32, p32) == 686019401


def test_algorithm1_m10_contains_published_pair_in_top_class():
    records = algorithm1(10, 32)
    assert records
    assert [r.rank for r in records] == list(range(1, len(records) + 1))
    match = [r for r in records if (r.pair.fm, r.pair.fm1) == (P10, Q10)]
    assert len(match) == 1
    rec = match[0]
    assert rec.sigma == 70
    assert rec.lex_class == records[0].lex_class  # member of the best tie class
    assert rec.tvec[0] <= 3  # dimension-3 filter
    assert rec.delta == 2


def test_algorithm1_records_satisfy_invariants():
    records = algorithm1(10, 32)
    n = (1 << 10) - 1
    for r in records:
        assert modpow(X, r.sigma, r.pair.fm) == r.pair.fm1
        assert 0 < r.sigma < n and int_gcd(r.sigma, n) == 1 and r.sigma >= 32
        assert all_quotients_degree_one(continued_fraction(r.pair.fm1, r.pair.fm))
        assert r.tvec[0] <= 3
        assert len(r.tvec) == 10 - 2  # dimensions 3..10


def test_algorithm1_thread_invariance():
    seq = algorithm1(10, 32, threads=1)
    par = algorithm1(10, 32, threads=3)
    assert seq == par


def test_distinct_moduli_bounded_by_primitive_count():
    for m in (8, 10, 12):
        records = algorithm1(m, 1)  # w = 1 disables the size filter
        moduli = {r.pair.fm for r in records}
        phi = 1
        for prime, mult in factor_integer((1 << m) - 1):
            phi *= (prime - 1) * prime ** (mult - 1)
        assert len(moduli) <= phi // m
        assert len(records) <= 1 << m


def test_select_best_delta_rule():
    def rec(path, tvec, delta):
        return SearchRecord(FibonacciPair(0, 0, path, 4), 0, tvec, delta, 0)

    ranked = [
        rec(0, (3, 4, 5), 6),
        rec(1, (3, 4, 5), 7),
        rec(2, (3, 4, 6), 1),
    ]
    assert select_best(ranked, delta_threshold=3).pair.path == 2
    assert select_best(ranked, delta_threshold=6).pair.path == 0
    assert select_best(ranked[:2], delta_threshold=3).pair.path == 0  # fallback
    with pytest.raises(ValueError):
        select_best([])


def test_census_modes_small_m():
    h = census_t3(12, 32, "steps13")
    hp = census_t3(12, 32, "primitive")
    assert h[2] == 2  # smallest dimension-3 t-value at m = 12 is 2
    assert sum(h.values()) <= sum(hp.values()) <= 1 << 12
    assert set(h) <= set(hp)
    with pytest.raises(ValueError):
        census_t3(12, 32, "everything")


def test_no_t0_s3_small_m():
    assert verify_no_t0_s3(5)
    assert verify_no_t0_s3(6)
    # the four-point m = 2 set is a degenerate exception: both multipliers
    # of the only primitive quadratic give a perfect dimension-3 net
    assert not verify_no_t0_s3(2)
    with pytest.raises(ValueError):
        verify_no_t0_s3(13)


def test_t0_s3_exists_outside_the_family():
    gm = find_t0_s3_matrices(3)
    assert gm is not None
    assert t_value(gm) == 0
