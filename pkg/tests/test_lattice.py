"""Generating matrices, t-values, resolutions, and the counting oracle."""

import numpy as np
import pytest

from tausworthe.gf2poly import (
    all_quotients_degree_one,
    continued_fraction,
    degree,
    is_primitive,
    parse_poly,
)
from tausworthe.lattice import (
    GeneratingMatrices,
    PointSet,
    build_matrices,
    independent,
    invert_bit_matrix,
    is_net_bruteforce,
    korobov_point_set,
    laurent_digits,
    profile,
    resolution,
    smallest_t_bruteforce,
    t_value,
    t_value_naive,
)

P10 = parse_poly("1 0 0 0 0 0 1 1 0 1 1")
Q10 = parse_poly("0 1 0 1 1 1 0 1 0 1")
P13 = parse_poly("1 1 1 0 1 0 0 0 1 0 1 1 1 1")
Q13 = parse_poly("1 0 1 0 1 1 1 1 1 0 0 1 1")


def random_primitive(m, rng):
    while True:
        p = (1 << m) | int(rng.integers(0, 1 << m)) | 1
        if is_primitive(p):
            return p


def test_laurent_digits_example():
    assert laurent_digits(1, 0b111, 6) == [0, 1, 1, 0, 1, 1]
    assert laurent_digits(0, P10, 8) == [0] * 8
    with pytest.raises(ValueError):
        laurent_digits(0b111, 0b111, 4)


def test_first_matrix_invertible():
    rng = np.random.default_rng(3)
    for m in (4, 6, 9, 10):
        p = random_primitive(m, rng)
        q = int(rng.integers(1, 1 << m))
        gm = build_matrices(p, q, 2)
        invert_bit_matrix(gm.matrix(0), m)  # raises if singular


def test_build_matrices_rejects_bad_input():
    with pytest.raises(ValueError, match="primitive"):
        build_matrices(0b11111, 0b10, 2)  # irreducible but not primitive
    with pytest.raises(ValueError, match="nonzero"):
        build_matrices(P10, 0, 2)
    with pytest.raises(ValueError, match="s must be"):
        build_matrices(P10, Q10, 0)


def test_point_reconstruction_matches_matrices():
    # evaluating the matrix on every residue reproduces the point words
    gm = build_matrices(P10, Q10, 3)
    pts = korobov_point_set(P10, Q10, 3, w=10)
    m = 10
    for h in (1, 2, 3, 5, 100, 731, 1023):
        for j in range(3):
            word = 0
            for r in range(m):
                row = gm.row(j, r)
                bit = bin(row & h).count("1") & 1
                word = (word << 1) | bit
            assert word == int(pts.words[h, j])


def test_t_values_published_m10_m13():
    for s, expected in ((2, 0), (3, 3), (4, 3), (5, 4)):
        assert t_value(build_matrices(P10, Q10, s)) == expected
    assert t_value(build_matrices(P13, Q13, 3)) == 2


def test_t0_s2_confirmed_by_direct_counting():
    pts = korobov_point_set(P10, Q10, 2, w=10)
    assert is_net_bruteforce(pts, 0, 10, 2)


def test_is_net_bruteforce_rejects_and_detects():
    pts = korobov_point_set(P10, Q10, 2, w=10)
    with pytest.raises(ValueError):
        is_net_bruteforce(pts, -1, 10, 2)
    corrupted = pts.words.copy()
    corrupted[5, 0] ^= np.uint64(1 << 9)  # move one point to an occupied cell
    bad = PointSet(10, 2, 10, corrupted)
    assert not is_net_bruteforce(bad, 0, 10, 2)


def test_fast_t_value_matches_naive():
    rng = np.random.default_rng(11)
    for _ in range(25):
        m = int(rng.integers(4, 9))
        p = random_primitive(m, rng)
        q = int(rng.integers(1, 1 << m))
        s = int(rng.integers(2, 5))
        gm = build_matrices(p, q, s)
        assert t_value(gm) == t_value_naive(gm)


def test_rank_t_value_matches_counting_oracle():
    rng = np.random.default_rng(23)
    for _ in range(12):
        m = int(rng.integers(5, 10))
        p = random_primitive(m, rng)
        q = int(rng.integers(1, 1 << m))
        for s in (2, 3):
            gm = build_matrices(p, q, s)
            pts = korobov_point_set(p, q, s, w=m)
            assert t_value(gm) == smallest_t_bruteforce(pts, s)


def test_t_monotone_in_dimension():
    rng = np.random.default_rng(5)
    for _ in range(10):
        m = int(rng.integers(5, 11))
        p = random_primitive(m, rng)
        q = int(rng.integers(1, 1 << m))
        prof = profile(p, q, 8)
        ts = [prof.t[s] for s in range(2, 9)]
        assert ts == sorted(ts)
        assert all(0 <= t <= m for t in ts)


def test_theorem_degree_one_iff_t0_s2():
    # both directions over every q for a few primitive moduli
    rng = np.random.default_rng(17)
    for m in (5, 6, 7, 8):
        p = random_primitive(m, rng)
        for q in range(1, 1 << m):
            cf_ok = all_quotients_degree_one(continued_fraction(q, p))
            t2 = t_value(build_matrices(p, q, 2))
            assert cf_ok == (t2 == 0), (m, p, q)


def test_resolution_and_gaps_published_m10():
    prof = profile(P10, Q10, 20)
    assert prof.l[1] == 10  # first coordinate is a bijection
    assert prof.l[2] == 5  # t = 0 at s = 2 forces the cap m // 2
    assert prof.delta == 2
    for s in range(1, 11):
        assert prof.l[s] * s <= 10
        assert prof.gaps[s] >= 0
        if prof.t.get(s) == 0:
            assert prof.l[s] == 10 // s
    assert prof.t_vector(20) == (0, 3, 3, 4, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 7)


def test_resolution_argument_checks():
    gm = build_matrices(P10, Q10, 2)
    with pytest.raises(ValueError):
        resolution(gm, 0)
    with pytest.raises(ValueError):
        resolution(gm, 3)  # more coordinates than built


def test_independent_helper():
    assert independent([0b01, 0b10])
    assert not independent([0b01, 0b10, 0b11])
    assert not independent([0])


def test_custom_matrices_identity_net():
    # s=1 identity matrix: every level passes, t = 0
    m = 4
    gm = GeneratingMatrices.from_row_masks(m, [[1 << r for r in range(m)]])
    assert t_value(gm) == 0
