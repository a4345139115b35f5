"""Running a Tausworthe generator and building its point sets.

Output words pack the expansion digits of state/p most-significant first,
so a w-bit word u represents the fraction u / 2^w.  Three equivalent
generation routes are provided: the state recurrence X <- q*X mod p (the
reference), the raw bit recurrence with decimation by sigma, and the
column-xor word transition (the fast production path).
"""

import warnings
from dataclasses import dataclass
from functools import lru_cache
from math import gcd as int_gcd

import numpy as np

from . import _kernels
from .gf2poly import X, Poly, degree, is_primitive, modpow, mulmod
from .lattice import PointSet, invert_bit_matrix, laurent_digits


@dataclass(frozen=True)
class GeneratorParams:
    """Validated generator description (m, w, p, q, sigma)."""

    m: int
    w: int
    p: Poly
    q: Poly
    sigma: int

    def __post_init__(self):
        if not 2 <= self.m <= 32:
            raise ValueError("m must be in 2..32")
        if not 1 <= self.w <= 64:
            raise ValueError("w must be in 1..64")
        if degree(self.p) != self.m:
            raise ValueError("deg(p) must equal m")
        if not is_primitive(self.p):
            raise ValueError("p must be primitive")
        if self.q == 0 or degree(self.q) >= self.m:
            raise ValueError("q must be nonzero with deg(q) < m")
        n = (1 << self.m) - 1
        if not 0 < self.sigma < n:
            raise ValueError("sigma must satisfy 0 < sigma < 2^m - 1")
        if int_gcd(self.sigma, n) != 1:
            raise ValueError("sigma must be coprime to 2^m - 1")
        if modpow(X, self.sigma, self.p) != self.q:
            raise ValueError("q must equal x^sigma mod p")
        if self.sigma < self.w:
            warnings.warn(
                f"sigma = {self.sigma} is below the word size w = {self.w}; "
                "consecutive outputs share state bits",
                stacklevel=2,
            )

    @property
    def period(self) -> int:
        return (1 << self.m) - 1


def output(state: Poly, p: Poly, w: int) -> int:
    """w-bit output word of a state: the first w digits of state/p."""
    bits = laurent_digits(state, p, w)
    word = 0
    for b in bits:
        word = (word << 1) | b
    return word


def step(state: Poly, q: Poly, p: Poly) -> Poly:
    """Next state q*state mod p."""
    return mulmod(q, state, p)


def transition_columns(params: GeneratorParams) -> list[int]:
    """Column words b_0..b_{m-1} of the output-space state transition.

    The next output word is the xor of the b_j selected by the leading m
    bits of the current word (bit 0 of the selection = most significant).
    b_j is the successor word of the unique state whose leading digits are
    the j-th unit vector.
    """
    m, w, p, q = params.m, params.w, params.p, params.q
    lead = [laurent_digits(1 << c, p, m) for c in range(m)]
    lead_rows = [
        sum(lead[c][r] << c for c in range(m)) for r in range(m)
    ]  # row r over columns c
    inv = invert_bit_matrix(lead_rows, m)
    cols = []
    for j in range(m):
        state = 0
        for c in range(m):
            if (inv[c] >> j) & 1:
                state ^= 1 << c
        cols.append(output(mulmod(q, state, p), p, w))
    return cols


def word_stream(params: GeneratorParams, count: int | None = None, seed: Poly = 1) -> np.ndarray:
    """count output words (default one full period) via the column method."""
    n = params.period if count is None else count
    cols = np.array(transition_columns(params), np.uint64)
    first = np.uint64(output(seed, params.p, params.w))
    return _kernels.word_stream_columns(cols, params.m, params.w, n, first)


def word_stream_reference(params: GeneratorParams, count: int | None = None, seed: Poly = 1) -> np.ndarray:
    """Same stream by stepping the state recurrence (slow oracle)."""
    n = params.period if count is None else count
    out = np.empty(n, np.uint64)
    state = seed
    for i in range(n):
        out[i] = output(state, params.p, params.w)
        state = step(state, params.q, params.p)
    return out


def word_stream_bit_recurrence(params: GeneratorParams, count: int | None = None) -> np.ndarray:
    """Same stream from the raw bit recurrence decimated by sigma.

    Generates one period of the bit sequence seeded with the digits of
    1/p, then gathers w bits starting at i*sigma for each output i.
    """
    m, w, p, sigma = params.m, params.w, params.p, params.sigma
    period = params.period
    n = period if count is None else count
    seed_bits = laurent_digits(1, p, m)
    seed_mask = sum(b << k for k, b in enumerate(seed_bits))
    bits = _kernels.bit_sequence(p, m, period, seed_mask)
    idx = (np.arange(n, dtype=np.int64)[:, None] * sigma + np.arange(w)) % period
    gathered = bits[idx].astype(np.uint64)
    weights = np.uint64(1) << np.arange(w - 1, -1, -1, dtype=np.uint64)
    return gathered @ weights


def point_set_overlapping(params: GeneratorParams, s: int, seed: Poly = 1) -> PointSet:
    """The origin plus all overlapping s-tuples of one full period."""
    if s < 1:
        raise ValueError("s must be >= 1")
    u = word_stream(params, seed=seed)
    n = params.period
    words = np.zeros((n + 1, s), np.uint64)
    for k in range(s):
        words[1:, k] = np.roll(u, -k)
    return PointSet(params.m, s, params.w, words)


def stream_nonoverlapping(params: GeneratorParams, s: int, seed: Poly = 1) -> np.ndarray:
    """2^m s-tuples: the origin, then consecutive s-blocks of the stream.

    Consumes s*(2^m - 1) outputs of the periodic sequence so that every
    phase occurs exactly once; requires gcd(2^m - 1, s) = 1.
    """
    n = params.period
    if int_gcd(n, s) != 1:
        raise ValueError(f"s = {s} shares a factor with the period {n}")
    u = word_stream(params, seed=seed)
    out = np.zeros((n + 1, s), np.uint64)
    idx = (np.arange(n, dtype=np.int64)[:, None] * s + np.arange(s)) % n
    out[1:] = u[idx]
    return out


def digital_shift(points: np.ndarray, shift: np.ndarray) -> np.ndarray:
    """Coordinate-wise xor of word tuples with a fixed shift tuple."""
    points = np.asarray(points, np.uint64)
    shift = np.asarray(shift, np.uint64)
    if points.shape[-1] != shift.shape[-1]:
        raise ValueError("shift arity must match tuple arity")
    return points ^ shift
