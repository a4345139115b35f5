"""Digital-net view of a Tausworthe generator and its quality measures.

The full-period point set of a generator with modulus p and multiplier q
equals the lattice point set { (h/p) * (1, q, ..., q^(s-1)) } over all
residues h, mapped to [0,1)^s digit-wise.  Coordinate j is a linear map of
the state, so it has an m x m binary digit matrix; all uniformity measures
(t-value, resolution, gaps) are rank conditions on those matrices.

Matrices are stored as int64 row bitmasks (bit c of row r = digit r of
column c).  The rank engine lives in _kernels; this module adds slow naive
reference implementations used to cross-check it.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .gf2poly import Poly, degree, gcd, is_primitive, mod, mul, mulmod


def laurent_digits(g: Poly, p: Poly, n: int) -> list[int]:
    """First n digits a_r of the expansion g/p = sum a_r x^(-r-1).

    Requires deg(g) < deg(p).  Digit r is the x^(m-1) coefficient of
    x^r * g mod p.
    """
    m = degree(p)
    if degree(g) >= m:
        raise ValueError("numerator degree must be below denominator degree")
    digits = []
    e = g
    for _ in range(n):
        bit = (e >> (m - 1)) & 1
        digits.append(bit)
        e <<= 1
        if bit:
            e ^= p
    return digits


@dataclass(frozen=True)
class GeneratingMatrices:
    """Digit matrices of the first s coordinates of a point set."""

    m: int
    s: int
    rows: np.ndarray  # flat int64, entry j*m + r = row r of coordinate j

    def row(self, j: int, r: int) -> int:
        return int(self.rows[j * self.m + r])

    def matrix(self, j: int) -> list[int]:
        """Rows of coordinate j's matrix as int bitmasks."""
        return [int(v) for v in self.rows[j * self.m : (j + 1) * self.m]]

    @classmethod
    def from_row_masks(cls, m: int, mats: list[list[int]]) -> "GeneratingMatrices":
        """Build directly from per-coordinate row masks (for custom nets)."""
        flat = np.zeros(len(mats) * m, np.int64)
        for j, mat in enumerate(mats):
            if len(mat) != m:
                raise ValueError("each matrix needs exactly m rows")
            for r, v in enumerate(mat):
                flat[j * m + r] = v
        return cls(m, len(mats), flat)


def build_matrices(p: Poly, q: Poly, s: int) -> GeneratingMatrices:
    """Generating matrices of the point set of the pair (p, q).

    Column c of coordinate j's matrix holds the first m expansion digits
    of (x^c * q^j mod p)/p.
    """
    m = degree(p)
    if s < 1:
        raise ValueError("dimension s must be >= 1")
    if not is_primitive(p):
        raise ValueError("modulus p must be primitive")
    if q == 0 or degree(q) >= m:
        raise ValueError("multiplier q must be nonzero with deg(q) < deg(p)")
    if gcd(q, p) != 1:
        raise ValueError("q and p must be coprime")
    rows = _kernels.korobov_rows(p, q, m, s)
    return GeneratingMatrices(m, s, rows)


def _rows_from_pair(p: Poly, q: Poly, s: int) -> np.ndarray:
    # unchecked fast path for search loops
    return _kernels.korobov_rows(p, q, degree(p), s)


def independent(masks) -> bool:
    """Linear independence of int bitmask rows over GF(2)."""
    pivots: dict[int, int] = {}
    for v in masks:
        while v:
            low = v & -v
            w = pivots.get(low)
            if w is None:
                pivots[low] = v
                break
            v ^= w
        else:
            return False
    return True


def invert_bit_matrix(rows: list[int], m: int) -> list[int]:
    """Inverse of an m x m bit matrix given as row masks; raises if singular."""
    aug = [(rows[r] << m) | (1 << r) for r in range(m)]
    for col in range(m):
        colbit = 1 << (col + m)
        piv = next((i for i in range(col, m) if aug[i] & colbit), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(m):
            if i != col and aug[i] & colbit:
                aug[i] ^= aug[col]
    mask = (1 << m) - 1
    return [aug[r] & mask for r in range(m)]


def _level_independent_naive(gm: GeneratingMatrices, d: int) -> bool:
    """Per-composition Gaussian elimination, no sharing (reference oracle)."""
    s, m = gm.s, gm.m

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for comp in compositions(d, s):
        if any(dj > m for dj in comp):
            return False
        masks = []
        for j, dj in enumerate(comp):
            masks.extend(gm.rows[j * m : j * m + dj])
        if not independent([int(v) for v in masks]):
            return False
    return True


def t_value_naive(gm: GeneratingMatrices) -> int:
    """t-value by naive descending search (reference oracle, small cases)."""
    d = gm.m
    while d > 0 and not _level_independent_naive(gm, d):
        d -= 1
    return gm.m - d


def t_value(gm: GeneratingMatrices) -> int:
    """t-value of the point set: m minus the largest d for which every
    composition of d selects independent rows."""
    rho = _kernels.rho_chain(gm.rows, gm.s, gm.m)
    return gm.m - int(rho[gm.s - 1])


def resolution(gm: GeneratingMatrices, s: int) -> int:
    """Largest l <= m//s with the first l rows of coordinates 1..s independent."""
    m = gm.m
    if not 1 <= s <= m:
        raise ValueError("resolution needs 1 <= s <= m")
    if s > gm.s:
        raise ValueError("matrices cover fewer coordinates than requested")
    best = 0
    for l in range(1, m // s + 1):
        masks = [gm.row(j, r) for j in range(s) for r in range(l)]
        if not independent(masks):
            break
        best = l
    return best


@dataclass(frozen=True)
class TValueProfile:
    """Per-dimension t-values, resolutions, gaps, and their sum."""

    m: int
    w: int
    t: dict[int, int]  # dimension -> t-value, 2 <= s <= s_max
    l: dict[int, int]  # dimension -> resolution, 1 <= s <= m
    gaps: dict[int, int]  # dimension -> m//s - l_s
    delta: int

    def t_vector(self, s_max: int | None = None) -> tuple[int, ...]:
        top = s_max if s_max is not None else max(self.t)
        return tuple(self.t[s] for s in range(2, top + 1))


def profile(p: Poly, q: Poly, s_max: int = 20, w: int = 32) -> TValueProfile:
    """t-values for dimensions 2..s_max plus the resolution-gap summary."""
    m = degree(p)
    if s_max < 2:
        raise ValueError("s_max must be >= 2")
    gm = build_matrices(p, q, max(s_max, m))
    rho = _kernels.rho_chain(gm.rows, s_max, m)
    t = {s: m - int(rho[s - 1]) for s in range(2, s_max + 1)}
    l = {s: resolution(gm, s) for s in range(1, m + 1)}
    gaps = {s: m // s - l[s] for s in range(1, m + 1)}
    return TValueProfile(m, w, t, l, gaps, sum(gaps.values()))


@dataclass(frozen=True)
class PointSet:
    """2^m points in [0,1)^s with w-bit coordinates stored as integer words."""

    m: int
    s: int
    w: int
    words: np.ndarray  # shape (2^m, s), uint64

    def __post_init__(self):
        if self.words.shape != (1 << self.m, self.s):
            raise ValueError("point count must be exactly 2^m")

    def as_floats(self) -> np.ndarray:
        return self.words.astype(np.float64) / float(1 << self.w)


def is_net_bruteforce(points: PointSet, t: int, m: int, s: int) -> bool:
    """Direct count check that points form a (t, m, s)-net in base 2.

    Splits [0,1)^s into all shapes of elementary intervals of volume
    2^(t-m) and verifies each cell holds exactly 2^t points.  Exponential
    in m - t; intended as a test oracle for small m.
    """
    if t < 0 or t > m:
        raise ValueError("t must satisfy 0 <= t <= m")
    if points.m != m or points.s < s:
        raise ValueError("point set does not match m, s")
    if points.w < m:
        raise ValueError("need at least m digits per coordinate")
    d = m - t
    words = points.words[:, :s]
    w = points.w

    def shapes(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in shapes(total - first, parts - 1):
                yield (first,) + rest

    for shape in shapes(d, s):
        idx = np.zeros(len(words), np.uint64)
        for j, dj in enumerate(shape):
            cells = words[:, j] >> np.uint64(w - dj) if dj else np.zeros_like(idx)
            idx = (idx << np.uint64(dj)) | cells
        counts = np.bincount(idx.astype(np.int64), minlength=1 << d)
        if not np.all(counts == 1 << t):
            return False
    return True


def smallest_t_bruteforce(points: PointSet, s: int) -> int:
    """Smallest t for which is_net_bruteforce accepts (oracle helper)."""
    for t in range(points.m + 1):
        if is_net_bruteforce(points, t, points.m, s):
            return t
    raise AssertionError("every point set is a (m, m, s)-net")


@lru_cache(maxsize=64)
def _coordinate_word_map(p: Poly, w: int) -> list[int]:
    """Words of x^c/p for c = 0..m-1 (basis for first-coordinate words)."""
    m = degree(p)
    out = []
    for c in range(m):
        bits = laurent_digits(mod(1 << c, p), p, w)
        out.append(sum(b << (w - 1 - k) for k, b in enumerate(bits)))
    return out


def korobov_point_set(p: Poly, q: Poly, s: int, w: int = 32) -> PointSet:
    """All 2^m lattice points of the pair (p, q) in h-residue order."""
    m = degree(p)
    gmax = max(s, 1)
    n = 1 << m
    words = np.zeros((n, gmax), np.uint64)
    g = 1
    for j in range(s):
        # coordinate j word for residue h: xor of the words of (x^c q^j)/p
        col = np.zeros(n, np.uint64)
        gj_cols = []
        gc = g
        for c in range(m):
            bits = laurent_digits(gc, p, w)
            gj_cols.append(sum(b << (w - 1 - k) for k, b in enumerate(bits)))
            gc = mod(mul(gc, 0b10), p)
        for h in range(n):
            acc = 0
            hh = h
            c = 0
            while hh:
                if hh & 1:
                    acc ^= gj_cols[c]
                hh >>= 1
                c += 1
            col[h] = acc
        words[:, j] = col
        g = mulmod(g, q, p)
    return PointSet(m, s, w, words)
