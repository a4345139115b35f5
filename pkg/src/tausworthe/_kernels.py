"""Numba-compiled inner loops.

Everything in here works on plain integers / numpy arrays so it can be
jitted: binary polynomials of degree <= 32 are int64 bit-vectors (bit k =
coefficient of x^k), output words are uint64, and a generating-matrix row
is an int64 bitmask over the m state-coordinate columns.

These kernels are private; the public modules wrap them and keep slow
pure-Python reference implementations for cross-checking.
"""

import numpy as np
from numba import njit

# ---------------------------------------------------------------------------
# polynomial helpers (residues of degree < m, modulus of degree m <= 32)


@njit(cache=True, nogil=True)
def _deg(a):
    d = -1
    while a:
        a >>= 1
        d += 1
    return d


@njit(cache=True, nogil=True)
def _mulmod(a, b, p, m):
    # (a*b) mod p with deg(a), deg(b) < m, deg(p) = m
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> m) & 1:
            a ^= p
    return r


@njit(cache=True, nogil=True)
def _modpow(base, e, p, m):
    r = 1
    while e:
        if e & 1:
            r = _mulmod(r, base, p, m)
        base = _mulmod(base, base, p, m)
        e >>= 1
    return r


@njit(cache=True, nogil=True)
def _gcd_poly(a, b):
    while b:
        da = _deg(a)
        db = _deg(b)
        while da >= db:
            a ^= b << (da - db)
            da = _deg(a)
        a, b = b, a
    return a


@njit(cache=True, nogil=True)
def _is_primitive(p, m, m_primes, order_primes):
    # irreducibility: x^(2^m) == x mod p and gcd(x^(2^(m/r)) - x, p) = 1,
    # then maximal order of x via the prime factors of 2^m - 1
    if (p & 1) == 0:
        return False
    t = 2  # x mod p, valid for m >= 2
    sq = np.empty(m + 1, np.int64)
    sq[0] = t
    for k in range(1, m + 1):
        t = _mulmod(t, t, p, m)
        sq[k] = t
    if sq[m] != 2:
        return False
    for i in range(m_primes.shape[0]):
        r = m_primes[i]
        if _gcd_poly(sq[m // r] ^ 2, p) != 1:
            return False
    n = (np.int64(1) << m) - 1
    for i in range(order_primes.shape[0]):
        r = order_primes[i]
        if _modpow(2, n // r, p, m) == 1:
            return False
    return True


@njit(cache=True, nogil=True)
def primitive_filter(polys, m, m_primes, order_primes):
    """Boolean mask of which degree-m polynomials are primitive."""
    out = np.zeros(polys.shape[0], np.bool_)
    for i in range(polys.shape[0]):
        out[i] = _is_primitive(polys[i], m, m_primes, order_primes)
    return out


@njit(cache=True, nogil=True)
def fibonacci_pairs(m):
    """All 2^m pairs F_m, F_{m-1} built from path bits (0 -> x, 1 -> x+1)."""
    n = np.int64(1) << m
    fm = np.empty(n, np.int64)
    fm1 = np.empty(n, np.int64)
    for path in range(n):
        prev = 1  # F_0
        cur = 2 | ((path >> 0) & 1)  # F_1 = A_1
        for k in range(2, m + 1):
            a_low = (path >> (k - 1)) & 1
            nxt = (cur << 1) ^ prev
            if a_low:
                nxt ^= cur
            prev = cur
            cur = nxt
        fm[path] = cur
        fm1[path] = prev
    return fm, fm1


@njit(cache=True, nogil=True)
def discrete_log_x(q, p, m):
    """Baby-step giant-step solution of x^sigma = q mod p; -1 if none."""
    n = (np.int64(1) << m) - 1
    b = np.int64(np.sqrt(n)) + 1
    cap = 1
    while cap < 4 * b:
        cap <<= 1
    mask = cap - 1
    keys = np.zeros(cap, np.int64)
    vals = np.zeros(cap, np.int64)
    g = 1
    for j in range(b):
        h = (g * 0x2545F4914F6CDD1D) & mask
        while keys[h] != 0 and keys[h] != g:
            h = (h + 1) & mask
        if keys[h] == 0:
            keys[h] = g
            vals[h] = j
        g = _mulmod(g, 2, p, m)
    # giant factor x^(-b) = x^(n-b) since x^n = 1
    gf = _modpow(2, n - b, p, m)
    y = q
    i = 0
    while i * b <= n:
        h = (y * 0x2545F4914F6CDD1D) & mask
        while keys[h] != 0:
            if keys[h] == y:
                return (i * b + vals[h]) % n
            h = (h + 1) & mask
        y = _mulmod(y, gf, p, m)
        i += 1
    return np.int64(-1)


@njit(cache=True, nogil=True)
def cf_all_degree_one(q, p, m):
    """True iff the continued fraction of q/p has m quotients, all degree 1."""
    if q == 0:
        return False
    u, v = p, q
    count = 0
    while v:
        du = _deg(u)
        dv = _deg(v)
        if du - dv != 1:
            return False
        # one Euclidean step; quotient has degree du - dv = 1
        r = u
        dr = du
        while dr >= dv:
            r ^= v << (dr - dv)
            dr = _deg(r)
        u, v = v, r
        count += 1
    return u == 1 and count == m


# ---------------------------------------------------------------------------
# generating-matrix rows and the t-value rank engine


@njit(cache=True, nogil=True)
def korobov_rows(p, q, m, s):
    """Rows of the s digit matrices of the lattice with multiplier q.

    Returns a flat int64 array of length s*m; entry j*m + r is row r of the
    matrix for coordinate j+1, as a bitmask over the m columns.  Column c
    of matrix j holds the first m expansion digits of (x^c * q^j mod p)/p.
    """
    rows = np.zeros(s * m, np.int64)
    g = np.int64(1)  # q^j mod p
    for j in range(s):
        gc = g  # x^c * q^j mod p
        for c in range(m):
            e = gc
            for r in range(m):
                if (e >> (m - 1)) & 1:
                    rows[j * m + r] |= np.int64(1) << c
                    e = (e << 1) ^ p
                else:
                    e = e << 1
            if (gc >> (m - 1)) & 1:
                gc = (gc << 1) ^ p
            else:
                gc = gc << 1
        g = _mulmod(g, q, p, m)
    return rows


@njit(cache=True, nogil=True)
def level_independent(rows, s, m, d, skip_last_zero):
    """Check that every composition d_1+...+d_s = d selects independent rows.

    The selection for (d_1, ..., d_s) is the first d_j rows of each
    coordinate j.  With skip_last_zero, compositions whose last part is 0
    are assumed verified (they are compositions for dimension s-1, which
    the caller has already checked at this level).

    Runs a depth-first scan over compositions, adding and removing one row
    at a time from an incremental GF(2) elimination basis, so any dependent
    prefix aborts the whole subtree immediately.

    Pivot rows are indexed by (lowest set bit) % 37: 2 is a primitive root
    mod 37, so the 33 possible low bits of a row mask (m <= 32) occupy
    distinct slots.
    """
    if d == 0:
        return True
    basis = np.zeros(37, np.int64)
    undo = np.empty(d, np.int64)
    ntaken = 0
    t = np.zeros(s, np.int64)  # rows currently taken per coordinate
    rem = np.zeros(s + 1, np.int64)
    rem[0] = d
    j = 0
    descending = True
    while True:
        if j == s - 1:
            need = rem[j]
            added = 0
            failed = False
            for r in range(need):
                v = rows[j * m + r]
                inserted = False
                while v != 0:
                    slot = (v & (-v)) % 37
                    w = basis[slot]
                    if w != 0:
                        v ^= w
                    else:
                        basis[slot] = v
                        undo[ntaken] = slot
                        ntaken += 1
                        added += 1
                        inserted = True
                        break
                if not inserted:
                    failed = True
                    break
            if failed:
                return False
            for _ in range(added):
                ntaken -= 1
                basis[undo[ntaken]] = 0
            j -= 1
            if j < 0:
                return True
            descending = False
        elif descending:
            t[j] = 0
            rem[j + 1] = rem[j]
            j += 1
        else:
            if t[j] < rem[j] and t[j] < m:
                v = rows[j * m + t[j]]
                inserted = False
                while v != 0:
                    slot = (v & (-v)) % 37
                    w = basis[slot]
                    if w != 0:
                        v ^= w
                    else:
                        basis[slot] = v
                        undo[ntaken] = slot
                        ntaken += 1
                        inserted = True
                        break
                if inserted:
                    t[j] += 1
                    rem[j + 1] = rem[j] - t[j]
                    j += 1
                    descending = True
                else:
                    if (not skip_last_zero) or (rem[j] - t[j] - 1 >= 1):
                        return False
                    # prefix only completable with a zero last part: skipped
                    for _ in range(t[j]):
                        ntaken -= 1
                        basis[undo[ntaken]] = 0
                    j -= 1
                    if j < 0:
                        return True
            else:
                for _ in range(t[j]):
                    ntaken -= 1
                    basis[undo[ntaken]] = 0
                j -= 1
                if j < 0:
                    return True


@njit(cache=True, nogil=True)
def rho_chain(rows, s, m):
    """Largest rank-complete levels rho_1 >= rho_2 >= ... >= rho_s.

    rho_k is the largest d such that every composition of d into k parts
    selects independent rows; the t-value in dimension k is m - rho_k.
    Levels descend, so each dimension starts from the previous result and
    only compositions with a nonzero last part need checking.
    """
    rho = np.empty(s, np.int64)
    d = m
    for dim in range(1, s + 1):
        sub = rows[: dim * m]
        while d > 0 and not level_independent(sub, dim, m, d, True):
            d -= 1
        rho[dim - 1] = d
    return rho


@njit(cache=True, nogil=True)
def t_value_dim3(rows, m, start):
    """t-value for dimension 3 given rows for three coordinates."""
    d = start
    while d > 0 and not level_independent(rows, 3, m, d, True):
        d -= 1
    return m - d


# ---------------------------------------------------------------------------
# output streams


@njit(cache=True, nogil=True)
def word_stream_columns(cols, m, w, n, first):
    """n output words from the column-xor state transition.

    cols[j] is the w-bit word that the next state gains when bit j of the
    current state's leading m bits is set (bit 0 = most significant).
    """
    out = np.empty(n, np.uint64)
    x = first
    for i in range(n):
        out[i] = x
        nxt = np.uint64(0)
        for j in range(m):
            if (x >> np.uint64(w - 1 - j)) & np.uint64(1):
                nxt ^= cols[j]
        x = nxt
    return out


@njit(cache=True, nogil=True)
def bit_sequence(p, m, length, seed):
    """length bits of the linear recurrence with characteristic polynomial p.

    seed supplies bits a_0 .. a_{m-1}; tap j (1-based) is the coefficient
    of x^(m-j) in p.
    """
    out = np.zeros(length, np.uint8)
    for k in range(min(m, length)):
        out[k] = (seed >> k) & 1
    for i in range(m, length):
        acc = 0
        for j in range(1, m + 1):
            if (p >> (m - j)) & 1:
                acc ^= out[i - j]
        out[i] = acc
    return out
