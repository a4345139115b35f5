"""Arithmetic with binary polynomials (coefficients in the two-element field).

A polynomial c_0 + c_1 x + ... + c_n x^n is represented as the nonnegative
integer c_0 + c_1 2 + ... + c_n 2^n, so bit k is the coefficient of x^k.
Addition is xor, and the zero polynomial is the integer 0 with degree -1
(the "minus infinity" sentinel).  All functions accept and return plain
ints; nothing here mutates its arguments.

The text form used for I/O lists coefficients ascending in degree,
space-separated, e.g. "1 1 0 1" is 1 + x + x^3.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as int_gcd

X = 0b10  # the polynomial x

Poly = int  # alias used in signatures for readability


def degree(a: Poly) -> int:
    """Degree of a, with degree(0) == -1."""
    return a.bit_length() - 1


def add(a: Poly, b: Poly) -> Poly:
    """Add (equivalently subtract) polynomials a and b."""
    return a ^ b


def mul(a: Poly, b: Poly) -> Poly:
    """Multiply polynomials a and b (carry-less product)."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder of a divided by b, for nonzero b."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = degree(b)
    q = 0
    while True:
        shift = degree(a) - n
        if shift < 0:
            return q, a
        q ^= 1 << shift
        a ^= b << shift


def mod(a: Poly, b: Poly) -> Poly:
    """Remainder of a modulo b, for nonzero b."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = degree(b)
    while True:
        shift = degree(a) - n
        if shift < 0:
            return a
        a ^= b << shift


def mulmod(a: Poly, b: Poly, p: Poly) -> Poly:
    """Product of a and b reduced modulo p, deg(p) >= 1."""
    if degree(p) < 1:
        raise ZeroDivisionError("modulus must have degree >= 1")
    return mod(mul(a, b), p)


def modpow(base: Poly, e: int, p: Poly) -> Poly:
    """base**e modulo p by square-and-multiply, e >= 0."""
    if degree(p) < 1:
        raise ZeroDivisionError("modulus must have degree >= 1")
    if e < 0:
        raise ValueError("negative exponent")
    r = 1 if degree(p) > 0 else 0
    base = mod(base, p)
    while e:
        if e & 1:
            r = mod(mul(r, base), p)
        base = mod(mul(base, base), p)
        e >>= 1
    return r


def gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor of polynomials a and b."""
    while b:
        a, b = b, mod(a, b)
    return a


def inverse_mod(q: Poly, p: Poly) -> Poly:
    """Inverse of q modulo p; requires gcd(q, p) = 1 and q != 0."""
    if q == 0:
        raise ZeroDivisionError("zero is not invertible")
    # extended Euclid on (p, q); s tracks the q-cofactor
    r0, r1 = p, mod(q, p)
    s0, s1 = 0, 1
    while r1:
        qt, r2 = divmod_poly(r0, r1)
        r0, r1 = r1, r2
        s0, s1 = s1, s0 ^ mul(qt, s1)
    if r0 != 1:
        raise ValueError("polynomial is not invertible modulo p")
    return mod(s0, p)


@dataclass(frozen=True)
class CFExpansion:
    """Continued fraction [a0; A_1, ..., A_v] of a rational function."""

    a0: Poly
    quotients: tuple[Poly, ...]

    def __len__(self) -> int:
        return len(self.quotients)


def continued_fraction(q: Poly, p: Poly) -> CFExpansion:
    """Continued fraction expansion of q/p by repeated Euclidean division.

    For a non-coprime pair this expands (q/g)/(p/g) with g = gcd(q, p);
    the Euclidean quotient sequence is the same either way.
    """
    if p == 0:
        raise ZeroDivisionError("zero denominator")
    a0, r = divmod_poly(q, p)
    quotients = []
    u, v = p, r
    while v:
        a, r = divmod_poly(u, v)
        quotients.append(a)
        u, v = v, r
    return CFExpansion(a0, tuple(quotients))


def reconstruct(cf: CFExpansion) -> tuple[Poly, Poly]:
    """Rational function (numerator, denominator) of a continued fraction.

    The result is in lowest terms, so it round-trips continued_fraction
    exactly on coprime input.
    """
    num_prev, num = 1, cf.a0
    den_prev, den = 0, 1
    for a in cf.quotients:
        num_prev, num = num, mul(a, num) ^ num_prev
        den_prev, den = den, mul(a, den) ^ den_prev
    return num, den


def all_quotients_degree_one(cf: CFExpansion) -> bool:
    """True iff the polynomial part is zero and every quotient has degree 1."""
    return cf.a0 == 0 and all(degree(a) == 1 for a in cf.quotients)


def is_irreducible(p: Poly) -> bool:
    """Irreducibility test over the two-element field.

    Checks x^(2^m) == x mod p and gcd(x^(2^(m/r)) - x, p) = 1 for every
    prime divisor r of m = deg(p).
    """
    m = degree(p)
    if m < 1:
        return False
    if m == 1:
        return True
    # x^(2^k) mod p by repeated squaring of x
    t = mod(X, p)
    powers = [t]
    for _ in range(m):
        t = mod(mul(t, t), p)
        powers.append(t)
    if powers[m] != mod(X, p):
        return False
    for r, _ in factor_integer(m):
        if gcd(powers[m // r] ^ X, p) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def is_primitive(p: Poly) -> bool:
    """True iff p is irreducible and x has maximal order 2^deg(p) - 1 mod p."""
    m = degree(p)
    if m < 1 or not is_irreducible(p):
        return False
    n = (1 << m) - 1
    for r, _ in factor_integer(n):
        if modpow(X, n // r, p) == 1:
            return False
    return True


def _is_probable_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 2^64
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # returns a nontrivial factor of composite odd n
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = int_gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factor_integer(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, multiplicity) pairs.

    Trial division up to 2^16, then Pollard rho for any remaining cofactor.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    factors: dict[int, int] = {}
    for d in range(2, 1 << 16):
        if d * d > n:
            break
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
    stack = [n] if n > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if _is_probable_prime(v):
            factors[v] = factors.get(v, 0) + 1
        else:
            f = _pollard_rho(v)
            stack.append(f)
            stack.append(v // f)
    return sorted(factors.items())


def parse_poly(text: str) -> Poly:
    """Parse space-separated 0/1 coefficients listed ascending in degree."""
    bits = text.split()
    if not bits or any(b not in ("0", "1") for b in bits):
        raise ValueError(f"malformed polynomial text: {text!r}")
    value = 0
    for k, b in enumerate(bits):
        if b == "1":
            value |= 1 << k
    return value


def format_poly(a: Poly, width: int | None = None) -> str:
    """Render coefficients ascending in degree; width pads with zeros."""
    n = max(a.bit_length(), 1 if width is None else width)
    return " ".join(str((a >> k) & 1) for k in range(n))


def poly_str(a: Poly) -> str:
    """Human-readable form like 'x^3 + x + 1'."""
    if a == 0:
        return "0"
    terms = []
    for k in range(degree(a), -1, -1):
        if (a >> k) & 1:
            terms.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
    return " + ".join(terms)
