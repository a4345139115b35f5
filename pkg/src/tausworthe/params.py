"""Bundled reference table of 23 short-period generators (m = 10..32).

Each entry carries the modulus p, multiplier q (coefficients listed
ascending in degree, exactly as distributed), the step size sigma with
q = x^sigma mod p, and the known t-value profile (dimensions 2..20) and
resolution-gap sum used to cross-check any reimplementation.  The "chen"
rows are the corresponding figures for the older equidistribution-
optimized generators; they are reference data only, since those
generators' polynomials are not bundled here.
"""

from dataclasses import dataclass

from .generator import GeneratorParams
from .gf2poly import (
    X,
    all_quotients_degree_one,
    continued_fraction,
    degree,
    format_poly,
    is_primitive,
    modpow,
    parse_poly,
)
from .lattice import profile
from math import gcd as int_gcd

# m: (p ascending, q ascending, sigma)
_TABLE1 = {
    10: ("1 0 0 0 0 0 1 1 0 1 1", "0 1 0 1 1 1 0 1 0 1", 70),
    11: ("1 1 0 0 1 0 0 1 1 0 1 1", "0 1 0 0 0 0 1 1 1 0 1", 179),
    12: ("1 1 1 1 1 0 0 1 0 0 1 1 1", "0 0 1 0 0 1 1 1 1 0 1 1", 146),
    13: ("1 1 1 0 1 0 0 0 1 0 1 1 1 1", "1 0 1 0 1 1 1 1 1 0 0 1 1", 139),
    14: ("1 0 1 0 1 1 0 1 1 1 1 0 1 1 1", "1 0 1 1 1 1 0 1 0 0 1 0 1 1", 5192),
    15: ("1 1 0 1 1 0 0 1 1 1 0 1 0 1 1 1", "0 0 1 1 0 1 1 1 0 0 0 0 0 1 1", 1028),
    16: ("1 1 0 1 0 1 1 1 1 1 0 0 1 0 0 1 1", "1 0 0 1 1 1 0 1 0 0 1 1 0 1 1 1", 12749),
    17: ("1 0 1 1 1 0 0 0 0 1 0 1 1 0 0 0 1 1", "1 1 1 1 0 1 0 1 1 1 0 1 1 1 1 0 1", 20984),
    18: ("1 1 0 1 0 1 1 0 1 0 1 0 0 0 1 1 0 1 1", "1 1 1 0 0 1 1 1 0 0 0 0 0 1 1 1 0 1", 72349),
    19: ("1 0 1 1 0 1 1 1 1 0 0 0 1 1 0 0 1 0 0 1", "0 0 0 0 1 1 1 1 0 0 0 0 1 1 1 0 1 0 1", 92609),
    20: ("1 1 1 0 1 0 1 0 1 1 1 0 0 1 1 1 0 0 1 0 1", "0 1 0 0 0 1 1 1 1 0 0 1 1 1 0 0 1 0 0 1", 226826),
    21: ("1 1 1 1 1 1 0 1 1 1 0 0 1 0 1 0 1 1 1 0 0 1", "0 1 0 1 1 1 0 0 1 1 0 0 1 1 0 1 0 0 1 0 1", 1127911),
    22: ("1 1 0 0 1 0 0 0 1 1 0 0 1 0 1 0 0 0 1 1 0 1 1", "0 0 1 1 0 1 0 0 0 0 1 0 0 1 0 0 1 1 0 1 1 1", 629680),
    23: ("1 1 1 0 0 1 1 0 0 1 0 1 0 1 1 0 0 1 1 1 0 0 0 1", "1 0 1 0 0 1 0 0 1 1 0 0 1 0 1 1 1 1 0 0 0 1 1", 1796311),
    24: ("1 1 1 1 0 0 0 1 1 0 1 0 1 1 0 0 0 1 0 1 1 1 1 0 1", "1 1 0 0 0 0 1 1 1 1 1 1 0 0 1 0 1 0 1 0 1 1 1 1", 7017398),
    25: ("1 1 1 0 1 0 1 1 0 0 1 1 0 1 1 0 0 1 0 1 1 0 1 1 1 1", "0 1 0 1 0 0 1 0 0 0 1 0 1 0 0 1 1 1 0 1 1 0 0 1 1", 2947446),
    26: ("1 1 1 0 1 0 1 1 0 1 0 1 1 0 1 1 1 0 0 0 0 0 1 1 1 1 1", "1 1 0 1 1 1 0 1 0 0 0 0 1 0 1 1 0 1 0 0 0 0 0 0 1 1", 19101221),
    27: ("1 1 0 0 0 1 0 0 1 0 0 0 1 0 1 0 0 0 1 1 0 1 1 1 0 1 0 1", "0 1 0 1 0 0 0 1 1 1 1 1 1 0 1 0 1 0 0 1 0 1 0 1 1 1 1", 4397933),
    28: ("1 0 0 0 1 0 1 1 0 0 0 1 1 0 1 0 1 0 0 1 1 0 0 1 0 1 1 1 1", "0 0 0 1 1 0 1 0 0 1 1 0 0 0 1 1 1 1 0 0 0 1 0 1 0 0 1 1", 167713336),
    29: ("1 0 1 0 0 0 0 0 0 1 0 1 0 1 0 1 1 0 1 1 1 0 0 1 1 0 1 0 1 1", "1 1 1 1 1 0 1 0 0 1 1 1 0 0 0 0 1 0 1 1 1 1 0 1 0 1 1 0 1", 83189117),
    30: ("1 0 0 0 0 1 0 1 1 0 0 0 1 0 1 0 0 1 1 1 1 1 0 0 0 0 0 1 0 0 1", "0 1 0 1 1 1 1 0 1 0 0 0 0 0 0 0 1 1 0 0 0 1 1 1 1 0 1 1 0 1", 315800840),
    31: ("1 0 1 1 1 0 1 1 1 0 0 0 0 1 0 0 0 0 1 1 1 0 1 1 1 1 0 1 1 0 1 1", "0 0 0 0 1 1 1 1 0 1 0 0 0 1 1 0 1 1 1 1 1 1 1 0 0 1 1 0 1 0 1", 36109125),
    32: ("1 0 0 0 1 0 1 0 1 1 0 1 1 1 1 1 1 1 0 0 0 0 0 1 0 1 0 0 0 1 1 0 1", "0 1 0 0 0 0 1 1 1 0 1 1 1 0 1 1 0 1 0 1 0 1 0 1 0 1 1 1 1 1 1 1", 686019401),
}

# m: (t-values for s = 2..20, delta)
_TABLE2_NEW = {
    10: ((0, 3, 3, 4, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 7), 2),
    11: ((0, 3, 3, 5, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7), 1),
    12: ((0, 3, 4, 5, 6, 6, 6, 6, 6, 6, 6, 8, 8, 8, 8, 8, 8, 8, 8), 2),
    13: ((0, 2, 3, 5, 6, 6, 7, 7, 7, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9), 0),
    14: ((0, 3, 4, 5, 7, 7, 7, 7, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9), 1),
    15: ((0, 3, 4, 6, 7, 8, 8, 9, 9, 9, 9, 10, 10, 10, 10, 10, 10, 10, 10), 1),
    16: ((0, 3, 4, 7, 7, 8, 10, 10, 10, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11), 1),
    17: ((0, 3, 4, 7, 7, 7, 8, 10, 10, 10, 10, 11, 11, 11, 11, 11, 12, 12, 12), 1),
    18: ((0, 3, 5, 6, 7, 9, 9, 9, 10, 10, 10, 10, 11, 11, 11, 12, 12, 13, 13), 2),
    19: ((0, 3, 5, 6, 7, 12, 12, 12, 12, 12, 12, 12, 13, 13, 13, 13, 13, 13, 13), 1),
    20: ((0, 3, 5, 7, 7, 10, 10, 11, 11, 12, 12, 13, 13, 13, 13, 13, 13, 13, 13), 2),
    21: ((0, 3, 5, 8, 8, 9, 10, 10, 10, 13, 13, 13, 13, 13, 13, 13, 13, 14, 14), 1),
    22: ((0, 3, 5, 7, 10, 10, 12, 12, 12, 12, 13, 13, 13, 13, 15, 15, 15, 15, 15), 1),
    23: ((0, 3, 5, 9, 9, 11, 12, 13, 13, 13, 13, 13, 13, 13, 15, 15, 15, 15, 15), 1),
    24: ((0, 3, 6, 8, 10, 11, 12, 13, 14, 14, 14, 14, 15, 17, 17, 17, 17, 17, 17), 3),
    25: ((0, 3, 6, 7, 12, 12, 12, 13, 13, 13, 14, 14, 16, 16, 16, 18, 18, 18, 18), 3),
    26: ((0, 3, 6, 8, 12, 12, 12, 13, 13, 13, 14, 14, 15, 15, 15, 16, 16, 16, 18), 2),
    27: ((0, 3, 7, 7, 11, 12, 13, 13, 13, 14, 14, 14, 16, 16, 16, 16, 16, 16, 16), 3),
    28: ((0, 3, 7, 9, 9, 13, 13, 13, 13, 14, 15, 17, 17, 17, 17, 17, 17, 17, 17), 2),
    29: ((0, 3, 6, 9, 11, 13, 14, 14, 14, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20), 1),
    30: ((0, 3, 7, 9, 12, 13, 14, 14, 16, 16, 16, 17, 17, 17, 17, 17, 17, 18, 19), 1),
    31: ((0, 3, 7, 9, 12, 12, 15, 15, 15, 16, 18, 19, 19, 19, 19, 19, 19, 19, 20), 1),
    32: ((0, 3, 7, 10, 13, 14, 14, 15, 15, 17, 17, 17, 18, 18, 20, 20, 20, 20, 20), 4),
}

# reference-only rows for the equidistribution-optimized generators
_TABLE2_CHEN = {
    10: ((2, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7), 0),
    11: ((2, 5, 5, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8), 0),
    12: ((2, 3, 5, 5, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8, 8, 8), 0),
    13: ((1, 5, 5, 5, 6, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9), 0),
    14: ((1, 6, 7, 7, 7, 7, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 10, 10, 10), 0),
    15: ((2, 4, 5, 7, 7, 7, 8, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 10, 10), 0),
    16: ((3, 4, 5, 8, 8, 8, 8, 8, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 12), 0),
    17: ((2, 5, 6, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 11, 11, 11, 11), 0),
    18: ((3, 4, 5, 7, 8, 9, 9, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12), 0),
    19: ((2, 4, 8, 8, 8, 9, 9, 9, 11, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12), 0),
    20: ((3, 4, 8, 8, 8, 13, 13, 13, 13, 13, 13, 13, 13, 14, 14, 14, 14, 14, 14), 0),
    21: ((3, 6, 8, 8, 8, 11, 11, 11, 12, 12, 12, 12, 12, 12, 12, 12, 13, 13, 15), 0),
    22: ((7, 7, 7, 8, 8, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 15), 0),
    23: ((5, 5, 9, 9, 9, 9, 11, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15), 0),
    24: ((5, 5, 8, 8, 11, 11, 11, 12, 14, 14, 14, 14, 14, 14, 14, 15, 15, 16, 16), 0),
    25: ((4, 6, 8, 8, 9, 10, 11, 12, 12, 12, 14, 16, 16, 16, 16, 16, 16, 16, 16), 0),
    26: ((6, 7, 7, 9, 11, 11, 12, 13, 13, 14, 15, 15, 16, 16, 16, 16, 17, 17, 17), 0),
    27: ((3, 6, 8, 11, 12, 12, 14, 14, 14, 15, 15, 15, 15, 15, 16, 16, 16, 17, 17), 0),
    28: ((4, 5, 13, 13, 13, 13, 13, 14, 15, 15, 15, 16, 16, 16, 17, 17, 17, 18, 18), 0),
    29: ((5, 5, 12, 12, 12, 12, 14, 14, 15, 17, 17, 17, 17, 17, 17, 17, 17, 17, 18), 0),
    30: ((2, 7, 7, 10, 13, 13, 13, 14, 17, 17, 17, 17, 17, 17, 18, 18, 18, 18, 19), 0),
    31: ((2, 5, 9, 10, 13, 13, 15, 15, 15, 15, 17, 18, 18, 18, 18, 18, 19, 19, 19), 0),
    32: ((5, 5, 9, 9, 13, 13, 15, 15, 15, 15, 16, 16, 17, 18, 18, 18, 19, 19, 20), 0),
}


@dataclass(frozen=True)
class PublishedEntry:
    """One reference generator with its expected quality figures."""

    params: GeneratorParams
    expected_t: dict[int, int]  # dimension (2..20) -> t-value
    expected_delta: int
    chen_t: dict[int, int]  # reference-only comparison row
    chen_delta: int


def table(w: int = 32) -> list[PublishedEntry]:
    """The 23 bundled parameter sets, ascending in m."""
    entries = []
    for m in sorted(_TABLE1):
        ps, qs, sigma = _TABLE1[m]
        params = GeneratorParams(
            m=m, w=w, p=parse_poly(ps), q=parse_poly(qs), sigma=sigma
        )
        t_new, d_new = _TABLE2_NEW[m]
        t_chen, d_chen = _TABLE2_CHEN[m]
        entries.append(
            PublishedEntry(
                params=params,
                expected_t={s: t for s, t in zip(range(2, 21), t_new)},
                expected_delta=d_new,
                chen_t={s: t for s, t in zip(range(2, 21), t_chen)},
                chen_delta=d_chen,
            )
        )
    return entries


def entry_for(m: int, w: int = 32) -> PublishedEntry:
    """The bundled entry of a given degree m in 10..32."""
    for e in table(w):
        if e.params.m == m:
            return e
    raise KeyError(f"no bundled entry for m={m}")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: object
    actual: object


@dataclass(frozen=True)
class VerificationReport:
    m: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def verify(entry: PublishedEntry, recompute_t: bool = True) -> VerificationReport:
    """Re-derive every property an entry claims and report each check.

    With recompute_t, the full t-value profile and gap sum are recomputed
    (slow for large m); the structural checks alone take milliseconds.
    """
    p, q, sigma, m = entry.params.p, entry.params.q, entry.params.sigma, entry.params.m
    n = (1 << m) - 1
    checks = [
        CheckResult("deg_p", degree(p) == m, m, degree(p)),
        CheckResult("deg_q", degree(q) < m, f"< {m}", degree(q)),
        CheckResult("p_primitive", is_primitive(p), True, is_primitive(p)),
        CheckResult("sigma_range", 0 < sigma < n, f"0 < sigma < {n}", sigma),
        CheckResult(
            "sigma_consistent", modpow(X, sigma, p) == q, format_poly(q, m), format_poly(modpow(X, sigma, p), m)
        ),
        CheckResult("sigma_coprime", int_gcd(sigma, n) == 1, 1, int_gcd(sigma, n)),
        CheckResult("sigma_wordsize", sigma >= 32, ">= 32", sigma),
    ]
    cf = continued_fraction(q, p)
    checks.append(CheckResult("cf_length", len(cf) == m, m, len(cf)))
    checks.append(
        CheckResult(
            "cf_degree_one", all_quotients_degree_one(cf), True, all_quotients_degree_one(cf)
        )
    )
    if recompute_t:
        prof = profile(p, q, 20)
        for s in range(2, 21):
            checks.append(
                CheckResult(f"t_s{s}", prof.t[s] == entry.expected_t[s], entry.expected_t[s], prof.t[s])
            )
        checks.append(
            CheckResult("delta", prof.delta == entry.expected_delta, entry.expected_delta, prof.delta)
        )
    return VerificationReport(m, tuple(checks))


def write_params_file(path, params: GeneratorParams) -> None:
    """Plain-text parameter file: 'm w sigma', then p, then q coefficients."""
    with open(path, "w") as f:
        f.write(f"{params.m} {params.w} {params.sigma}\n")
        f.write(format_poly(params.p, params.m + 1) + "\n")
        f.write(format_poly(params.q, params.m) + "\n")


def read_params_file(path) -> GeneratorParams:
    """Parse the three-line parameter file format."""
    with open(path) as f:
        lines = [ln.strip() for ln in f if ln.strip() and not ln.startswith("#")]
    if len(lines) != 3:
        raise ValueError("parameter file needs exactly three data lines")
    m_str, w_str, sigma_str = lines[0].split()
    return GeneratorParams(
        m=int(m_str),
        w=int(w_str),
        p=parse_poly(lines[1]),
        q=parse_poly(lines[2]),
        sigma=int(sigma_str),
    )
