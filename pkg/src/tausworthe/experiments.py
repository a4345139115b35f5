"""Gibbs-sampling studies driven by full-period generator output.

Both samplers consume the driving sequence as non-overlapping blocks
starting with the origin tuple, one block per chain iteration, so a run
of 2^m iterations uses every output phase exactly once.  Randomization
replicates apply one digital shift (coordinate-wise xor) per replicate;
estimator quality is judged by the spread of per-replicate estimates
against an IID baseline at the same sample count.
"""

from dataclasses import dataclass

import numpy as np
from scipy import signal, special

from .generator import GeneratorParams, stream_nonoverlapping


def inv_normal_cdf(u):
    """Standard normal quantile; open interval (0,1) only."""
    u = np.asarray(u, dtype=np.float64)
    if np.any(u <= 0.0) or np.any(u >= 1.0):
        raise ValueError("u must lie strictly inside (0, 1)")
    out = special.ndtri(u)
    return float(out) if out.ndim == 0 else out

def inv_gamma_cdf(u, shape, rate=1.0):
    """Gamma quantile by inverting the regularized lower incomplete gamma.

    Solves P(shape, rate * x) = u; shape and rate must be positive.
    """
    u = np.asarray(u, dtype=np.float64)
    if np.any(u <= 0.0) or np.any(u >= 1.0):
        raise ValueError("u must lie strictly inside (0, 1)")
    if shape <= 0 or rate <= 0:
        raise ValueError("shape and rate must be positive")
    out = special.gammaincinv(shape, u) / rate
    if not np.all(np.isfinite(out)):
        raise ArithmeticError("gamma quantile failed to converge")
    return float(out) if out.ndim == 0 else out


class CudSource:
    """Driving sequence from one full generator period under a digital shift.

    Tuples are the origin followed by the 2^m - 1 non-overlapping s-blocks
    of the output stream, each xor-ed with the replicate's shift words.
    """

    def __init__(self, params: GeneratorParams, s: int, shift: np.ndarray):
        self.params = params
        self.s = s
        self.shift = np.asarray(shift, np.uint64)
        if self.shift.shape != (s,):
            raise ValueError("shift must supply one word per coordinate")
        self.n_tuples = 1 << params.m

    def words(self) -> np.ndarray:
        base = _base_tuples(self.params, self.s)
        return base ^ self.shift

    def uniforms(self) -> np.ndarray:
        return _words_to_uniforms(self.words(), self.params.w)


class IidSource:
    """Seeded pseudorandom driving sequence of the same shape."""

    def __init__(self, seed, n_tuples: int, s: int, w: int = 32):
        self.rng = np.random.default_rng(seed)
        self.n_tuples = n_tuples
        self.s = s
        self.w = w

    def uniforms(self) -> np.ndarray:
        u = self.rng.random((self.n_tuples, self.s))
        return np.clip(u, _eps(self.w), 1.0 - _eps(self.w))


_BASE_CACHE: dict[tuple, np.ndarray] = {}


def _base_tuples(params: GeneratorParams, s: int) -> np.ndarray:
    key = (params, s)
    if key not in _BASE_CACHE:
        _BASE_CACHE[key] = stream_nonoverlapping(params, s)
    return _BASE_CACHE[key]


def _eps(w: int) -> float:
    return 0.5 ** (w + 1)


def _words_to_uniforms(words: np.ndarray, w: int) -> np.ndarray:
    u = words.astype(np.float64) / float(1 << w)
    return np.clip(u, _eps(w), 1.0 - _eps(w))


def make_cud_factory(params: GeneratorParams, s: int, replicates: int, seed):
    """Factory of CUD sources with independent per-replicate digital shifts."""
    rng = np.random.default_rng(seed)
    shifts = rng.integers(0, 1 << params.w, size=(replicates, s), dtype=np.uint64)
    return lambda r: CudSource(params, s, shifts[r])


def make_iid_factory(n_tuples: int, s: int, replicates: int, seed, w: int = 32):
    """Factory of IID baseline sources with per-replicate child seeds."""
    children = np.random.SeedSequence(seed).spawn(replicates)
    return lambda r: IidSource(children[r], n_tuples, s, w)


def gibbs_gaussian(source_factory, rho: float, m: int, replicates: int) -> np.ndarray:
    """Two-block Gibbs sampler for a correlated standard Gaussian pair.

    Each iteration draws X1 from its conditional given X2, then X2 given
    the new X1, via normal quantiles of the two block coordinates.  The
    X2 recurrence is linear (X2_i = rho^2 X2_{i-1} + w_i), so the whole
    chain is evaluated as one recursive filter.  Returns one row
    (mean X1, mean X2, mean X1*X2) per replicate.
    """
    if not -1.0 < rho < 1.0:
        raise ValueError("rho must lie in (-1, 1)")
    if replicates < 1:
        raise ValueError("need at least one replicate")
    n = 1 << m
    c = np.sqrt(1.0 - rho * rho)
    estimates = np.empty((replicates, 3))
    for r in range(replicates):
        u = source_factory(r).uniforms()
        if u.shape != (n, 2):
            raise ValueError("source must yield 2^m two-coordinate tuples")
        z = special.ndtri(u)
        drive = rho * c * z[:, 0] + c * z[:, 1]
        x2 = signal.lfilter([1.0], [1.0, -rho * rho], drive)
        x2_prev = np.concatenate(([0.0], x2[:-1]))
        x1 = rho * x2_prev + c * z[:, 0]
        estimates[r] = (x1.mean(), x2.mean(), (x1 * x2).mean())
    return estimates


@dataclass(frozen=True)
class PumpData:
    """Failure counts and observation times of the ten monitored pumps."""

    failures: tuple[int, ...] = (5, 1, 5, 14, 3, 19, 1, 1, 4, 22)
    times: tuple[float, ...] = (
        94.32, 15.72, 62.88, 125.76, 5.24, 31.44, 1.05, 1.05, 2.10, 10.48,
    )

    def __post_init__(self):
        if len(self.failures) != 10 or len(self.times) != 10:
            raise ValueError("exactly ten pumps expected")


@dataclass(frozen=True)
class PumpModelConfig:
    """Hyperparameters and run shape of the hierarchical failure-rate model."""

    m: int
    replicates: int
    alpha: float = 1.802
    gamma: float = 0.1
    delta: float = 1.0

    def __post_init__(self):
        if min(self.alpha, self.gamma, self.delta) <= 0:
            raise ValueError("hyperparameters must be positive")

    @property
    def beta_shape(self) -> float:
        return self.gamma + 10.0 * self.alpha


def gibbs_pump(source_factory, config: PumpModelConfig, data: PumpData = PumpData()) -> np.ndarray:
    """Gibbs sampler for the ten failure rates and their common prior rate.

    State is (lambda_1..lambda_10, beta).  Each iteration consumes an
    11-coordinate block: ten gamma draws lambda_j ~ G(x_j + alpha,
    t_j + beta) followed by beta ~ G(gamma + 10 alpha, delta + sum lambda).
    Starts from the per-pump empirical rates x_j / t_j and the conditional
    mean of beta.  Returns one row of 11 posterior-mean estimates per
    replicate.
    """
    n = 1 << config.m
    x = np.asarray(data.failures, np.float64)
    t = np.asarray(data.times, np.float64)
    lam_shapes = x + config.alpha
    estimates = np.empty((config.replicates, 11))
    for r in range(config.replicates):
        u = source_factory(r).uniforms()
        if u.shape != (n, 11):
            raise ValueError("source must yield 2^m eleven-coordinate tuples")
        # gamma quantiles at rate 1; the state only rescales them
        g_lam = np.empty((n, 10))
        for j in range(10):
            g_lam[:, j] = special.gammaincinv(lam_shapes[j], u[:, j])
        g_beta = special.gammaincinv(config.beta_shape, u[:, 10])
        lam = x / t
        beta = config.beta_shape / (config.delta + lam.sum())
        sums = np.zeros(11)
        for i in range(n):
            lam = g_lam[i] / (t + beta)
            beta = g_beta[i] / (config.delta + lam.sum())
            sums[:10] += lam
            sums[10] += beta
        estimates[r] = sums / n
    return estimates


@dataclass(frozen=True)
class Summary:
    """Cross-replicate mean, standard deviation, and unbiased variance."""

    mean: np.ndarray
    std: np.ndarray
    variance: np.ndarray

    @property
    def log2_std(self) -> np.ndarray:
        return np.log2(self.std)


def summarize(replicate_estimates: np.ndarray) -> Summary:
    """Per-coordinate spread statistics across replicate estimates."""
    est = np.atleast_2d(np.asarray(replicate_estimates, np.float64))
    if est.shape[0] < 2:
        raise ValueError("need at least two replicates to summarize spread")
    return Summary(
        mean=est.mean(axis=0),
        std=est.std(axis=0, ddof=1),
        variance=est.var(axis=0, ddof=1),
    )


def run_gaussian_experiment(
    params: GeneratorParams | None,
    m: int,
    rho: float,
    replicates: int,
    source: str = "cud",
    seed: int = 2024,
) -> np.ndarray:
    """Gaussian study with either driving sequence; returns (R, 3) estimates."""
    if source == "cud":
        if params is None:
            raise ValueError("cud source needs generator parameters")
        factory = make_cud_factory(params, 2, replicates, seed)
    elif source == "iid":
        factory = make_iid_factory(1 << m, 2, replicates, seed)
    else:
        raise ValueError("source must be 'cud' or 'iid'")
    return gibbs_gaussian(factory, rho, m, replicates)


def run_pump_experiment(
    params: GeneratorParams | None,
    config: PumpModelConfig,
    source: str = "cud",
    seed: int = 2024,
    data: PumpData = PumpData(),
) -> np.ndarray:
    """Pump study with either driving sequence; returns (R, 11) estimates."""
    if source == "cud":
        if params is None:
            raise ValueError("cud source needs generator parameters")
        factory = make_cud_factory(params, 11, config.replicates, seed)
    elif source == "iid":
        factory = make_iid_factory(1 << config.m, 11, config.replicates, seed)
    else:
        raise ValueError("source must be 'cud' or 'iid'")
    return gibbs_pump(factory, config, data)
