"""Energy model over complex visible units and binary hidden units.

Visible units z in C^I couple to hidden units h in {0,1}^J through complex
weights; each visible dimension additionally carries a variance gamma and a
pseudo-variance delta that couple its real and imaginary parts.  The energy in
precision form (p = gamma/d, q = -delta/d, d = gamma^2 - |delta|^2) is

    E(z, h) = sum_i [ p|z|^2 + Re(q conj(z)^2) - 2 p Re(conj(z) a)
                      - 2 Re(q conj(z) conj(a)) ]  -  2 c.h,
    a = b + W h,

which makes p(z|h) a diagonal complex normal CN(b + Wh, gamma, delta) and
p(h|z) a product of Bernoullis.

Gradient convention: every stored gradient is the conjugate Wirtinger
derivative -dE/d(theta-bar), the ascent direction for a real objective.  Real
parameters (c, r) use the same embedding, i.e. they hold HALF the plain real
derivative; the factor 2 inside the complex-ascent steppers restores a full
gradient step.  Finite differences in the test-suite arbitrate every formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import expit

from .cnormal import ComplexNormalParams, SeededRng, precision_pair
from .optim import (CAdamConfig, CAdamState, CsaConfig, cadam_step, csa_step)
from .training import EpochRecord, TrainingDivergedError, run_epochs

__all__ = [
    "CrbmParams",
    "PrecisionPair",
    "CrbmGradient",
    "TrainConfig",
    "precision_from_variance",
    "energy",
    "energy_symmetric",
    "cond_hidden",
    "cond_visible",
    "neg_energy_gradients",
    "stacked_gradients",
    "cd_gradient",
    "exact_log_likelihood",
    "exact_likelihood_gradient",
    "reconstruction_mse",
    "gibbs_sample",
    "init_params",
    "train",
]

# Keep |delta| strictly inside the positive-definite cone: project back to
# magnitude (1 - DELTA_PROJECT) * gamma whenever an update crosses
# (1 - DELTA_MARGIN) * gamma.
DELTA_MARGIN = 1e-6
DELTA_PROJECT = 1e-3
GAMMA_FLOOR = 1e-4
MAX_ENUM_HIDDEN = 12


@dataclass(frozen=True)
class PrecisionPair:
    """Precision-side mirror (p, q) of a variance pair (gamma, delta)."""

    p: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=np.float64)
        q = np.asarray(self.q, dtype=np.complex128)
        if p.shape != q.shape:
            raise ValueError(f"shape mismatch: p {p.shape}, q {q.shape}")
        if np.any(p <= 0) or np.any(p**2 - np.abs(q) ** 2 <= 0):
            raise ValueError("precision pair violates p > 0, p^2 - |q|^2 > 0")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def to_variance(self) -> tuple[np.ndarray, np.ndarray]:
        """Inverse mapping; precision_from_variance(*pair.to_variance()) == pair."""
        d = self.p**2 - np.abs(self.q) ** 2
        return self.p / d, -self.q / d


def precision_from_variance(gamma: np.ndarray, delta: np.ndarray) -> PrecisionPair:
    """p = gamma / (gamma^2 - |delta|^2), q = -delta / (gamma^2 - |delta|^2)."""
    gamma = np.asarray(gamma, dtype=np.float64)
    delta = np.asarray(delta, dtype=np.complex128)
    if gamma.shape != delta.shape:
        raise ValueError(f"shape mismatch: gamma {gamma.shape}, delta {delta.shape}")
    if np.any(gamma**2 - np.abs(delta) ** 2 <= 0):
        raise ValueError("require gamma^2 > |delta|^2")
    p, q = precision_pair(gamma, delta)
    return PrecisionPair(p=p, q=q)


@dataclass(frozen=True)
class CrbmParams:
    """Model parameters {b, c, W, r, s} with gamma = e^r and delta = e^s.

    The log parameterization keeps gamma positive and delta nonzero; delta -> 0
    is approximated by very negative Re(s).
    """

    b: np.ndarray
    c: np.ndarray
    W: np.ndarray
    r: np.ndarray
    s: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.b, dtype=np.complex128)
        c = np.asarray(self.c, dtype=np.float64)
        W = np.asarray(self.W, dtype=np.complex128)
        r = np.asarray(self.r, dtype=np.float64)
        s = np.asarray(self.s, dtype=np.complex128)
        I, J = b.shape[0], c.shape[0]
        if W.shape != (I, J) or r.shape != (I,) or s.shape != (I,):
            raise ValueError(f"inconsistent parameter shapes for I={I}, J={J}")
        for name, arr in (("b", b), ("c", c), ("W", W), ("r", r), ("s", s)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"non-finite values in parameter '{name}'")
        gamma = np.exp(r)
        if np.any(gamma**2 - np.abs(np.exp(s)) ** 2 <= 0):
            raise ValueError("|delta| must stay below gamma (positive-definite variance)")
        for name, arr in (("b", b), ("c", c), ("W", W), ("r", r), ("s", s)):
            object.__setattr__(self, name, arr)

    @property
    def n_visible(self) -> int:
        return self.b.shape[0]

    @property
    def n_hidden(self) -> int:
        return self.c.shape[0]

    @property
    def gamma(self) -> np.ndarray:
        return np.exp(self.r)

    @property
    def delta(self) -> np.ndarray:
        return np.exp(self.s)

    def precision(self) -> PrecisionPair:
        return precision_from_variance(self.gamma, self.delta)

    @classmethod
    def from_gamma_delta(cls, b, c, W, gamma, delta) -> "CrbmParams":
        """Build from variance-side values; delta == 0 is floored to
        |delta| = 1e-12 * gamma (indistinguishable at test tolerances)."""
        gamma = np.asarray(gamma, dtype=np.float64)
        delta = np.asarray(delta, dtype=np.complex128)
        floor = 1e-12 * gamma
        small = np.abs(delta) < floor
        delta = np.where(small, floor.astype(np.complex128), delta)
        return cls(b=b, c=c, W=W, r=np.log(gamma), s=np.log(delta))


@dataclass(frozen=True)
class CrbmGradient:
    """Ascent directions, one array per parameter (see module docstring for
    the conjugate-Wirtinger / half-derivative convention)."""

    b: np.ndarray
    c: np.ndarray
    W: np.ndarray
    r: np.ndarray
    s: np.ndarray

    def scaled(self, factor: float) -> "CrbmGradient":
        return CrbmGradient(b=self.b * factor, c=self.c * factor, W=self.W * factor,
                            r=self.r * factor, s=self.s * factor)

    def max_abs(self) -> float:
        return max(float(np.max(np.abs(getattr(self, n)), initial=0.0))
                   for n in ("b", "c", "W", "r", "s"))


@dataclass(frozen=True)
class TrainConfig:
    """Mini-batch contrastive-divergence settings."""

    epochs: int = 200
    batch_size: int = 100
    cd_steps: int = 1
    optimizer: str = "cadam"
    alpha: complex | None = None
    momentum: float = 0.0
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8
    use_sqrt: bool = False
    seed: int = 0
    log_interval: int = 10

    def __post_init__(self):
        if self.epochs < 1 or self.batch_size < 1 or self.cd_steps < 1:
            raise ValueError("epochs, batch_size and cd_steps must be >= 1")
        if self.optimizer not in ("csa", "cadam"):
            raise ValueError(f"unknown optimizer '{self.optimizer}' (expected csa or cadam)")

    @property
    def learning_rate(self) -> complex:
        if self.alpha is not None:
            return self.alpha
        return 0.01 if self.optimizer == "csa" else 0.001


def _as_batch(x: np.ndarray) -> tuple[np.ndarray, bool]:
    x = np.asarray(x)
    if x.ndim == 1:
        return x[None, :], True
    return x, False


def _check_dims(z: np.ndarray, params: CrbmParams):
    if z.shape[-1] != params.n_visible:
        raise ValueError(f"dimension mismatch: z has {z.shape[-1]}, model expects {params.n_visible}")


def energy(z: np.ndarray, h: np.ndarray, params: CrbmParams) -> float | np.ndarray:
    """Real-valued energy E(z, h); accepts single vectors or batches."""
    z, single = _as_batch(np.asarray(z, dtype=np.complex128))
    h, _ = _as_batch(np.asarray(h, dtype=np.float64))
    _check_dims(z, params)
    if h.shape[-1] != params.n_hidden:
        raise ValueError(f"dimension mismatch: h has {h.shape[-1]}, model expects {params.n_hidden}")
    pq = params.precision()
    p, q = pq.p, pq.q
    a = params.b + h @ params.W.T
    zc = np.conj(z)
    quad = p * np.abs(z) ** 2 + (q * zc**2).real
    lin = -2.0 * p * (zc * a).real - 2.0 * (q * zc * np.conj(a)).real
    e = (quad + lin).sum(axis=-1) - 2.0 * h @ params.c
    return float(e[0]) if single else e


def energy_symmetric(z: np.ndarray, h: np.ndarray, params: CrbmParams) -> float | np.ndarray:
    """Energy written in the (z, conj z)-symmetric unbiased form

        E = 1/2 z^H diag(p) z + 1/2 zc^H diag(p) zc
            + 1/2 z^H diag(q) zc + 1/2 zc^H diag(conj q) z
            - z^H b' - zc^H conj(b') - 2 c.h - z^H W' h - zc^H conj(W') h

    with b' = p b + q conj(b), W' = diag(p) W + diag(q) conj(W).  Numerically
    identical to energy(); kept as an independent cross-check of the algebra.
    """
    z, single = _as_batch(np.asarray(z, dtype=np.complex128))
    h, _ = _as_batch(np.asarray(h, dtype=np.float64))
    _check_dims(z, params)
    pq = params.precision()
    p, q = pq.p, pq.q
    b1 = p * params.b + q * np.conj(params.b)
    W1 = p[:, None] * params.W + q[:, None] * np.conj(params.W)
    zc = np.conj(z)
    quad = 0.5 * (zc * p * z + z * p * zc + zc * q * zc + z * np.conj(q) * z)
    lin = -(zc * b1 + z * np.conj(b1)) - (zc * (h @ W1.T) + z * (h @ np.conj(W1).T))
    e = (quad + lin).real.sum(axis=-1) - 2.0 * h @ params.c
    return float(e[0]) if single else e


def cond_hidden(z: np.ndarray, params: CrbmParams) -> np.ndarray:
    """Bernoulli success probabilities sigmoid(2c + 2 Re(W'^H z))."""
    z, single = _as_batch(np.asarray(z, dtype=np.complex128))
    _check_dims(z, params)
    pq = params.precision()
    W1 = pq.p[:, None] * params.W + pq.q[:, None] * np.conj(params.W)
    act = 2.0 * params.c + 2.0 * (z @ np.conj(W1)).real
    probs = expit(act)
    return probs[0] if single else probs


def cond_visible(h: np.ndarray, params: CrbmParams) -> ComplexNormalParams:
    """p(z|h) = CN(b + W h, gamma, delta)."""
    h = np.asarray(h, dtype=np.float64)
    if h.shape != (params.n_hidden,):
        raise ValueError(f"dimension mismatch: h has shape {h.shape}, expected ({params.n_hidden},)")
    return ComplexNormalParams(mu=params.b + params.W @ h, gamma=params.gamma, delta=params.delta)


def _sample_visible(mu: np.ndarray, gamma: np.ndarray, delta: np.ndarray,
                    rng: SeededRng) -> np.ndarray:
    """Batch sampler for CN(mu_row, gamma, delta); mu has shape (B, I)."""
    vx = (gamma + delta.real) / 2.0
    vy = (gamma - delta.real) / 2.0
    cxy = delta.imag / 2.0
    n1 = rng.standard_normal(mu.shape)
    n2 = rng.standard_normal(mu.shape)
    x = np.sqrt(vx) * n1
    y = (cxy / np.sqrt(vx)) * n1 + np.sqrt(np.maximum(vy - cxy**2 / vx, 0.0)) * n2
    return mu + x + 1j * y


def stacked_gradients(z: np.ndarray, h: np.ndarray, params: CrbmParams) -> CrbmGradient:
    """Per-sample ascent directions; every field carries a leading batch axis."""
    z = np.asarray(z, dtype=np.complex128)
    h = np.asarray(h, dtype=np.float64)
    pq = params.precision()
    p, q = pq.p, pq.q
    gamma, delta = params.gamma, params.delta
    a_bar = np.conj(params.b + h @ params.W.T)
    zc = np.conj(z)

    g_b = p * z + q * zc
    g_W = g_b[:, :, None] * h[:, None, :]
    de_dp = 0.5 * np.abs(z) ** 2 - (z * a_bar).real
    de_dq = 0.5 * zc**2 - zc * a_bar
    neg_dgamma = (p**2 + np.abs(q) ** 2) * de_dp + 2.0 * (p * q * de_dq).real
    neg_ddelta = p**2 * de_dq + np.conj(q) ** 2 * np.conj(de_dq) + 2.0 * p * np.conj(q) * de_dp
    return CrbmGradient(b=g_b, c=h, W=g_W, r=gamma * neg_dgamma,
                        s=np.conj(delta * neg_ddelta))


def neg_energy_gradients(z: np.ndarray, h: np.ndarray, params: CrbmParams) -> CrbmGradient:
    """Ascent direction -dE/d(theta-bar) for a single (z, h) configuration."""
    z = np.asarray(z, dtype=np.complex128)
    h = np.asarray(h, dtype=np.float64)
    _check_dims(z[None, :], params)
    if h.shape != (params.n_hidden,):
        raise ValueError(f"dimension mismatch: h has shape {h.shape}, expected ({params.n_hidden},)")
    g = stacked_gradients(z[None, :], h[None, :], params)
    return CrbmGradient(b=g.b[0], c=g.c[0], W=g.W[0], r=g.r[0], s=g.s[0])


def _mean_gradient(stack: CrbmGradient) -> CrbmGradient:
    return CrbmGradient(**{n: getattr(stack, n).mean(axis=0) for n in ("b", "c", "W", "r", "s")})


def _stack_sub(a: CrbmGradient, b: CrbmGradient) -> CrbmGradient:
    return CrbmGradient(**{n: getattr(a, n) - getattr(b, n) for n in ("b", "c", "W", "r", "s")})


def cd_gradient(batch: np.ndarray, params: CrbmParams, rng: SeededRng,
                cd_steps: int = 1, return_per_chain: bool = False):
    """Contrastive-divergence likelihood-gradient estimate over a batch.

    Data side uses hidden expectations; the chain samples h and z alternately
    for cd_steps rounds starting at the data; the model side again uses hidden
    expectations at the final chain state.  Returns the batch-mean gradient,
    plus the per-chain (data - model) stacks when return_per_chain is set.
    """
    z0 = np.atleast_2d(np.asarray(batch, dtype=np.complex128))
    if z0.shape[0] == 0:
        raise ValueError("empty batch")
    _check_dims(z0, params)
    if cd_steps < 1:
        raise ValueError("cd_steps must be >= 1")
    gamma, delta = params.gamma, params.delta

    data = stacked_gradients(z0, cond_hidden(z0, params), params)
    z = z0
    for _ in range(cd_steps):
        probs = cond_hidden(z, params)
        h = (rng.uniform(probs.shape) < probs).astype(np.float64)
        z = _sample_visible(params.b + h @ params.W.T, gamma, delta, rng)
    model = stacked_gradients(z, cond_hidden(z, params), params)

    per_chain = _stack_sub(data, model)
    grad = _mean_gradient(per_chain)
    if return_per_chain:
        return grad, per_chain
    return grad


def _enumerate_hidden(n_hidden: int) -> np.ndarray:
    if n_hidden > MAX_ENUM_HIDDEN:
        raise ValueError(f"hidden enumeration limited to J <= {MAX_ENUM_HIDDEN}, got {n_hidden}")
    if n_hidden == 0:
        return np.zeros((1, 0))
    return np.array(list(itertools.product((0.0, 1.0), repeat=n_hidden)))


def _log_state_integrals(params: CrbmParams) -> tuple[np.ndarray, np.ndarray]:
    """log integral_z e^{-E(z, h)} dz for every hidden configuration h.

    Completing the square, each configuration contributes the Gaussian mass
    around mu_h = b + W h:

        log I_h = sum_i [ p|mu_h|^2 + Re(q conj(mu_h)^2) ] + 2 c.h
                  + I log pi + 1/2 sum_i log(gamma^2 - |delta|^2).
    """
    hs = _enumerate_hidden(params.n_hidden)
    pq = params.precision()
    mu = params.b + hs @ params.W.T
    gauss = (pq.p * np.abs(mu) ** 2 + (pq.q * np.conj(mu) ** 2).real).sum(axis=-1)
    const = params.n_visible * np.log(np.pi) \
        + 0.5 * np.log(params.gamma**2 - np.abs(params.delta) ** 2).sum()
    return hs, gauss + 2.0 * hs @ params.c + const


def _logsumexp(vals: np.ndarray) -> float:
    m = float(np.max(vals))
    return m + float(np.log(np.exp(vals - m).sum()))


def exact_log_likelihood(z: np.ndarray, params: CrbmParams, energy_offset: float = 0.0) -> float:
    """Exact log p(z) for small models (J <= 12), via closed-form Gaussian
    integrals per hidden configuration.

    energy_offset adds a constant to every state's energy; it must cancel
    between the free-energy and the log-partition terms.
    """
    z = np.asarray(z, dtype=np.complex128)
    _check_dims(z[None, :], params)
    pq = params.precision()
    W1 = pq.p[:, None] * params.W + pq.q[:, None] * np.conj(params.W)
    act = 2.0 * params.c + 2.0 * (z @ np.conj(W1)).real
    e0 = energy(z, np.zeros(params.n_hidden), params) + energy_offset
    free_energy = -e0 + np.logaddexp(0.0, act).sum()
    _, log_ints = _log_state_integrals(params)
    return free_energy - _logsumexp(log_ints - energy_offset)


def exact_likelihood_gradient(dataset: np.ndarray, params: CrbmParams) -> CrbmGradient:
    """Exact dL/d(theta-bar) for small models: enumerated hidden states plus
    closed-form CN moments replace the sampled model term of CD."""
    z = np.atleast_2d(np.asarray(dataset, dtype=np.complex128))
    _check_dims(z, params)
    data = _mean_gradient(stacked_gradients(z, cond_hidden(z, params), params))

    hs, log_ints = _log_state_integrals(params)
    log_pi_h = log_ints - _logsumexp(log_ints)
    w = np.exp(log_pi_h)
    pq = params.precision()
    p, q = pq.p, pq.q
    gamma, delta = params.gamma, params.delta
    mu = params.b + hs @ params.W.T

    g_b = p * mu + q * np.conj(mu)
    e_dp = 0.5 * (gamma - np.abs(mu) ** 2)
    e_dq = 0.5 * (np.conj(delta) - np.conj(mu) ** 2)
    neg_dgamma = (p**2 + np.abs(q) ** 2) * e_dp + 2.0 * (p * q * e_dq).real
    neg_ddelta = p**2 * e_dq + np.conj(q) ** 2 * np.conj(e_dq) + 2.0 * p * np.conj(q) * e_dp
    model = CrbmGradient(
        b=w @ g_b,
        c=w @ hs,
        W=(w[:, None] * g_b).T @ hs,
        r=gamma * (w @ neg_dgamma),
        s=np.conj(delta * (w @ neg_ddelta)),
    )
    return _stack_sub(data, model)


def reconstruction_mse(z: np.ndarray, params: CrbmParams) -> float:
    """Mean squared error of the one-step mean reconstruction b + W E[h|z],
    averaged over samples and visible dimensions."""
    z = np.atleast_2d(np.asarray(z, dtype=np.complex128))
    zhat = params.b + cond_hidden(z, params) @ params.W.T
    return float(np.mean(np.abs(z - zhat) ** 2))


def gibbs_sample(params: CrbmParams, n_samples: int, burn_in: int, rng: SeededRng) -> np.ndarray:
    """Draw n_samples visible vectors from the model with parallel chains.

    Chains start at the h = 0 conditional CN(b, gamma, delta) and alternate
    h|z, z|h for burn_in rounds.
    """
    gamma, delta = params.gamma, params.delta
    mu0 = np.broadcast_to(params.b, (n_samples, params.n_visible)).copy()
    z = _sample_visible(mu0, gamma, delta, rng)
    for _ in range(burn_in):
        probs = cond_hidden(z, params)
        h = (rng.uniform(probs.shape) < probs).astype(np.float64)
        z = _sample_visible(params.b + h @ params.W.T, gamma, delta, rng)
    return z


def init_params(dataset: np.ndarray, n_hidden: int, rng: SeededRng) -> CrbmParams:
    """Standard initialization: small complex weights, data-mean visible bias,
    unit variance (r = 0) and a near-circular pseudo-variance (Re s = -6)."""
    z = np.atleast_2d(np.asarray(dataset, dtype=np.complex128))
    n_visible = z.shape[1]
    w = 0.01 * (rng.standard_normal((n_visible, n_hidden))
                + 1j * rng.standard_normal((n_visible, n_hidden)))
    return CrbmParams(
        b=z.mean(axis=0),
        c=np.zeros(n_hidden),
        W=w,
        r=np.zeros(n_visible),
        s=np.full(n_visible, -6.0, dtype=np.complex128),
    )


def _project_raw(r: np.ndarray, s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Pull (r, s) back into the valid region after an optimizer step:
    gamma floored at GAMMA_FLOOR and |delta| capped below gamma (phase kept)."""
    r = np.maximum(r, np.log(GAMMA_FLOOR))
    gamma = np.exp(r)
    s = np.array(s, dtype=np.complex128)
    too_big = np.exp(s.real) >= (1.0 - DELTA_MARGIN) * gamma
    if np.any(too_big):
        s.real = np.where(too_big, np.log((1.0 - DELTA_PROJECT) * gamma), s.real)
    return r, s


def project_constraints(params: CrbmParams) -> CrbmParams:
    r, s = _project_raw(params.r, params.s)
    if np.array_equal(r, params.r) and np.array_equal(s, params.s):
        return params
    return replace(params, r=r, s=s)


def train(dataset: np.ndarray, config: TrainConfig,
          params: CrbmParams) -> tuple[CrbmParams, list[EpochRecord]]:
    """Mini-batch CD training with the selected complex optimizer.

    Returns the final parameters and one reconstruction-MSE record per epoch.
    Raises TrainingDivergedError as soon as any parameter goes non-finite.
    """
    z = np.atleast_2d(np.asarray(dataset, dtype=np.complex128))
    if z.shape[0] == 0:
        raise ValueError("empty dataset")
    _check_dims(z, params)
    shuffle_rng = SeededRng(config.seed, stream=0)
    chain_rng = SeededRng(config.seed, stream=1)

    names = ("b", "c", "W", "r", "s")
    state = {"params": params}
    null_update = complex(config.learning_rate) == 0
    if not null_update and config.optimizer == "csa":
        opt_cfg = CsaConfig(alpha=config.learning_rate, momentum=config.momentum)
        velocity = {n: np.zeros_like(getattr(params, n)) for n in names}
    elif not null_update:
        opt_cfg = CAdamConfig(alpha=config.learning_rate, beta1=config.beta1,
                              beta2=config.beta2, epsilon=config.epsilon,
                              use_sqrt=config.use_sqrt)
        adam = {n: CAdamState.zeros_like(getattr(params, n)) for n in names}

    def batch_update(epoch, idx):
        if null_update:
            return
        cur = state["params"]
        grad = cd_gradient(z[idx], cur, chain_rng, cd_steps=config.cd_steps)
        new_vals = {}
        for n in names:
            if config.optimizer == "csa":
                new_vals[n], velocity[n] = csa_step(getattr(cur, n), getattr(grad, n),
                                                    opt_cfg, velocity[n])
            else:
                new_vals[n], adam[n] = cadam_step(getattr(cur, n), getattr(grad, n),
                                                  opt_cfg, adam[n])
            if not np.all(np.isfinite(new_vals[n])):
                raise TrainingDivergedError(n, epoch)
        new_vals["r"], new_vals["s"] = _project_raw(new_vals["r"], new_vals["s"])
        state["params"] = CrbmParams(**{n: new_vals[n] for n in names})

    def epoch_metric():
        return reconstruction_mse(z, state["params"])

    records = run_epochs(z.shape[0], config.epochs, config.batch_size, shuffle_rng,
                         batch_update, epoch_metric, config.optimizer,
                         log_interval=config.log_interval)
    return state["params"], records
