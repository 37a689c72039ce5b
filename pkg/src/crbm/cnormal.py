"""Complex normal distribution with per-dimension pseudo-variance, plus RNG
and Wirtinger-gradient helpers shared by every model in the package.

A complex random vector z is described per dimension by a mean mu, a variance
gamma = E[|z - mu|^2] > 0 and a pseudo-variance delta = E[(z - mu)^2].  The
pair (gamma, delta) is equivalent to a structured 2-D real Gaussian over
(Re z, Im z):

    Var(x)   = (gamma + Re delta) / 2
    Var(y)   = (gamma - Re delta) / 2
    Cov(x,y) = Im delta / 2

delta = 0 recovers the circular (proper) complex Gaussian.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SeededRng",
    "ComplexNormalParams",
    "WirtingerGrad",
    "cn_log_density",
    "cn_sample",
    "wirtinger_convert",
]

LOG_PI = float(np.log(np.pi))

# Reject gamma^2 - |delta|^2 <= PD_GUARD * gamma^2: exactly-singular params make
# the y-variance formula cancel catastrophically.
PD_GUARD = 1e-12


class SeededRng:
    """Deterministic random stream built on the counter-based Philox engine.

    The same (seed, stream) pair replays the identical draw sequence on any
    platform.  Sampling chains that must not interact (e.g. parallel Gibbs
    chains) each take their own stream id.
    """

    def __init__(self, seed: int, stream: int = 0):
        self.seed = int(seed)
        self.stream = int(stream)
        self._gen = np.random.Generator(np.random.Philox(key=[self.seed, self.stream]))

    def spawn(self, stream: int) -> "SeededRng":
        """Fresh stream under the same seed; independent of this one."""
        return SeededRng(self.seed, stream)

    def standard_normal(self, shape) -> np.ndarray:
        return self._gen.standard_normal(shape)

    def uniform(self, shape) -> np.ndarray:
        return self._gen.random(shape)

    def permutation(self, n: int) -> np.ndarray:
        return self._gen.permutation(n)


@dataclass(frozen=True)
class ComplexNormalParams:
    """Diagonal complex normal CN(mu, diag(gamma), diag(delta)).

    Invariants: gamma > 0 and gamma^2 - |delta|^2 > 0 element-wise (the
    extended covariance must be positive definite).
    """

    mu: np.ndarray
    gamma: np.ndarray
    delta: np.ndarray

    def __post_init__(self):
        mu = np.asarray(self.mu, dtype=np.complex128)
        gamma = np.asarray(self.gamma, dtype=np.float64)
        delta = np.asarray(self.delta, dtype=np.complex128)
        if mu.shape != gamma.shape or mu.shape != delta.shape:
            raise ValueError(
                f"shape mismatch: mu {mu.shape}, gamma {gamma.shape}, delta {delta.shape}"
            )
        if not (np.all(np.isfinite(gamma)) and np.all(np.isfinite(mu))
                and np.all(np.isfinite(delta))):
            raise ValueError("non-finite complex normal parameters")
        if np.any(gamma <= 0.0):
            raise ValueError("gamma must be positive")
        if np.any(gamma**2 - np.abs(delta) ** 2 <= PD_GUARD * gamma**2):
            raise ValueError("gamma^2 - |delta|^2 too small: extended covariance not positive definite")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "delta", delta)

    @property
    def dim(self) -> int:
        return self.mu.shape[-1]


@dataclass(frozen=True)
class WirtingerGrad:
    """The pair (dL/d theta, dL/d theta-bar) treated as independent derivatives.

    For a real-valued objective the two entries are complex conjugates.
    """

    d_theta: np.ndarray
    d_theta_bar: np.ndarray

    def to_real_pair(self) -> tuple[np.ndarray, np.ndarray]:
        """Recover (dL/dRe, dL/dIm); exact inverse of wirtinger_convert."""
        grad_re = (self.d_theta + self.d_theta_bar).real
        grad_im = ((self.d_theta_bar - self.d_theta) * 1j).real
        return grad_re, grad_im


def wirtinger_convert(grad_re: np.ndarray, grad_im: np.ndarray) -> WirtingerGrad:
    """Convert real-part/imag-part derivatives to the Wirtinger pair.

    d/d theta     = (d/dRe - i d/dIm) / 2
    d/d theta-bar = (d/dRe + i d/dIm) / 2
    """
    grad_re = np.asarray(grad_re, dtype=np.float64)
    grad_im = np.asarray(grad_im, dtype=np.float64)
    if grad_re.shape != grad_im.shape:
        raise ValueError(f"shape mismatch: {grad_re.shape} vs {grad_im.shape}")
    d_theta = 0.5 * (grad_re - 1j * grad_im)
    d_theta_bar = 0.5 * (grad_re + 1j * grad_im)
    return WirtingerGrad(d_theta=d_theta, d_theta_bar=d_theta_bar)


def precision_pair(gamma: np.ndarray, delta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Element-wise precision vectors p = gamma/d, q = -delta/d with
    d = gamma^2 - |delta|^2.  Shared by the density and the energy models."""
    d = gamma**2 - np.abs(delta) ** 2
    return gamma / d, -delta / d


def cn_log_density(z: np.ndarray, params: ComplexNormalParams) -> float:
    """Log density of the diagonal complex normal, normalizer included.

    log p(z) = -D log pi - 1/2 sum log(gamma^2 - |delta|^2)
               - sum [ p |z-mu|^2 + Re(q (z-mu)-bar^2) ]

    Supports a batch leading axis on z; returns a scalar for 1-D input.
    """
    z = np.asarray(z, dtype=np.complex128)
    if z.shape[-1] != params.dim:
        raise ValueError(f"dimension mismatch: z has {z.shape[-1]}, params {params.dim}")
    gamma, delta = params.gamma, params.delta
    p, q = precision_pair(gamma, delta)
    v = z - params.mu
    quad = p * np.abs(v) ** 2 + (q * np.conj(v) ** 2).real
    log_norm = -params.dim * LOG_PI - 0.5 * np.log(gamma**2 - np.abs(delta) ** 2).sum()
    out = log_norm - quad.sum(axis=-1)
    return float(out) if out.ndim == 0 else out


def cn_sample(params: ComplexNormalParams, rng: SeededRng, size: int | None = None) -> np.ndarray:
    """Draw from CN(mu, gamma, delta) via the 2-D real Gaussian equivalent.

    Per dimension: x = sqrt(Vx) n1, y = (Cxy/sqrt(Vx)) n1 + sqrt(Vy - Cxy^2/Vx) n2
    with Vx, Vy, Cxy from the module docstring and n1, n2 iid standard normal.
    `size=None` returns one vector of shape (I,); otherwise shape (size, I).
    """
    gamma, delta = params.gamma, params.delta
    vx = (gamma + delta.real) / 2.0
    vy = (gamma - delta.real) / 2.0
    cxy = delta.imag / 2.0
    shape = (params.dim,) if size is None else (size, params.dim)
    n1 = rng.standard_normal(shape)
    n2 = rng.standard_normal(shape)
    # Cholesky of [[Vx, Cxy], [Cxy, Vy]]; Vx > 0 is guaranteed by |Re delta| < gamma.
    x = np.sqrt(vx) * n1
    resid = vy - cxy**2 / vx
    y = (cxy / np.sqrt(vx)) * n1 + np.sqrt(np.maximum(resid, 0.0)) * n2
    return params.mu + x + 1j * y
