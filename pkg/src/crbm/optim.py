"""First-order ascent steps for complex and real parameter arrays.

The complex steppers consume the conjugate Wirtinger gradient dL/d theta-bar,
which for a real objective is the steepest-ascent direction; updates carry the
factor 2 that converts it back to a full gradient step.  Real parameters fed
through the complex steppers therefore use half-gradients (see model.py).

All steppers are pure: same (param, grad, config, state) in, bit-identical
result out.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

__all__ = [
    "CsaConfig",
    "CAdamConfig",
    "CAdamState",
    "RealSaConfig",
    "RealAdamConfig",
    "RealAdamState",
    "csa_step",
    "cadam_step",
    "real_sa_step",
    "real_adam_step",
]


@dataclass(frozen=True)
class CsaConfig:
    """Complex steepest ascent: velocity' = momentum*velocity + 2 alpha g."""

    alpha: complex = 0.01
    momentum: float = 0.0

    def __post_init__(self):
        if not complex(self.alpha).real > 0:
            raise ValueError("Re(alpha) must be positive")
        if not 0.0 <= self.momentum < 1.0:
            raise ValueError("momentum must be in [0, 1)")


@dataclass(frozen=True)
class CAdamConfig:
    """Complex adaptive-momentum ascent.

    m' = beta1 m + (1-beta1) g;  v' = beta2 v + (1-beta2) |g|^2
    step = 2 alpha * mhat / (vhat + epsilon)      (default)
    step = 2 alpha * mhat / (sqrt(vhat) + epsilon)  when use_sqrt is set

    with mhat = m'/(1-beta1^l), vhat = v'/(1-beta2^l).  The plain-v divisor is
    deliberate (not a typo for sqrt); use_sqrt exposes the conventional variant
    for experimentation.
    """

    alpha: complex = 0.001
    beta1: complex = 0.9
    beta2: complex = 0.999
    epsilon: float = 1e-8
    use_sqrt: bool = False

    def __post_init__(self):
        if not complex(self.alpha).real > 0:
            raise ValueError("Re(alpha) must be positive")
        for name, b in (("beta1", self.beta1), ("beta2", self.beta2)):
            if not 0.0 < abs(complex(b)) < 1.0:
                raise ValueError(f"{name} must satisfy 0 < |beta| < 1")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")


@dataclass(frozen=True)
class CAdamState:
    m: np.ndarray
    v: np.ndarray
    step: int = 0

    @classmethod
    def zeros_like(cls, param: np.ndarray) -> "CAdamState":
        return cls(m=np.zeros(param.shape, dtype=np.complex128),
                   v=np.zeros(param.shape, dtype=np.float64), step=0)


def csa_step(param: np.ndarray, grad_conj: np.ndarray, config: CsaConfig,
             velocity: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
    """One complex steepest-ascent step; returns (param', velocity')."""
    if velocity is None:
        velocity = np.zeros_like(param)
    if param.shape != grad_conj.shape or param.shape != velocity.shape:
        raise ValueError("shape mismatch between param, grad and velocity")
    velocity = config.momentum * velocity + 2.0 * config.alpha * grad_conj
    if not np.iscomplexobj(param):
        velocity = velocity.real
    return param + velocity, velocity


def cadam_step(param: np.ndarray, grad_conj: np.ndarray, config: CAdamConfig,
               state: CAdamState) -> tuple[np.ndarray, CAdamState]:
    """One complex adaptive-momentum step; returns (param', state')."""
    if param.shape != grad_conj.shape or param.shape != state.m.shape:
        raise ValueError("shape mismatch between param, grad and state")
    l = state.step + 1
    m = config.beta1 * state.m + (1.0 - config.beta1) * grad_conj
    v = config.beta2 * state.v + (1.0 - config.beta2) * np.abs(grad_conj) ** 2
    m_hat = m / (1.0 - config.beta1**l)
    v_hat = v / (1.0 - config.beta2**l)
    denom = np.sqrt(np.abs(v_hat)) if config.use_sqrt else v_hat
    step = 2.0 * config.alpha * m_hat / (denom + config.epsilon)
    if not np.iscomplexobj(param):
        step = step.real
    return param + step, CAdamState(m=m, v=np.abs(v), step=l)


@dataclass(frozen=True)
class RealSaConfig:
    """Real steepest ascent with optional momentum; param' = param + alpha g."""

    alpha: float = 0.01
    momentum: float = 0.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError("alpha must be positive")
        if not 0.0 <= self.momentum < 1.0:
            raise ValueError("momentum must be in [0, 1)")


@dataclass(frozen=True)
class RealAdamConfig:
    """Conventional Adam (ascent form) with the sqrt(v) denominator."""

    alpha: float = 0.001
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError("alpha must be positive")
        for name, b in (("beta1", self.beta1), ("beta2", self.beta2)):
            if not 0.0 < b < 1.0:
                raise ValueError(f"{name} must be in (0, 1)")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")


@dataclass(frozen=True)
class RealAdamState:
    m: np.ndarray
    v: np.ndarray
    step: int = 0

    @classmethod
    def zeros_like(cls, param: np.ndarray) -> "RealAdamState":
        return cls(m=np.zeros(param.shape, dtype=np.float64),
                   v=np.zeros(param.shape, dtype=np.float64), step=0)


def real_sa_step(param: np.ndarray, grad: np.ndarray, config: RealSaConfig,
                 velocity: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
    """One real steepest-ascent step; returns (param', velocity')."""
    if velocity is None:
        velocity = np.zeros_like(param)
    if param.shape != grad.shape or param.shape != velocity.shape:
        raise ValueError("shape mismatch between param, grad and velocity")
    velocity = config.momentum * velocity + config.alpha * grad
    return param + velocity, velocity


def real_adam_step(param: np.ndarray, grad: np.ndarray, config: RealAdamConfig,
                   state: RealAdamState) -> tuple[np.ndarray, RealAdamState]:
    """One conventional Adam ascent step; returns (param', state')."""
    if param.shape != grad.shape or param.shape != state.m.shape:
        raise ValueError("shape mismatch between param, grad and state")
    l = state.step + 1
    m = config.beta1 * state.m + (1.0 - config.beta1) * grad
    v = config.beta2 * state.v + (1.0 - config.beta2) * grad**2
    m_hat = m / (1.0 - config.beta1**l)
    v_hat = v / (1.0 - config.beta2**l)
    step = config.alpha * m_hat / (np.sqrt(v_hat) + config.epsilon)
    return param + step, RealAdamState(m=m, v=v, step=l)
