"""Lorenz pseudo-orbit pairs under two interval extensions of the y-derivative.

The whole scheme rests on evaluating the y-derivative in two algebraically
equivalent but floating-point-distinct forms:

    variant A:  x*(rho - z) - y
    variant B:  x*rho - x*z - y     (left to right: (x*rho) - (x*z), then - y)

CPython executes each binary float operation as one IEEE-754 binary64
round-to-nearest-even operation, strictly left to right, with no fused
multiply-add and no reassociation, so writing the two expressions as plain
Python is itself the evaluation-order guarantee. Do not vectorize or
otherwise rewrite the kernels below: an optimizer that collapses the two
forms into one destroys the keystream.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IntegrationBlowupError

__all__ = [
    "ExtensionVariant",
    "LorenzParams",
    "LorenzState",
    "OrbitPair",
    "DEFAULT_PARAMS",
    "DEFAULT_INITIAL",
    "derivative",
    "rk4_step",
    "rk4_scalar_step",
    "integrate_pair",
]


class ExtensionVariant(enum.Enum):
    """The two evaluation orders for dy/dt."""

    A = "a"
    B = "b"


@dataclass(frozen=True)
class LorenzParams:
    """System parameters and integration step, all dimensionless."""

    sigma: float
    rho: float
    beta: float
    h: float

    def __post_init__(self):
        for name in ("sigma", "rho", "beta", "h"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"parameter {name} must be finite, got {value!r}")
        if self.h <= 0:
            raise DomainError(f"integration step h must be positive, got {self.h!r}")


@dataclass(frozen=True)
class LorenzState:
    """A point (x, y, z) of the system."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"state component {name} must be finite, got {value!r}")


DEFAULT_PARAMS = LorenzParams(sigma=16.0, rho=45.92, beta=4.0, h=1e-6)
DEFAULT_INITIAL = LorenzState(x=1.0, y=0.5, z=0.9)

_COMPONENT_COLUMNS = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class OrbitPair:
    """Two lockstep orbits from one initial state, one per variant.

    samples_a[n] and samples_b[n] hold the states after n+1 RK4 steps; the
    shared initial condition is not a sample. Arrays have shape (n_steps, 3)
    with columns x, y, z and are read-only.
    """

    samples_a: np.ndarray
    samples_b: np.ndarray
    params: LorenzParams
    initial: LorenzState

    def __post_init__(self):
        a, b = self.samples_a, self.samples_b
        if a.shape != b.shape:
            raise DomainError(f"orbit shapes differ: {a.shape} vs {b.shape}")
        if a.ndim != 2 or a.shape[1] != 3 or a.shape[0] < 1:
            raise DomainError(f"orbit samples must have shape (n, 3), got {a.shape}")

    def __len__(self) -> int:
        return self.samples_a.shape[0]

    def component(self, name: str) -> tuple[np.ndarray, np.ndarray]:
        """Return the (variant A, variant B) sample columns for x, y, or z."""
        try:
            col = _COMPONENT_COLUMNS[name]
        except KeyError:
            raise DomainError(f"unknown component {name!r}, expected one of x, y, z") from None
        return self.samples_a[:, col], self.samples_b[:, col]


def _deriv(x, y, z, sigma, rho, beta, expanded):
    # The two dy lines are the entire difference between the variants; dx and
    # dz share one fixed evaluation order.
    dx = sigma * (y - x)
    if expanded:
        dy = x * rho - x * z - y
    else:
        dy = x * (rho - z) - y
    dz = x * y - beta * z
    return dx, dy, dz


def _rk4(x, y, z, sigma, rho, beta, h, expanded):
    h2 = h * 0.5
    k1x, k1y, k1z = _deriv(x, y, z, sigma, rho, beta, expanded)
    k2x, k2y, k2z = _deriv(x + h2 * k1x, y + h2 * k1y, z + h2 * k1z,
                           sigma, rho, beta, expanded)
    k3x, k3y, k3z = _deriv(x + h2 * k2x, y + h2 * k2y, z + h2 * k2z,
                           sigma, rho, beta, expanded)
    k4x, k4y, k4z = _deriv(x + h * k3x, y + h * k3y, z + h * k3z,
                           sigma, rho, beta, expanded)
    h6 = h / 6.0
    return (x + h6 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
            y + h6 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
            z + h6 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z))


def derivative(state: LorenzState, params: LorenzParams,
               variant: ExtensionVariant) -> LorenzState:
    """Evaluate (dx/dt, dy/dt, dz/dt) at `state` under the given variant."""
    dx, dy, dz = _deriv(state.x, state.y, state.z,
                        params.sigma, params.rho, params.beta,
                        variant is ExtensionVariant.B)
    return LorenzState(dx, dy, dz)


def rk4_step(state: LorenzState, params: LorenzParams,
             variant: ExtensionVariant) -> LorenzState:
    """Advance `state` by one classical RK4 step of size params.h.

    Stage combination is k1 + 2*k2 + 2*k3 + k4, left to right, then
    scaled by h/6.
    """
    nx, ny, nz = _rk4(state.x, state.y, state.z,
                      params.sigma, params.rho, params.beta, params.h,
                      variant is ExtensionVariant.B)
    if not (math.isfinite(nx) and math.isfinite(ny) and math.isfinite(nz)):
        raise IntegrationBlowupError(
            f"RK4 step produced a non-finite state from {state}",
            variant=variant.value)
    return LorenzState(nx, ny, nz)


def rk4_scalar_step(f, x: float, h: float) -> float:
    """One classical RK4 step for a scalar autonomous ODE x' = f(x).

    Test hook used to verify the integrator kernel against systems with
    known solutions; the stage arithmetic mirrors the Lorenz kernel.
    """
    h2 = h * 0.5
    k1 = f(x)
    k2 = f(x + h2 * k1)
    k3 = f(x + h2 * k2)
    k4 = f(x + h * k3)
    h6 = h / 6.0
    return x + h6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate_pair(initial: LorenzState, params: LorenzParams,
                   n_steps: int) -> OrbitPair:
    """Integrate both variants from `initial` in lockstep for n_steps steps.

    Returns an OrbitPair whose sample n is the state after n+1 steps.
    Bit-exact reproducible: identical arguments yield identical bit patterns.
    """
    if n_steps < 1:
        raise DomainError(f"n_steps must be >= 1, got {n_steps}")
    sigma, rho, beta, h = params.sigma, params.rho, params.beta, params.h
    xa = xb = initial.x
    ya = yb = initial.y
    za = zb = initial.z
    out_a = np.empty((n_steps, 3), dtype=np.float64)
    out_b = np.empty((n_steps, 3), dtype=np.float64)
    isfinite = math.isfinite
    for n in range(n_steps):
        xa, ya, za = _rk4(xa, ya, za, sigma, rho, beta, h, False)
        if not (isfinite(xa) and isfinite(ya) and isfinite(za)):
            raise IntegrationBlowupError(
                f"variant A produced a non-finite state at step {n}",
                variant="a", step_index=n)
        xb, yb, zb = _rk4(xb, yb, zb, sigma, rho, beta, h, True)
        if not (isfinite(xb) and isfinite(yb) and isfinite(zb)):
            raise IntegrationBlowupError(
                f"variant B produced a non-finite state at step {n}",
                variant="b", step_index=n)
        out_a[n, 0] = xa
        out_a[n, 1] = ya
        out_a[n, 2] = za
        out_b[n, 0] = xb
        out_b[n, 1] = yb
        out_b[n, 2] = zb
    out_a.setflags(write=False)
    out_b.setflags(write=False)
    return OrbitPair(samples_a=out_a, samples_b=out_b,
                     params=params, initial=initial)
