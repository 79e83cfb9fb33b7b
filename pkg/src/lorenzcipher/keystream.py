"""Keystream derivation from the lower bound error of an orbit pair.

Pipeline: integrate both variants, take delta[n] = |a_n - b_n| / 2 on one
state component, discard a transient prefix, then map the retained window
to bytes under one of two strategies:

  mantissa-lsb   low 8 bits of the binary64 significand field of delta
  minmax-scale   floor((delta - min) / (max - min) * 255) over the window
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InsufficientSamplesError
from .lorenz import LorenzParams, LorenzState, OrbitPair, integrate_pair

__all__ = [
    "TRANSIENT_DEFAULT",
    "STRATEGIES",
    "COMPONENTS",
    "KeystreamConfig",
    "Keystream",
    "KeystreamQualityWarning",
    "required_iterations",
    "lower_bound_error",
    "extract_bytes",
    "generate_keystream",
]

TRANSIENT_DEFAULT = 2000
STRATEGIES = ("mantissa-lsb", "minmax-scale")
COMPONENTS = ("x", "y", "z")

# Zero delta samples yield byte 0 under both strategies; a keystream made
# mostly of zeros XORs to near-identity, so it is worth a loud warning.
ZERO_FRACTION_WARN = 0.02


class KeystreamQualityWarning(UserWarning):
    """The generated keystream looks degenerate (e.g. too many zero bytes)."""


@dataclass(frozen=True)
class KeystreamConfig:
    """Shape and extraction settings for one keystream."""

    rows: int
    cols: int
    transient: int = TRANSIENT_DEFAULT
    strategy: str = "mantissa-lsb"
    component: str = "y"

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DomainError(f"rows and cols must be >= 1, got {self.rows}x{self.cols}")
        if self.transient < 0:
            raise DomainError(f"transient must be >= 0, got {self.transient}")
        if self.strategy not in STRATEGIES:
            raise DomainError(f"unknown strategy {self.strategy!r}, expected one of {STRATEGIES}")
        if self.component not in COMPONENTS:
            raise DomainError(f"unknown component {self.component!r}, expected one of {COMPONENTS}")


@dataclass(frozen=True)
class Keystream:
    """rows*cols key bytes plus everything needed to regenerate them."""

    data: np.ndarray
    config: KeystreamConfig
    params: LorenzParams
    initial: LorenzState

    def __post_init__(self):
        expected = self.config.rows * self.config.cols
        if self.data.dtype != np.uint8 or self.data.shape != (expected,):
            raise DomainError(
                f"keystream must be {expected} uint8 values, got "
                f"{self.data.dtype} array of shape {self.data.shape}")

    def __len__(self) -> int:
        return self.data.shape[0]

    def hex(self) -> str:
        return self.data.tobytes().hex()


def required_iterations(rows: int, cols: int) -> int:
    """Highest zero-based sample index needed for a rows x cols key.

    Equals TRANSIENT_DEFAULT + rows*cols - 1; the total sample count is one
    more than this. Python integers do not overflow, so no range check
    beyond positivity is needed.
    """
    if rows < 1 or cols < 1:
        raise DomainError(f"rows and cols must be >= 1, got {rows}x{cols}")
    return TRANSIENT_DEFAULT + rows * cols - 1


def lower_bound_error(pair: OrbitPair, component: str = "y") -> np.ndarray:
    """delta[n] = |a_n - b_n| / 2 on the chosen component, for every sample."""
    a, b = pair.component(component)
    delta = np.abs(a - b) / 2.0
    if not np.isfinite(delta).all():
        raise DomainError("orbit pair contains non-finite samples")
    return delta


def extract_bytes(delta: np.ndarray, config: KeystreamConfig) -> np.ndarray:
    """Discard the transient prefix and map the key window to bytes."""
    delta = np.asarray(delta, dtype=np.float64)
    needed = config.transient + config.rows * config.cols
    if delta.shape[0] < needed:
        raise InsufficientSamplesError(
            f"need {needed} delta samples (transient {config.transient} + "
            f"{config.rows}x{config.cols} key), have {delta.shape[0]}")
    window = delta[config.transient:needed]
    if config.strategy == "mantissa-lsb":
        return (window.view(np.uint64) & np.uint64(0xFF)).astype(np.uint8)
    lo = window.min()
    hi = window.max()
    if hi == lo:
        return np.zeros(window.shape[0], dtype=np.uint8)
    scaled = (window - lo) / (hi - lo)
    return np.floor(scaled * 255.0).astype(np.uint8)


def generate_keystream(params: LorenzParams, initial: LorenzState,
                       config: KeystreamConfig) -> Keystream:
    """Integrate, difference, and extract a rows*cols byte keystream.

    Integrates config.transient + rows*cols samples, which at the default
    transient equals required_iterations(rows, cols) + 1. Bit-reproducible
    in all arguments. Warns (never raises) when the zero-byte fraction
    exceeds ZERO_FRACTION_WARN.
    """
    n_samples = config.transient + config.rows * config.cols
    pair = integrate_pair(initial, params, n_samples)
    delta = lower_bound_error(pair, config.component)
    data = extract_bytes(delta, config)
    zero_fraction = float(np.count_nonzero(data == 0)) / data.shape[0]
    if zero_fraction > ZERO_FRACTION_WARN:
        warnings.warn(
            f"keystream zero-byte fraction {zero_fraction:.2%} exceeds "
            f"{ZERO_FRACTION_WARN:.0%}; the cipher is close to an identity "
            f"map (try a larger step h or more iterations)",
            KeystreamQualityWarning, stacklevel=2)
    data.setflags(write=False)
    return Keystream(data=data, config=config, params=params, initial=initial)
