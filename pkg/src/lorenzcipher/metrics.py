"""Cipher quality metrics: adjacent-pixel correlation, Shannon entropy,
histogram, chi-square uniformity, and the cross-work efficiency index."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cipher import GrayImage
from .errors import DomainError, UndefinedCorrelationError

__all__ = [
    "DIRECTIONS",
    "WorkScores",
    "population_correlation",
    "adjacent_correlation",
    "shannon_entropy",
    "histogram",
    "chi_square_uniform",
    "efficiency_index",
]

DIRECTIONS = ("horizontal", "vertical", "diagonal")


@dataclass(frozen=True)
class WorkScores:
    """One work's published quality numbers, as fed to the efficiency index."""

    label: str
    corr_h: float
    corr_v: float
    corr_d: float
    entropy: float

    def __post_init__(self):
        if not 0.0 <= self.entropy <= 8.0:
            raise DomainError(
                f"entropy must be in [0, 8] for 8-bit data, got {self.entropy!r}")


def population_correlation(x: np.ndarray, y: np.ndarray) -> float:
    """Pearson correlation with population (divide-by-n) moments.

    numpy reductions use a fixed pairwise summation order for a given shape,
    so repeated calls are bit-stable.
    """
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if x.shape != y.shape or x.size == 0:
        raise DomainError(f"series shapes differ or are empty: {x.shape} vs {y.shape}")
    dx = x - x.mean()
    dy = y - y.mean()
    sx = np.sqrt(np.mean(dx * dx))
    sy = np.sqrt(np.mean(dy * dy))
    if sx == 0.0 or sy == 0.0:
        raise UndefinedCorrelationError(
            "correlation undefined: a series has zero standard deviation")
    r = float(np.mean(dx * dy) / (sx * sy))
    # One rounding step can push |r| a few ulp past 1; the result is a
    # correlation and must stay in [-1, 1].
    return min(1.0, max(-1.0, r))


def _pair_series(image: GrayImage, direction: str) -> tuple[np.ndarray, np.ndarray]:
    p = image.pixels
    if direction == "horizontal":
        if image.cols < 2:
            raise DomainError("horizontal pairs need at least 2 columns")
        return p[:, :-1], p[:, 1:]
    if direction == "vertical":
        if image.rows < 2:
            raise DomainError("vertical pairs need at least 2 rows")
        return p[:-1, :], p[1:, :]
    if direction == "diagonal":
        if image.rows < 2 or image.cols < 2:
            raise DomainError("diagonal pairs need at least 2 rows and 2 columns")
        return p[:-1, :-1], p[1:, 1:]
    raise DomainError(f"unknown direction {direction!r}, expected one of {DIRECTIONS}")


def adjacent_correlation(image: GrayImage, direction: str) -> float:
    """Correlation between each pixel and its neighbor in `direction`.

    All adjacent pairs are used (no sampling): horizontal pairs are
    (i,j)-(i,j+1), vertical (i,j)-(i+1,j), diagonal (i,j)-(i+1,j+1).
    """
    x, y = _pair_series(image, direction)
    return population_correlation(x.astype(np.float64), y.astype(np.float64))


def histogram(image: GrayImage) -> np.ndarray:
    """Count of each intensity 0..255; counts sum to the pixel count."""
    return np.bincount(image.pixels.ravel(), minlength=256).astype(np.int64)


def shannon_entropy(image: GrayImage) -> float:
    """H = sum of P_i * log2(1/P_i) over intensity levels, in [0, 8] bits.

    Levels with zero probability contribute zero.
    """
    counts = histogram(image)
    total = counts.sum()
    p = counts[counts > 0] / total
    # + 0.0 turns the -0.0 of single-level images into +0.0
    return float(-(p * np.log2(p)).sum() + 0.0)


def chi_square_uniform(counts: np.ndarray) -> float:
    """Chi-square statistic of `counts` against a uniform distribution."""
    counts = np.asarray(counts, dtype=np.float64)
    if counts.size < 2 or counts.sum() <= 0:
        raise DomainError("chi-square needs >= 2 bins with a positive total")
    expected = counts.sum() / counts.size
    return float(((counts - expected) ** 2 / expected).sum())


def efficiency_index(scores: list[WorkScores]) -> list[float]:
    """Mean best-value ratio over the four categories, one Ic per work.

    For each correlation category the best value M is the smallest magnitude
    across works and a work's ratio is M / |V|; for entropy the best value is
    the largest and the ratio is V / M. Every ratio is in (0, 1], the best
    work in a category scores exactly 1 there, and Ic is the arithmetic mean
    of the four ratios.
    """
    if not scores:
        raise DomainError("efficiency_index needs at least one work")
    for s in scores:
        for field in ("corr_h", "corr_v", "corr_d"):
            if getattr(s, field) == 0.0:
                raise DomainError(
                    f"work {s.label!r} has a zero {field}; a literally zero "
                    f"correlation would dominate the index and is surfaced, "
                    f"not clamped")
        if s.entropy <= 0.0:
            raise DomainError(f"work {s.label!r} has non-positive entropy")
    ch = np.array([abs(s.corr_h) for s in scores])
    cv = np.array([abs(s.corr_v) for s in scores])
    cd = np.array([abs(s.corr_d) for s in scores])
    en = np.array([s.entropy for s in scores])
    ratios = (ch.min() / ch + cv.min() / cv + cd.min() / cd + en / en.max())
    return [float(r) / 4.0 for r in ratios]
