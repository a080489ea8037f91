"""Sampled signals and evaluation grids."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """Complex samples on the uniform grid ``t0 + i*dt``.

    Samples are stored as an immutable complex128 array.
    """

    t0: float
    dt: float
    samples: np.ndarray

    def __post_init__(self):
        samples = np.array(self.samples, dtype=np.complex128, copy=True).ravel()
        if not self.dt > 0 or not np.isfinite(self.dt):
            raise ValueError(f"dt must be positive and finite, got {self.dt!r}")
        if not np.isfinite(self.t0):
            raise ValueError("t0 must be finite")
        if samples.size == 0:
            raise ValueError("samples must be non-empty")
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples must be finite")
        samples.flags.writeable = False
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "dt", float(self.dt))
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return self.samples.size

    @property
    def grid(self) -> EvaluationGrid:
        return EvaluationGrid(self.t0, self.dt, self.samples.size)

    @property
    def t(self) -> np.ndarray:
        return self.grid.points

    def with_samples(self, samples) -> SampledSignal:
        return SampledSignal(self.t0, self.dt, samples)

    @classmethod
    def from_function(cls, func, grid: EvaluationGrid) -> SampledSignal:
        return cls(grid.x0, grid.dx, func(grid.points))


@dataclass(frozen=True)
class EvaluationGrid:
    """Uniform grid of ``count`` points ``x0 + i*dx``."""

    x0: float
    dx: float
    count: int

    def __post_init__(self):
        if not self.dx > 0 or not np.isfinite(self.dx):
            raise ValueError(f"dx must be positive and finite, got {self.dx!r}")
        if int(self.count) != self.count or self.count < 1:
            raise ValueError(f"count must be a positive integer, got {self.count!r}")
        object.__setattr__(self, "x0", float(self.x0))
        object.__setattr__(self, "dx", float(self.dx))
        object.__setattr__(self, "count", int(self.count))

    @property
    def points(self) -> np.ndarray:
        return self.x0 + np.arange(self.count) * self.dx

    @property
    def last(self) -> float:
        return self.x0 + (self.count - 1) * self.dx

    @classmethod
    def centered(cls, dx: float, count: int) -> EvaluationGrid:
        """Grid of ``count`` points symmetric about the origin."""
        return cls(-0.5 * (count - 1) * dx, dx, count)

    @classmethod
    def covering(cls, a: float, b: float, count: int) -> EvaluationGrid:
        """Cell-centred grid whose ``count`` cells tile ``[a, b]`` exactly."""
        dx = (b - a) / count
        return cls(a + 0.5 * dx, dx, count)
