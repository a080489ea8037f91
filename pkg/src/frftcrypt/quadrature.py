"""Quadrature rules on uniform sample grids with graded refinement.

Samples of a :class:`~frftcrypt.signals.SampledSignal` are read as cell
midpoints (``Midpoint``) or as nodes (``Trapezoid``).  Integrable point
singularities of a *weight* function are handled by product integration:
the smooth factor stays at the sample, the weight is integrated over the
sample's cell on a mesh refined dyadically toward each singularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

MAX_REFINEMENT_LEVELS = 40


class Rule(str, Enum):
    MIDPOINT = "midpoint"
    TRAPEZOID = "trapezoid"


@dataclass(frozen=True)
class QuadratureSpec:
    """How an integral over sampled data is discretised.

    Parameters
    ----------
    rule : Rule
        ``MIDPOINT`` (default) or ``TRAPEZOID``.
    singularities : sequence of float
        Points where a weight has an integrable blow-up.
    refinement_levels : int
        Number of dyadic bands between the coarse mesh and each
        singularity. ``0`` disables refinement.
    extent : float or None
        Truncation half-width; samples with ``|t| > extent`` are dropped.
        ``None`` keeps every sample.
    cells_per_level : int
        Midpoint cells per dyadic band. The graded zone reaches
        ``cells_per_level`` coarse cells on each side of a singularity.
    """

    rule: Rule = Rule.MIDPOINT
    singularities: tuple = ()
    refinement_levels: int = 0
    extent: float | None = None
    cells_per_level: int = 32

    def __post_init__(self):
        object.__setattr__(self, "rule", Rule(self.rule))
        object.__setattr__(
            self, "singularities", tuple(float(s) for s in self.singularities)
        )
        if not 0 <= self.refinement_levels <= MAX_REFINEMENT_LEVELS:
            raise ValueError(
                f"refinement_levels must be in [0, {MAX_REFINEMENT_LEVELS}]"
            )
        if self.extent is not None and not self.extent > 0:
            raise ValueError("extent must be positive")
        if self.cells_per_level < 1:
            raise ValueError("cells_per_level must be >= 1")

    def with_singularities(self, points: Sequence[float]) -> QuadratureSpec:
        return QuadratureSpec(
            self.rule, tuple(points), self.refinement_levels, self.extent,
            self.cells_per_level,
        )


DEFAULT_QUAD = QuadratureSpec()


def cell_edges(t0: float, dt: float, count: int, rule: Rule = Rule.MIDPOINT) -> np.ndarray:
    """Edges of the ``count`` cells that carry the samples.

    Midpoint cells are centred on samples.  Trapezoid cells are clipped to
    the first and last node, so the end cells are half as wide.
    """
    edges = t0 + (np.arange(count + 1) - 0.5) * dt
    if Rule(rule) is Rule.TRAPEZOID:
        edges[0] = t0
        edges[-1] = t0 + (count - 1) * dt
    return edges


def sample_weights(t0: float, dt: float, count: int, quad: QuadratureSpec = DEFAULT_QUAD) -> np.ndarray:
    """Quadrature weight attached to each sample (truncation applied)."""
    w = np.diff(cell_edges(t0, dt, count, quad.rule))
    if quad.extent is not None:
        t = t0 + np.arange(count) * dt
        w = np.where(np.abs(t) <= quad.extent, w, 0.0)
    return w


def graded_breakpoints(a: float, b: float, singularities: Sequence[float], levels: int,
                       cells_per_level: int, base: float) -> np.ndarray:
    """Sorted mesh points on ``[a, b]`` refined toward each singularity.

    Around a singularity ``s`` the zone ``|t - s| <= R`` with
    ``R = cells_per_level * base`` is split into bands
    ``[R 2^-(l+1), R 2^-l]``, ``l = 0..levels-1``, each holding
    ``cells_per_level`` equal cells, plus one innermost cell touching ``s``.
    """
    pts = [np.array([a, b])]
    if levels > 0:
        radius = cells_per_level * base
        # offsets are built once; every singularity reuses them
        bands = []
        for level in range(levels):
            hi = radius * 0.5 ** level
            bands.append(np.linspace(hi / 2, hi, cells_per_level + 1))
        offsets = np.concatenate(bands)
        for s in singularities:
            if s < a - radius or s > b + radius:
                continue
            pts.append(np.array([s]))
            pts.append(s + offsets)
            pts.append(s - offsets)
    mesh = np.concatenate(pts)
    mesh = mesh[(mesh >= a) & (mesh <= b)]
    return np.unique(mesh)


def _midpoint_sum(func, mesh):
    mid = 0.5 * (mesh[1:] + mesh[:-1])
    h = np.diff(mesh)
    return mid, h, func(mid) * h


def cell_integrals(func: Callable[[np.ndarray], np.ndarray], t0: float, dt: float, count: int,
                   quad: QuadratureSpec = DEFAULT_QUAD) -> np.ndarray:
    """Integral of ``func`` over each sample cell.

    Cells near ``quad.singularities`` are integrated on the graded mesh;
    elsewhere the one-point midpoint rule is used.  Truncation by
    ``quad.extent`` zeroes excluded cells.
    """
    edges = cell_edges(t0, dt, count, quad.rule)
    if quad.refinement_levels == 0 or not quad.singularities:
        mid = 0.5 * (edges[1:] + edges[:-1])
        out = func(mid) * np.diff(edges)
    else:
        extra = graded_breakpoints(
            edges[0], edges[-1], quad.singularities, quad.refinement_levels,
            quad.cells_per_level, dt,
        )
        mesh = np.union1d(edges, extra)
        mid, _, contrib = _midpoint_sum(func, mesh)
        owner = np.clip(np.searchsorted(edges, mid, side="right") - 1, 0, count - 1)
        out = np.zeros(count, dtype=np.result_type(contrib, np.float64))
        np.add.at(out, owner, contrib)
    if quad.extent is not None:
        t = t0 + np.arange(count) * dt
        out = np.where(np.abs(t) <= quad.extent, out, 0.0)
    return out


def cell_averages(func, t0, dt, count, quad: QuadratureSpec = DEFAULT_QUAD) -> np.ndarray:
    """:func:`cell_integrals` divided by the cell widths."""
    widths = np.diff(cell_edges(t0, dt, count, quad.rule))
    quad_untruncated = QuadratureSpec(
        quad.rule, quad.singularities, quad.refinement_levels, None, quad.cells_per_level
    )
    return cell_integrals(func, t0, dt, count, quad_untruncated) / widths


def graded_integral(func, a: float, b: float, base: float, singularities: Sequence[float] = (),
                    levels: int = 0, cells_per_level: int = 32) -> float:
    """Composite midpoint integral of ``func`` over ``[a, b]``.

    The coarse mesh has spacing close to ``base``; singularities are
    refined as in :func:`graded_breakpoints`.
    """
    n = max(1, int(round((b - a) / base)))
    coarse = np.linspace(a, b, n + 1)
    extra = graded_breakpoints(a, b, singularities, levels, cells_per_level, (b - a) / n)
    mesh = np.union1d(coarse, extra)
    _, _, contrib = _midpoint_sum(func, mesh)
    return contrib.sum()
