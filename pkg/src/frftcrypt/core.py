"""Continuous fractional Fourier transform by direct quadrature.

Convention: for ``alpha`` not a multiple of pi the transform is

    (F_alpha u)(x) = A_alpha * integral exp[2 pi i (t^2/2 cot a - x t csc a
                                           + x^2/2 cot a)] u(t) dt,

with ``A_alpha`` the principal square root of ``1 - i cot(alpha)``.
Multiples of 2 pi give the identity and odd multiples of pi the
reflection ``u(-x)``.  ``alpha = pi/2`` is the Fourier transform with
kernel ``exp(-2 pi i x t)``.

The sum over samples is evaluated in the chirp-factored form
``A e^{i pi cot x^2} sum_n e^{-2 pi i csc x t_n} (e^{i pi cot t_n^2} c_n)``
which is algebraically the same kernel.  Output points are processed in
fixed row blocks and each row uses numpy's pairwise reduction, so the
result does not depend on the thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import GridMismatch, NearSingularOrder, SpecialAngle
from .quadrature import DEFAULT_QUAD, QuadratureSpec, cell_averages, cell_integrals, sample_weights
from .signals import EvaluationGrid, SampledSignal

SNAP_TOL = 1e-9
NEAR_TOL = 1e-6
_BLOCK_ROWS = 256
_TWO_PI = 2.0 * np.pi


class OrderKind(str, Enum):
    GENERIC = "generic"
    IDENTITY = "identity"
    REFLECTION = "reflection"


@dataclass(frozen=True)
class FrftOrder:
    """Transform angle with its classification and derived constants."""

    alpha: float
    kind: OrderKind
    cot_alpha: float
    csc_alpha: float
    a_alpha: complex
    snap_tol: float = SNAP_TOL
    near_tol: float = NEAR_TOL

    @property
    def is_generic(self) -> bool:
        return self.kind is OrderKind.GENERIC

    def negated(self) -> FrftOrder:
        return make_order(-self.alpha, self.snap_tol, self.near_tol)


def make_order(alpha: float, snap_tol: float = SNAP_TOL, near_tol: float = NEAR_TOL) -> FrftOrder:
    """Classify ``alpha`` and precompute cot, csc and ``A_alpha``.

    Orders within ``snap_tol`` of an even (odd) multiple of pi snap to the
    identity (reflection).  Orders farther than ``snap_tol`` but closer
    than ``near_tol`` raise :class:`NearSingularOrder`.
    """
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise ValueError("alpha must be finite")
    if snap_tol < 0:
        raise ValueError("snap_tol must be >= 0")
    r = alpha % _TWO_PI
    d_even = min(r, _TWO_PI - r)
    d_odd = abs(r - np.pi)
    nan = float("nan")
    if d_even <= snap_tol:
        return FrftOrder(alpha, OrderKind.IDENTITY, nan, nan, complex(nan, nan), snap_tol, near_tol)
    if d_odd <= snap_tol:
        return FrftOrder(alpha, OrderKind.REFLECTION, nan, nan, complex(nan, nan), snap_tol, near_tol)
    if min(d_even, d_odd) < near_tol:
        raise NearSingularOrder(
            f"alpha={alpha!r} is within {min(d_even, d_odd):.3g} rad of a multiple of pi"
        )
    s, c = np.sin(alpha), np.cos(alpha)
    cot = c / s
    a_alpha = complex(np.sqrt(complex(1.0, -cot)))
    return FrftOrder(alpha, OrderKind.GENERIC, float(cot), float(1.0 / s), a_alpha, snap_tol, near_tol)


def as_order(order) -> FrftOrder:
    return order if isinstance(order, FrftOrder) else make_order(order)


def kernel(order: FrftOrder, x, t):
    """Kernel ``K_alpha(x, t)``; broadcasts over array arguments."""
    order = as_order(order)
    if not order.is_generic:
        raise SpecialAngle(f"kernel undefined for {order.kind.value} order")
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    phase = np.pi * order.cot_alpha * (t * t + x * x) - _TWO_PI * order.csc_alpha * x * t
    return order.a_alpha * np.exp(1j * phase)


def matched_grid(order: FrftOrder, grid: EvaluationGrid) -> EvaluationGrid:
    """Centred transform-domain grid on which the sampled kernel is unitary.

    With ``N`` samples of spacing ``dt`` the output spacing is
    ``1 / (N dt |csc alpha|)``.  Applying :func:`inverse_frft` back onto
    ``grid`` then reproduces the input samples up to rounding.
    """
    order = as_order(order)
    if order.kind is OrderKind.IDENTITY:
        return grid
    if order.kind is OrderKind.REFLECTION:
        return EvaluationGrid(-grid.last, grid.dx, grid.count)
    dx = 1.0 / (grid.count * grid.dx * abs(order.csc_alpha))
    return EvaluationGrid.centered(dx, grid.count)


def _thread_count():
    env = os.environ.get("FRFT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _resample(u: SampledSignal, points: np.ndarray) -> np.ndarray:
    t = u.t
    slack = 1e-9 * u.dt
    if points.min() < t[0] - slack or points.max() > t[-1] + slack:
        raise GridMismatch(
            f"grid [{points.min():.6g}, {points.max():.6g}] exceeds samples "
            f"[{t[0]:.6g}, {t[-1]:.6g}]"
        )
    p = np.clip(points, t[0], t[-1])
    return np.interp(p, t, u.samples.real) + 1j * np.interp(p, t, u.samples.imag)


def frft(order, u: SampledSignal, grid: EvaluationGrid, quad: QuadratureSpec | None = None,
         weight=None) -> SampledSignal:
    """Fractional Fourier transform of ``u`` evaluated on ``grid``.

    Parameters
    ----------
    order : FrftOrder or float
        Transform angle in radians.
    u : SampledSignal
        Input samples.  Under the midpoint rule each sample is the value at
        the centre of a cell of width ``u.dt``.
    grid : EvaluationGrid
        Output points.
    quad : QuadratureSpec, optional
        Rule, truncation extent and (with ``weight``) graded refinement.
    weight : callable, optional
        Singular factor ``w(t)``; the integrand becomes ``u(t) w(t)`` and
        ``w`` is integrated over each cell on the graded mesh around
        ``quad.singularities``.

    Returns
    -------
    SampledSignal on ``grid``.
    """
    order = as_order(order)
    quad = quad or DEFAULT_QUAD
    if order.kind is not OrderKind.GENERIC:
        source = u
        if weight is not None:
            source = u.with_samples(
                u.samples * cell_averages(weight, u.t0, u.dt, len(u), quad)
            )
        pts = grid.points
        if order.kind is OrderKind.REFLECTION:
            pts = -pts
        return SampledSignal(grid.x0, grid.dx, _resample(source, pts))

    n = len(u)
    if weight is None:
        coeff = u.samples * sample_weights(u.t0, u.dt, n, quad)
    else:
        coeff = u.samples * cell_integrals(weight, u.t0, u.dt, n, quad)
    t = u.t
    keep = coeff != 0
    t, coeff = t[keep], coeff[keep]
    chirped = coeff * np.exp(1j * np.pi * order.cot_alpha * t * t)
    x = grid.points
    scale = _TWO_PI * order.csc_alpha
    out = np.zeros(grid.count, dtype=np.complex128)

    def block(start):
        xs = x[start:start + _BLOCK_ROWS]
        rows = np.exp(-1j * scale * np.multiply.outer(xs, t))
        out[start:start + _BLOCK_ROWS] = (rows * chirped).sum(axis=1)

    starts = range(0, grid.count, _BLOCK_ROWS)
    if t.size:
        workers = min(_thread_count(), len(starts))
        if workers > 1 and grid.count * t.size > 1 << 20:
            with ThreadPoolExecutor(workers) as pool:
                list(pool.map(block, starts))
        else:
            for s in starts:
                block(s)
    out *= order.a_alpha * np.exp(1j * np.pi * order.cot_alpha * x * x)
    return SampledSignal(grid.x0, grid.dx, out)


def inverse_frft(order, U: SampledSignal, grid: EvaluationGrid, quad: QuadratureSpec | None = None,
                 weight=None) -> SampledSignal:
    """Transform of order ``-alpha``."""
    return frft(as_order(order).negated(), U, grid, quad, weight)


def discretize(func, grid: EvaluationGrid, weight=None, quad: QuadratureSpec | None = None) -> SampledSignal:
    """Sample ``func(t) * w(t)`` on ``grid`` with ``w`` cell-averaged.

    Without ``weight`` this is plain point sampling.  With a singular
    ``weight`` each sample carries the mean of ``w`` over its cell, which
    keeps the cell's mass exact where point values are meaningless.
    """
    values = np.asarray(func(grid.points), dtype=np.complex128)
    if weight is not None:
        values = values * cell_averages(weight, grid.x0, grid.dx, grid.count, quad or DEFAULT_QUAD)
    return SampledSignal(grid.x0, grid.dx, values)
