"""O(N log N) discrete FRFT by chirp multiplication and chirp convolution.

Works on dimensionless samples ``t_k = (k - (N-1)/2) / sqrt(N)`` so that
the signal occupies an interval of width ``sqrt(N)`` in both domains.
For ``0.5 <= |a| <= 1.5`` (``a = 2 alpha / pi``) the transform is

    chirp(-tan(phi/2)) -> convolve with chirp(csc phi) -> chirp(-tan(phi/2)),

applied to the twice-oversampled (sinc-interpolated) signal.  Other
orders are reduced to that range with reflections and whole DFTs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

from .crypto import EncryptionKey, q_omega, support_grid
from .core import matched_grid
from .errors import BadPlan
from .quadrature import QuadratureSpec
from .signals import EvaluationGrid, SampledSignal

_SPECIAL_TOL = 1e-12


def _reduce(a: float) -> tuple:
    """Split order ``a`` (mod 4) into whole-DFT stages plus one core stage."""
    a = a % 4.0
    stages = []
    for whole in (0.0, 1.0, 2.0, 3.0, 4.0):
        if abs(a - whole) < _SPECIAL_TOL:
            whole = whole % 4.0
            if whole == 2.0:
                stages.append(("flip", 2.0))
            elif whole == 1.0:
                stages.append(("dft", 1.0))
            elif whole == 3.0:
                stages.append(("dft", -1.0))
            return tuple(stages)
    if a > 2.0:
        stages.append(("flip", 2.0))
        a -= 2.0
    if a > 1.5:
        stages.append(("dft", 1.0))
        a -= 1.0
    if a < 0.5:
        stages.append(("dft", -1.0))
        a += 1.0
    stages.append(("core", a))
    return tuple(stages)


@dataclass(frozen=True)
class FastDfrftPlan:
    """Plan for ``n`` samples and order ``a = 2 alpha / pi``.

    ``width = sqrt(n)`` is the extent of the normalised interval; samples
    are ``1/sqrt(n)`` apart.
    """

    n: int
    order_a: float

    def __post_init__(self):
        n = int(self.n)
        if n != self.n or n < 2 or n & (n - 1):
            raise BadPlan(f"n must be a power of two >= 2, got {self.n!r}")
        if not np.isfinite(self.order_a):
            raise BadPlan("order must be finite")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "order_a", float(self.order_a))
        object.__setattr__(self, "stages", _reduce(self.order_a))

    @classmethod
    def for_angle(cls, n: int, alpha: float) -> FastDfrftPlan:
        return cls(n, 2.0 * alpha / np.pi)

    @property
    def width(self) -> float:
        return float(np.sqrt(self.n))

    @property
    def grid(self) -> EvaluationGrid:
        return EvaluationGrid.centered(1.0 / np.sqrt(self.n), self.n)


def _dft(f, sign):
    """Unitary DFT on the symmetric grid; ``sign=-1`` for the inverse."""
    n = f.size
    c = 0.5 * (n - 1)
    k = np.arange(n)
    tw = np.exp(sign * 2j * np.pi * c * k / n)
    core = np.fft.fft(f * tw) if sign > 0 else np.fft.ifft(f * tw) * n
    return core * tw * np.exp(-sign * 2j * np.pi * c * c / n) / np.sqrt(n)


def _sinc_interp(f):
    n = f.size
    y = np.zeros(2 * n - 1, dtype=np.complex128)
    y[::2] = f
    m = np.arange(-(2 * n - 2), 2 * n - 1)
    full = fftconvolve(y, np.sinc(m / 2.0))
    return full[2 * n - 2:4 * n - 3]


def _core(f, a):
    n = f.size
    phi = a * np.pi / 2.0
    g = np.concatenate([np.zeros(n - 1), _sinc_interp(f), np.zeros(n - 1)])
    m = np.arange(-(2 * n - 2), 2 * n - 1)
    chirp = np.exp(-1j * np.pi * np.tan(phi / 2.0) * m * m / (4.0 * n))
    csc = 1.0 / np.sin(phi)
    length = g.size
    q = np.arange(-(length - 1), length)
    conv = fftconvolve(chirp * g, np.exp(1j * np.pi * csc * q * q / (4.0 * n)))
    out = conv[length - 1:2 * length - 1]
    out = chirp * out * np.sqrt(csc / (4.0 * n)) * np.exp(-1j * (1.0 - a) * np.pi / 4.0)
    return out[n - 1:3 * n - 2:2]


def fast_frft_samples(plan: FastDfrftPlan, f: np.ndarray) -> np.ndarray:
    """Apply the plan to samples already on ``plan.grid``."""
    f = np.asarray(f, dtype=np.complex128)
    if f.size != plan.n:
        raise BadPlan(f"expected {plan.n} samples, got {f.size}")
    for op, a in plan.stages:
        if op == "flip":
            f = f[::-1]
        elif op == "dft":
            f = _dft(f, 1 if a > 0 else -1)
        else:
            f = _core(f, a)
    return f


def resample_linear(u: SampledSignal, grid: EvaluationGrid) -> np.ndarray:
    """Linear interpolation onto ``grid``; zero outside ``u``'s span."""
    x = grid.points
    t = u.t
    re = np.interp(x, t, u.samples.real, left=0.0, right=0.0)
    im = np.interp(x, t, u.samples.imag, left=0.0, right=0.0)
    return re + 1j * im


def fast_frft(plan: FastDfrftPlan, u: SampledSignal) -> SampledSignal:
    """Fast transform of ``u`` after linear resampling onto ``plan.grid``."""
    grid = plan.grid
    out = fast_frft_samples(plan, resample_linear(u, grid))
    return SampledSignal(grid.x0, grid.dx, out)


def fast_decrypt_attempt(c: SampledSignal, key: EncryptionKey, plan: FastDfrftPlan,
                         grid: EvaluationGrid | None = None,
                         quad: QuadratureSpec | None = None) -> SampledSignal:
    """Decrypt with the fast transform in place of a summability mean.

    ``plan`` must carry the inverse order ``-alpha``.  The reconstruction
    is resampled linearly onto ``grid`` (default: the matched plaintext
    grid) before the weight is divided out.
    """
    want = -2.0 * key.order.alpha / np.pi
    if abs(plan.order_a - want) > 1e-12:
        raise BadPlan(f"plan order {plan.order_a!r} != -2 alpha / pi = {want!r}")
    grid = grid or support_grid(key.weight, matched_grid(key.order, c.grid))
    v = fast_frft(plan, c)
    on_grid = SampledSignal(grid.x0, grid.dx, resample_linear(v, grid))
    quad = quad or QuadratureSpec(refinement_levels=12)
    return q_omega(on_grid, key.weight, key.offset_m, quad)
