"""Reference experiment: rectangle plaintext, omega1 weight, alpha = pi/4.

Also hosts the error metric shared by the CLI and the acceptance suite:
the maximum absolute error over grid points at least ``5 dt`` from every
singularity, and the discrete L1 error over the same points.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from scipy.special import fresnel

from .core import frft, make_order
from .crypto import (
    CipherSignal, EncryptionKey, Family, WeightSpec, compute_offset, decrypt, encrypt, random_taus,
)
from .fast import FastDfrftPlan, fast_decrypt_attempt
from .quadrature import QuadratureSpec
from .signals import EvaluationGrid, SampledSignal
from .summability import EPSILON_SWEEP, Phi, SummabilitySpec

EXCLUSION_CELLS = 5


def rect(t):
    return (np.abs(np.asarray(t)) <= 1.0).astype(float)


def error_mask(grid: EvaluationGrid, singularities, cells: int = EXCLUSION_CELLS) -> np.ndarray:
    t = grid.points
    if len(singularities) == 0:
        return np.ones(t.size, dtype=bool)
    d = np.min(np.abs(t[:, None] - np.asarray(singularities)[None, :]), axis=1)
    return d >= cells * grid.dx


def reconstruction_errors(recovered: SampledSignal, truth: SampledSignal, singularities) -> tuple[float, float]:
    """``(max error, L1 error)`` away from the singular cells."""
    if len(recovered) != len(truth):
        raise ValueError("recovered and truth signals have different lengths")
    mask = error_mask(truth.grid, singularities)
    diff = np.abs(recovered.samples - truth.samples)[mask]
    return float(diff.max()), float(diff.sum() * truth.dt)


# -- singular chirp: u(t) = exp(-i pi t^2) |t|^{-1/2} on [-1, 1] ---------------

def chirp_part(t):
    """Smooth factor ``exp(-i pi t^2) rect(t)``; the singular factor is separate."""
    t = np.asarray(t, dtype=float)
    return np.exp(-1j * np.pi * t * t) * rect(t)


def inverse_sqrt(t):
    return np.abs(np.asarray(t, dtype=float)) ** -0.5


def singular_chirp_closed_form(x):
    """Order ``pi/4`` transform of the singular chirp, ``x != 0``.

    ``2^{3/4} A e^{i pi x^2} C(sqrt(2^{5/2} |x|)) / sqrt|x|`` with ``C`` the
    Fresnel cosine integral.
    """
    x = np.asarray(x, dtype=float)
    a = make_order(np.pi / 4).a_alpha
    _, c = fresnel(np.sqrt(2 ** 2.5 * np.abs(x)))
    return 2 ** 0.75 * a * np.exp(1j * np.pi * x * x) * c / np.sqrt(np.abs(x))


def singular_chirp_transform(grid: EvaluationGrid, n: int = 4000, levels: int = 36,
                             cells_per_level: int = 64) -> SampledSignal:
    """Graded-mesh quadrature of the order ``pi/4`` transform on ``grid``.

    ``n`` (even) cells tile ``[-1, 1]`` so that the singularity sits on a
    cell edge.
    """
    u = SampledSignal.from_function(chirp_part, EvaluationGrid.covering(-1.0, 1.0, n))
    quad = QuadratureSpec(singularities=(0.0,), refinement_levels=levels,
                          cells_per_level=cells_per_level)
    return frft(make_order(np.pi / 4), u, grid, quad, weight=inverse_sqrt)


@dataclass(frozen=True)
class ReferenceExperiment:
    plain: SampledSignal
    key: EncryptionKey
    quad: QuadratureSpec
    cipher: CipherSignal


def reference_fixture(n: int = 2048, k: float = 1.1, ntaus: int = 3, seed: int = 2024,
                     alpha: float = np.pi / 4, levels: int = 12) -> ReferenceExperiment:
    """Encrypted rectangle on ``n`` cells tiling ``[-k, k]``."""
    grid = EvaluationGrid.covering(-k, k, n)
    plain = SampledSignal.from_function(rect, grid)
    taus = random_taus(k, ntaus, np.random.default_rng(seed), min_separation=2 * grid.dx)
    key = EncryptionKey(make_order(alpha), WeightSpec(Family.OMEGA1, k, taus), compute_offset(plain))
    quad = QuadratureSpec(refinement_levels=levels)
    return ReferenceExperiment(plain, key, quad, encrypt(plain, key, quad=quad))


def compare_methods(cipher: SampledSignal, key: EncryptionKey, truth: SampledSignal,
                    quad: QuadratureSpec, epsilons=EPSILON_SWEEP, fast_n: int = 1024,
                    timing: bool = True) -> list[dict]:
    """Error table for Abel and Gauss means over ``epsilons`` plus the fast path."""
    rows = []
    sing = key.weight.singularities
    for phi in (Phi.ABEL, Phi.GAUSS):
        for eps in epsilons:
            start = time.perf_counter()
            rec = decrypt(cipher, key, SummabilitySpec(phi, eps), truth.grid, quad)
            elapsed = time.perf_counter() - start
            mx, l1 = reconstruction_errors(rec, truth, sing)
            rows.append(dict(method=phi.value, epsilon=eps, max_error=mx, l1_error=l1,
                             seconds=elapsed if timing else None))
    start = time.perf_counter()
    plan = FastDfrftPlan.for_angle(fast_n, -key.order.alpha)
    rec = fast_decrypt_attempt(cipher, key, plan, truth.grid, quad)
    elapsed = time.perf_counter() - start
    mx, l1 = reconstruction_errors(rec, truth, sing)
    rows.append(dict(method="fast", epsilon=float("nan"), max_error=mx, l1_error=l1,
                     seconds=elapsed if timing else None))
    return rows
