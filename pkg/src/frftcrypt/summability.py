"""Abel and Gauss summability means of the fractional Fourier integral.

A mean damps the transform-domain data by a weight before inverting:

    M(t) = integral U(x) K_{-alpha}(x, t) w(x) dx,

with ``w(x) = exp(-2 pi eps |csc a| |x|)`` (Abel) or
``w(x) = exp(-4 pi^2 eps x^2 csc^2 a)`` (Gauss).  Their ordinary Fourier
transforms are the Poisson and Gauss kernels, which act as approximate
identities as ``eps -> 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import FrftOrder, as_order, inverse_frft
from .errors import SpecialAngle
from .quadrature import QuadratureSpec
from .signals import EvaluationGrid, SampledSignal

EPSILON_SWEEP = (1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12, 1e-14)


class Phi(str, Enum):
    ABEL = "abel"
    GAUSS = "gauss"


@dataclass(frozen=True)
class SummabilitySpec:
    phi: Phi = Phi.ABEL
    epsilon: float = 1e-14

    def __post_init__(self):
        object.__setattr__(self, "phi", Phi(self.phi))
        eps = float(self.epsilon)
        if not np.isfinite(eps) or eps < 1e-300:
            raise ValueError(f"epsilon must be finite and >= 1e-300, got {self.epsilon!r}")
        object.__setattr__(self, "epsilon", eps)


@dataclass(frozen=True)
class PhiWeight:
    spec: SummabilitySpec
    order: FrftOrder

    def __call__(self, x):
        return weight_eval(self, x)


def weight_eval(w: PhiWeight, x):
    """Evaluate the damping weight at ``x`` (scalar or array)."""
    order = as_order(w.order)
    if not order.is_generic:
        raise SpecialAngle("summability weights need a generic order")
    x = np.asarray(x, dtype=float)
    eps = w.spec.epsilon
    csc = abs(order.csc_alpha)
    if w.spec.phi is Phi.ABEL:
        out = np.exp(-2.0 * np.pi * eps * csc * np.abs(x))
    else:
        out = np.exp(-4.0 * np.pi ** 2 * eps * (x * csc) ** 2)
    return out if out.ndim else float(out)


def phi_mean(order, U: SampledSignal, spec: SummabilitySpec, grid: EvaluationGrid,
             quad: QuadratureSpec | None = None) -> SampledSignal:
    """Summability mean of transform-domain data ``U`` evaluated on ``grid``.

    Equals ``inverse_frft(order, U * w)``.
    """
    order = as_order(order)
    w = weight_eval(PhiWeight(spec, order), U.t)
    return inverse_frft(order, U.with_samples(U.samples * w), grid, quad)


def poisson_kernel(epsilon: float, x):
    """``(1/pi) eps / (eps^2 + x^2)``."""
    x = np.asarray(x, dtype=float)
    out = epsilon / (np.pi * (epsilon * epsilon + x * x))
    return out if out.ndim else float(out)


def gauss_kernel(epsilon: float, x):
    """``(4 pi eps)^{-1/2} exp(-x^2 / (4 eps))``."""
    x = np.asarray(x, dtype=float)
    out = np.exp(-x * x / (4.0 * epsilon)) / np.sqrt(4.0 * np.pi * epsilon)
    return out if out.ndim else float(out)
