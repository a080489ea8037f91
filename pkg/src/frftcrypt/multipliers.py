"""Fractional Fourier multipliers and triple encryption.

``T_m u = F_{-beta}[m * F_beta u]``.  The shipped multiplier is the
fractional Hilbert transform, ``m(w) = -i sgn((pi - beta) w)``, a
``-pi/2`` phase shift of the positive half of the ``beta``-domain and
``+pi/2`` of the negative half.  ``sgn(0) = 0``: a sample sitting at the
origin of the ``beta``-domain is annihilated by both ``m`` and its
inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import frft, inverse_frft, make_order, matched_grid
from .crypto import CipherSignal, EncryptionKey, compute_offset, decrypt, encrypt
from .errors import MissingBeta
from .quadrature import QuadratureSpec
from .signals import EvaluationGrid, SampledSignal
from .summability import SummabilitySpec


class MultiplierKind(str, Enum):
    FRACTIONAL_HILBERT = "fractional_hilbert"


@dataclass(frozen=True)
class MultiplierSpec:
    beta: float
    kind: MultiplierKind = MultiplierKind.FRACTIONAL_HILBERT

    def __post_init__(self):
        object.__setattr__(self, "kind", MultiplierKind(self.kind))
        if not 0 < self.beta < np.pi:
            raise ValueError(f"beta must lie in (0, pi), got {self.beta!r}")
        object.__setattr__(self, "beta", float(self.beta))


def multiplier_eval(spec: MultiplierSpec, omega_prime):
    """``-i sgn((pi - beta) * omega')``."""
    w = np.asarray(omega_prime, dtype=float)
    out = np.asarray(-1j * np.sign((np.pi - spec.beta) * w))
    return out if out.ndim else complex(out)


def inverse_multiplier_eval(spec: MultiplierSpec, omega_prime):
    """Pointwise ``1/m`` where ``m != 0`` and ``0`` where ``m == 0``."""
    out = np.conj(multiplier_eval(spec, omega_prime))
    return out if np.ndim(out) else complex(out)


def apply_multiplier(spec: MultiplierSpec, u: SampledSignal, grid: EvaluationGrid | None = None,
                     quad: QuadratureSpec | None = None, inverse: bool = False) -> SampledSignal:
    """``T_m u`` (or ``T_m^{-1} u``) returned on ``u``'s grid.

    ``grid`` is the intermediate ``beta``-domain grid; by default the
    matched grid, which makes ``T^{-1} T`` exact off the zero bin.
    """
    order = make_order(spec.beta)
    grid = grid or matched_grid(order, u.grid)
    U = frft(order, u, grid, quad)
    m = (inverse_multiplier_eval if inverse else multiplier_eval)(spec, U.t)
    return inverse_frft(order, U.with_samples(m * U.samples), u.grid, quad)


def _beta(key: EncryptionKey) -> MultiplierSpec:
    if key.multiplier_beta is None:
        raise MissingBeta("key has no multiplier order beta")
    return MultiplierSpec(key.multiplier_beta)


def triple_offset(u: SampledSignal, beta: float) -> float:
    """Offset ``M`` for the multiplied plaintext ``T_beta u``."""
    return compute_offset(apply_multiplier(MultiplierSpec(beta), u))


def triple_encrypt(u: SampledSignal, key: EncryptionKey, grid: EvaluationGrid | None = None,
                   quad: QuadratureSpec | None = None) -> CipherSignal:
    """``F_alpha[P_w(T_beta u)]``."""
    return encrypt(apply_multiplier(_beta(key), u), key, grid, quad)


def triple_decrypt(c: SampledSignal, key: EncryptionKey, spec: SummabilitySpec | None = None,
                   grid: EvaluationGrid | None = None, quad: QuadratureSpec | None = None) -> SampledSignal:
    """``T_beta^{-1}(Q_w M_eps c)``.

    The weight is divided out without taking the modulus because the
    multiplied plaintext is complex in general.
    """
    mspec = _beta(key)
    inner = decrypt(c, key, spec, grid, quad, modulus=False)
    return apply_multiplier(mspec, inner, inverse=True)
