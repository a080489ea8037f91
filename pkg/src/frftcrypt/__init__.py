"""Fractional Fourier transforms, summability means and singular-weight encryption."""

from .core import FrftOrder, OrderKind, discretize, frft, inverse_frft, kernel, make_order, matched_grid
from .crypto import (
    CipherSignal, EncryptionKey, Family, WeightSpec, compute_offset, decrypt, encrypt,
    key_from_text, key_to_text, omega_eval, p_omega, q_omega,
)
from .errors import (
    BadPlan, FrftError, GridMismatch, MissingBeta, NearSingularOrder, OffsetTooSmall, ParseError,
    SingularPoint, SpecialAngle, ZeroWeight,
)
from .fast import FastDfrftPlan, fast_decrypt_attempt, fast_frft
from .multipliers import (
    MultiplierKind, MultiplierSpec, apply_multiplier, multiplier_eval, triple_decrypt, triple_encrypt,
)
from .quadrature import QuadratureSpec, Rule
from .signals import EvaluationGrid, SampledSignal
from .summability import Phi, PhiWeight, SummabilitySpec, gauss_kernel, phi_mean, poisson_kernel, weight_eval

__version__ = "0.1.0"
