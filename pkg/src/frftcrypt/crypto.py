"""Double encryption by a singular lift followed by a secret-order transform.

Encryption maps a bounded real signal ``u`` to ``(u + M) w`` where ``w``
is integrable but not square integrable, then applies the transform of
order ``alpha``.  Decryption takes a summability mean of the ciphertext
and divides the weight back out.

Near a singularity of ``w`` point samples are meaningless, so when a
:class:`QuadratureSpec` is supplied the weight enters as its average over
each sample cell (computed on the graded mesh).  Encryption and
decryption must use the same quadrature settings.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import FrftOrder, as_order, frft, make_order, matched_grid
from .errors import (
    FrftError, OffsetTooSmall, ParseError, SingularPoint, SpecialAngle, ZeroWeight,
)
from .quadrature import QuadratureSpec, cell_averages, graded_integral
from .signals import EvaluationGrid, SampledSignal
from .summability import SummabilitySpec, phi_mean

KEY_HEADER = "frftkey,v1"
DEFAULT_REFINEMENT = 12


class Family(str, Enum):
    OMEGA1 = "omega1"
    OMEGA2 = "omega2"


@dataclass(frozen=True)
class WeightSpec:
    """Secret weight ``w``.

    ``OMEGA1``: ``sum_i |t - tau_i|^{-1/2}`` on ``[-k, k]``, zero outside.
    ``OMEGA2``: ``sqrt(n)`` on ``1/(n+1) < |t| <= 1/n`` and
    ``1/(n+1)^2`` on ``n < |t| <= n+1``; takes no parameters.
    """

    family: Family = Family.OMEGA1
    k: float | None = None
    taus: tuple = ()

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if family is Family.OMEGA2:
            object.__setattr__(self, "k", None)
            object.__setattr__(self, "taus", ())
            return
        if self.k is None or not self.k > 0 or not np.isfinite(self.k):
            raise ValueError("omega1 needs a positive finite k")
        taus = tuple(float(t) for t in self.taus)
        if not taus:
            raise ValueError("omega1 needs at least one tau")
        if any(abs(t) > self.k for t in taus):
            raise ValueError(f"every tau must lie in [-{self.k}, {self.k}]")
        if len(set(taus)) != len(taus):
            raise ValueError("taus must be pairwise distinct")
        object.__setattr__(self, "k", float(self.k))
        object.__setattr__(self, "taus", taus)

    @property
    def singularities(self) -> tuple:
        return self.taus if self.family is Family.OMEGA1 else (0.0,)

    def __call__(self, t):
        return omega_eval(self, t)


@dataclass(frozen=True)
class EncryptionKey:
    order: FrftOrder
    weight: WeightSpec
    offset_m: float
    multiplier_beta: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "order", as_order(self.order))
        if not self.order.is_generic:
            raise SpecialAngle("the encryption order must be generic")
        if not self.offset_m >= 1 or not np.isfinite(self.offset_m):
            raise ValueError("offset_m must be >= 1")
        object.__setattr__(self, "offset_m", float(self.offset_m))
        if self.multiplier_beta is not None:
            beta = float(self.multiplier_beta)
            if not 0 < beta < np.pi:
                raise ValueError("multiplier_beta must lie in (0, pi)")
            object.__setattr__(self, "multiplier_beta", beta)

    def replace(self, **changes) -> EncryptionKey:
        fields = dict(order=self.order, weight=self.weight, offset_m=self.offset_m,
                      multiplier_beta=self.multiplier_beta)
        fields.update(changes)
        return EncryptionKey(**fields)


@dataclass(frozen=True, eq=False)
class CipherSignal(SampledSignal):
    """Ciphertext samples on the transform-domain grid."""


def omega_eval(w: WeightSpec, t):
    """Evaluate the weight; raises :class:`SingularPoint` on a singularity."""
    t = np.asarray(t, dtype=float)
    if w.family is Family.OMEGA1:
        taus = np.asarray(w.taus)
        d = np.abs(t[..., None] - taus)
        if np.any(d == 0):
            raise SingularPoint("weight evaluated exactly at a tau")
        out = np.where(np.abs(t) <= w.k, (d ** -0.5).sum(axis=-1), 0.0)
    else:
        a = np.abs(t)
        if np.any(a == 0):
            raise SingularPoint("omega2 is singular at 0")
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            inner = np.sqrt(np.floor(1.0 / np.where(a <= 1, a, 1.0)))
            outer = 1.0 / np.ceil(np.where(a > 1, a, 2.0)) ** 2
        out = np.where(a <= 1, inner, outer)
    return out if out.ndim else float(out)


def weight_quad(w: WeightSpec, quad: QuadratureSpec) -> QuadratureSpec:
    return quad.with_singularities(w.singularities)


def weight_samples(w: WeightSpec, grid: EvaluationGrid, quad: QuadratureSpec | None = None) -> np.ndarray:
    """Weight on ``grid``: point values, or cell averages if ``quad`` is given."""
    if quad is None:
        return np.asarray(omega_eval(w, grid.points), dtype=float)
    return cell_averages(lambda t: omega_eval(w, t), grid.x0, grid.dx, grid.count, weight_quad(w, quad))


def support_grid(w: WeightSpec, grid: EvaluationGrid) -> EvaluationGrid:
    """Largest run of ``grid`` inside the support of ``w``."""
    if w.family is Family.OMEGA2:
        return grid
    inside = np.flatnonzero(np.abs(grid.points) <= w.k)
    if inside.size == 0:
        raise ZeroWeight("grid does not meet the support of the weight")
    i0, i1 = int(inside[0]), int(inside[-1])
    return EvaluationGrid(grid.x0 + i0 * grid.dx, grid.dx, i1 - i0 + 1)


def compute_offset(u: SampledSignal) -> float:
    return 1.0 + float(np.max(np.abs(u.samples)))


def p_omega(u: SampledSignal, w: WeightSpec, m: float, quad: QuadratureSpec | None = None) -> SampledSignal:
    """Lift ``u`` to ``(u + m) w``."""
    need = compute_offset(u)
    if m < need * (1 - 1e-15):
        raise OffsetTooSmall(f"offset {m!r} < 1 + max|u| = {need!r}")
    return u.with_samples((u.samples + m) * weight_samples(w, u.grid, quad))


def q_omega(v: SampledSignal, w: WeightSpec, m: float, quad: QuadratureSpec | None = None,
            modulus: bool = True) -> SampledSignal:
    """Undo :func:`p_omega`: ``|v / w| - m`` (or ``v / w - m``).

    The modulus form recovers a real plaintext from a complex
    reconstruction; pass ``modulus=False`` for complex plaintexts.
    """
    ws = weight_samples(w, v.grid, quad)
    if np.any(ws == 0):
        raise ZeroWeight("grid leaves the support of the weight")
    ratio = v.samples / ws
    return v.with_samples((np.abs(ratio) if modulus else ratio) - m)


def encrypt(u: SampledSignal, key: EncryptionKey, grid: EvaluationGrid | None = None,
            quad: QuadratureSpec | None = None) -> CipherSignal:
    """Ciphertext ``F_alpha[(u + M) w]`` on ``grid``.

    ``grid`` defaults to the matched transform grid of ``u.grid``, on
    which :func:`decrypt` inverts the sampled transform exactly.
    """
    quad = quad or QuadratureSpec(refinement_levels=DEFAULT_REFINEMENT)
    grid = grid or matched_grid(key.order, u.grid)
    lifted = p_omega(u, key.weight, key.offset_m, quad)
    plain_rule = QuadratureSpec(quad.rule, extent=quad.extent)
    out = frft(key.order, lifted, grid, plain_rule)
    return CipherSignal(out.t0, out.dt, out.samples)


def decrypt(c: SampledSignal, key: EncryptionKey, spec: SummabilitySpec | None = None,
            grid: EvaluationGrid | None = None, quad: QuadratureSpec | None = None,
            modulus: bool = True) -> SampledSignal:
    """Summability-mean reconstruction followed by :func:`q_omega`.

    ``grid`` defaults to the centred grid matched to the ciphertext grid
    under ``key.order``, cut down to the support of the weight.
    """
    spec = spec or SummabilitySpec()
    quad = quad or QuadratureSpec(refinement_levels=DEFAULT_REFINEMENT)
    grid = grid or support_grid(key.weight, matched_grid(key.order, c.grid))
    plain_rule = QuadratureSpec(quad.rule, extent=quad.extent)
    v = phi_mean(key.order, c, spec, grid, plain_rule)
    return q_omega(v, key.weight, key.offset_m, quad, modulus=modulus)


def random_taus(k: float, n: int, rng: np.random.Generator, min_separation: float = 0.0) -> tuple:
    """``n`` uniform points in ``[-k, k]`` at least ``min_separation`` apart."""
    if n * min_separation > 2 * k:
        raise ValueError("cannot fit that many separated taus in [-k, k]")
    taus = []
    tries = 0
    while len(taus) < n:
        tries += 1
        if tries > 100000:
            raise RuntimeError("rejection sampling for taus did not terminate")
        cand = float(rng.uniform(-k, k))
        if all(abs(cand - t) >= min_separation for t in taus):
            taus.append(cand)
    return tuple(taus)


def omega2_partial_integrals(n_terms: int) -> tuple[float, float]:
    """``(int |w2|, int |w2|^2)`` over ``1/(N+1) < |t| <= N+1``.

    Both are exact finite sums because ``w2`` is piecewise constant.
    """
    n = np.arange(1, n_terms + 1, dtype=float)
    l1 = 2.0 * (np.sum(1.0 / (np.sqrt(n) * (n + 1))) + np.sum(1.0 / (n + 1) ** 2))
    l2 = 2.0 * (np.sum(1.0 / (n + 1)) + np.sum(1.0 / (n + 1) ** 4))
    return float(l1), float(l2)


def omega2_l1_tail_bound(n_terms: int) -> float:
    """Upper bound on the part of ``int |w2|`` not covered by ``n_terms`` terms."""
    return 2.0 * (2.0 / np.sqrt(n_terms) + 1.0 / (n_terms + 1))


def lifted_norms(u_func, w: WeightSpec, a: float, b: float, base: float, levels: int,
                 m: float) -> tuple[float, float]:
    """Graded-mesh values of ``int |u_w|`` and ``int |u_w|^2`` over ``[a, b]``."""
    def lifted(t):
        return np.abs((u_func(t) + m) * omega_eval(w, t))
    sing = w.singularities
    l1 = graded_integral(lifted, a, b, base, sing, levels)
    l2 = graded_integral(lambda t: lifted(t) ** 2, a, b, base, sing, levels)
    return l1, l2


# -- key text -----------------------------------------------------------------

def _fmt(x: float) -> str:
    return "%.17g" % x


def key_to_text(key: EncryptionKey) -> str:
    lines = [KEY_HEADER, f"alpha={_fmt(key.order.alpha)}", f"family={key.weight.family.value}"]
    if key.weight.family is Family.OMEGA1:
        lines.append(f"k={_fmt(key.weight.k)}")
        lines.append("taus=" + ",".join(_fmt(t) for t in key.weight.taus))
    lines.append(f"offset_m={_fmt(key.offset_m)}")
    if key.multiplier_beta is not None:
        lines.append(f"beta={_fmt(key.multiplier_beta)}")
    return "\n".join(lines) + "\n"


def _float(name, text):
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"{name}: not a number: {text!r}") from None
    if not np.isfinite(value):
        raise ParseError(f"{name}: must be finite")
    return value


def key_from_text(text: str) -> EncryptionKey:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or lines[0] != KEY_HEADER:
        raise ParseError(f"missing {KEY_HEADER!r} header")
    fields = {}
    for ln in lines[1:]:
        name, sep, value = ln.partition("=")
        name = name.strip()
        if not sep:
            raise ParseError(f"expected name=value, got {ln!r}")
        if name in fields:
            raise ParseError(f"duplicate field {name!r}")
        if name not in {"alpha", "family", "k", "taus", "offset_m", "beta"}:
            raise ParseError(f"unknown field {name!r}")
        fields[name] = value.strip()
    for required in ("alpha", "family", "offset_m"):
        if required not in fields:
            raise ParseError(f"missing field {required!r}")
    try:
        family = Family(fields["family"])
    except ValueError:
        raise ParseError(f"unknown family {fields['family']!r}") from None
    try:
        if family is Family.OMEGA1:
            if "k" not in fields or "taus" not in fields:
                raise ParseError("omega1 keys need k and taus")
            taus = tuple(_float("taus", s) for s in fields["taus"].split(",") if s.strip())
            weight = WeightSpec(family, _float("k", fields["k"]), taus)
        else:
            if "k" in fields or "taus" in fields:
                raise ParseError("omega2 keys take no k or taus")
            weight = WeightSpec(family)
        beta = _float("beta", fields["beta"]) if "beta" in fields else None
        return EncryptionKey(
            make_order(_float("alpha", fields["alpha"])), weight,
            _float("offset_m", fields["offset_m"]), beta,
        )
    except ParseError:
        raise
    except (ValueError, FrftError) as exc:
        raise ParseError(str(exc)) from exc
