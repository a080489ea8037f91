"""Text formats for sampled signals and keys.

Signal files::

    frftsig,v1,<t0>,<dt>,<count>
    <t>,<re>,<im>
    ...

All numbers are written with 17 significant digits so that a write/read
cycle reproduces every double exactly.
"""

from __future__ import annotations

import os

import numpy as np

from .crypto import EncryptionKey, key_from_text, key_to_text
from .errors import ParseError
from .signals import SampledSignal

SIGNAL_HEADER = "frftsig,v1"
T_TOL = 1e-12


def _fmt(x: float) -> str:
    return "%.17g" % x


def signal_to_text(u: SampledSignal) -> str:
    lines = [f"{SIGNAL_HEADER},{_fmt(u.t0)},{_fmt(u.dt)},{len(u)}"]
    for t, z in zip(u.t, u.samples):
        lines.append(f"{_fmt(t)},{_fmt(z.real)},{_fmt(z.imag)}")
    return "\n".join(lines) + "\n"


def _number(text: str, what: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"{what}: not a number: {text!r}") from None
    if not np.isfinite(value):
        raise ParseError(f"{what}: must be finite")
    return value


def signal_from_text(text: str) -> SampledSignal:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty signal file")
    head = lines[0].split(",")
    if len(head) != 5 or ",".join(head[:2]) != SIGNAL_HEADER:
        raise ParseError(f"expected header '{SIGNAL_HEADER},<t0>,<dt>,<count>'")
    t0 = _number(head[2], "t0")
    dt = _number(head[3], "dt")
    try:
        count = int(head[4])
    except ValueError:
        raise ParseError(f"count: not an integer: {head[4]!r}") from None
    if dt <= 0 or count < 1:
        raise ParseError("header needs dt > 0 and count >= 1")
    rows = lines[1:]
    if len(rows) != count:
        raise ParseError(f"header declares {count} rows, found {len(rows)}")
    data = np.empty((count, 3))
    for i, row in enumerate(rows):
        cells = row.split(",")
        if len(cells) != 3:
            raise ParseError(f"row {i + 1}: expected t,re,im")
        data[i] = [_number(c, f"row {i + 1}") for c in cells]
    expected = t0 + np.arange(count) * dt
    bad = np.abs(data[:, 0] - expected) > T_TOL * np.maximum(1.0, np.abs(expected))
    if np.any(bad):
        i = int(np.argmax(bad))
        raise ParseError(f"row {i + 1}: t={data[i, 0]!r} is off the grid (expected {expected[i]!r})")
    return SampledSignal(t0, dt, data[:, 1] + 1j * data[:, 2])


def _read(path) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {os.fspath(path)!r}: {exc}") from exc


def _write(path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def read_signal(path) -> SampledSignal:
    return signal_from_text(_read(path))


def write_signal(path, u: SampledSignal) -> None:
    _write(path, signal_to_text(u))


def read_key(path) -> EncryptionKey:
    return key_from_text(_read(path))


def write_key(path, key: EncryptionKey) -> None:
    _write(path, key_to_text(key))
