"""Command-line front end.

Exit codes: 0 success, 2 unreadable or malformed input, 3 numeric
precondition failure (near-singular order, offset too small, ...).
Output files are only written once the whole computation has succeeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

import numpy as np

from .core import frft, make_order, matched_grid
from .crypto import (
    EncryptionKey, Family, WeightSpec, compute_offset, decrypt, encrypt, random_taus,
)
from .errors import FrftError, ParseError
from .experiments import compare_methods, reconstruction_errors
from .fileio import read_key, read_signal, write_key, write_signal
from .multipliers import triple_decrypt, triple_encrypt, triple_offset
from .quadrature import QuadratureSpec
from .signals import EvaluationGrid
from .summability import EPSILON_SWEEP, Phi, SummabilitySpec

EXIT_OK, EXIT_PARSE, EXIT_NUMERIC = 0, 2, 3


def parse_grid(text: str | None) -> EvaluationGrid | None:
    """``"x0,dx,count"`` -> :class:`EvaluationGrid`."""
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"--grid expects x0,dx,count, got {text!r}")
    try:
        x0, dx, count = float(parts[0]), float(parts[1]), int(parts[2])
        return EvaluationGrid(x0, dx, count)
    except ValueError as exc:
        raise ParseError(f"--grid {text!r}: {exc}") from None


def _quad(args) -> QuadratureSpec:
    try:
        return QuadratureSpec(refinement_levels=args.refine, cells_per_level=args.cells_per_level,
                              extent=getattr(args, "extent", None))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _report(u, truth, key) -> str:
    mx, l1 = reconstruction_errors(u, truth, key.weight.singularities)
    return f"max_error={mx:.6e} l1_error={l1:.6e}"


def cmd_frft(args) -> int:
    u = read_signal(args.inp)
    grid = parse_grid(args.grid)
    quad = _quad(args)
    order = make_order(args.alpha)
    out = frft(order, u, grid or matched_grid(order, u.grid), quad)
    write_signal(args.out, out)
    return EXIT_OK


def cmd_keygen(args) -> int:
    plain = read_signal(args.plaintext)
    order = make_order(args.alpha)
    if args.family == Family.OMEGA1.value:
        rng = np.random.default_rng(args.seed)
        taus = random_taus(args.k, args.ntaus, rng, min_separation=2 * plain.dt)
        weight = WeightSpec(Family.OMEGA1, args.k, taus)
    else:
        weight = WeightSpec(Family.OMEGA2)
    offset = compute_offset(plain) if args.beta is None else triple_offset(plain, args.beta)
    write_key(args.out, EncryptionKey(order, weight, offset, args.beta))
    return EXIT_OK


def cmd_encrypt(args) -> int:
    key = read_key(args.key)
    u = read_signal(args.inp)
    grid, quad = parse_grid(args.grid), _quad(args)
    if key.multiplier_beta is None:
        c = encrypt(u, key, grid, quad)
    else:
        c = triple_encrypt(u, key, grid, quad)
    write_signal(args.out, c)
    return EXIT_OK


def cmd_decrypt(args) -> int:
    key = read_key(args.key)
    c = read_signal(args.inp)
    truth = read_signal(args.truth) if args.truth else None
    grid, quad = parse_grid(args.grid), _quad(args)
    if grid is None and truth is not None:
        grid = truth.grid
    spec = SummabilitySpec(Phi(args.phi), args.epsilon)
    if key.multiplier_beta is None:
        u = decrypt(c, key, spec, grid, quad)
    else:
        u = triple_decrypt(c, key, spec, grid, quad)
    write_signal(args.out, u)
    if truth is not None:
        print(_report(u, truth, key))
    return EXIT_OK


def cmd_compare(args) -> int:
    key = read_key(args.key)
    c = read_signal(args.cipher)
    truth = read_signal(args.truth)
    rows = compare_methods(c, key, truth, _quad(args), EPSILON_SWEEP, args.fast_n,
                           timing=not args.no_timing)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["method", "epsilon", "max_error", "l1_error", "seconds"])
    for r in rows:
        seconds = "" if r["seconds"] is None else "%.6g" % r["seconds"]
        eps = "" if np.isnan(r["epsilon"]) else repr(r["epsilon"])
        writer.writerow([r["method"], eps, repr(r["max_error"]), repr(r["l1_error"]), seconds])
    with open(args.out_csv, "w", encoding="utf-8", newline="") as fh:
        fh.write(buf.getvalue())
    return EXIT_OK


def _add_quad(p, refine_default=12):
    p.add_argument("--refine", type=int, default=refine_default, metavar="L",
                   help="dyadic refinement levels around each singularity")
    p.add_argument("--cells-per-level", type=int, default=32, help="cells per refinement level")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frftcrypt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frft", help="transform a signal file")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--grid", help="output grid x0,dx,count (default: matched grid)")
    p.add_argument("--extent", type=float, help="truncation half-width")
    _add_quad(p, 0)
    p.set_defaults(func=cmd_frft)

    p = sub.add_parser("keygen", help="generate a key file")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--family", choices=[f.value for f in Family], default=Family.OMEGA1.value)
    p.add_argument("--k", type=float, default=1.1)
    p.add_argument("--ntaus", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--beta", type=float)
    p.add_argument("--plaintext", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a signal file")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--grid")
    _add_quad(p)
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a cipher file")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--epsilon", type=float, default=1e-14)
    p.add_argument("--phi", choices=[f.value for f in Phi], default=Phi.ABEL.value)
    p.add_argument("--grid")
    p.add_argument("--truth", help="plaintext file; prints the reconstruction error")
    _add_quad(p)
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("compare", help="error table for abel, gauss and fast decryption")
    p.add_argument("--key", required=True)
    p.add_argument("--cipher", required=True)
    p.add_argument("--truth", required=True)
    p.add_argument("--out-csv", required=True)
    p.add_argument("--fast-n", type=int, default=1024)
    p.add_argument("--no-timing", action="store_true", help="leave the seconds column empty")
    _add_quad(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FrftError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
