"""Encrypt a rectangle pulse and recover it with Abel and Gauss means.

The plaintext is the indicator of [-1, 1] sampled on 2048 cells of
[-1.1, 1.1]. The key holds the transform angle pi/4, three singular
points of the weight and the offset that keeps the lifted signal away
from zero.

Run with ``python3 demos/double_encryption.py``.
"""

import numpy as np

from frftcrypt import Phi, SummabilitySpec, decrypt, make_order
from frftcrypt.experiments import compare_methods, reconstruction_errors, reference_fixture

fx = reference_fixture()
print("angle      :", fx.key.order.alpha)
print("taus       :", np.round(fx.key.weight.taus, 4))
print("offset m   :", fx.key.offset_m)
print("cipher size:", len(fx.cipher), "samples, spacing", fx.cipher.dt)

# The cipher is the transform of a function that is integrable but not
# square integrable, so the plain inverse integral need not converge.
# A damping factor exp(-2 pi eps |x csc|) restores convergence; the error
# shrinks in proportion to eps until the sampling floor.
rows = compare_methods(fx.cipher, fx.key, fx.plain, fx.quad)
print()
print(f"{'method':>6} {'epsilon':>9} {'max error':>11} {'L1 error':>11} {'seconds':>8}")
for r in rows:
    print(f"{r['method']:>6} {r['epsilon']:>9.0e} {r['max_error']:>11.3e} {r['l1_error']:>11.3e} "
          f"{r['seconds']:>8.3f}")

# A key that is off by 0.005 pi in the angle recovers nothing useful.
wrong = fx.key.replace(order=make_order(0.245 * np.pi))
rec = decrypt(fx.cipher, wrong, SummabilitySpec(Phi.ABEL, 1e-14), fx.plain.grid, fx.quad)
print()
print("wrong angle 0.245 pi, max error:", reconstruction_errors(rec, fx.plain, fx.key.weight.taus)[0])
