"""Why a fast discrete FRFT cannot decrypt.

The fast algorithm samples its input at the Nyquist rate of a band
limited signal and reaches O(n log n) by chirp convolution. The cipher
decays only like 1/sqrt|x| and is truncated to a finite window, so the
mass in its tails is lost and the lifted signal's spikes at the
singular points cannot be rebuilt. More samples do not help.

Run with ``python3 demos/fast_path_failure.py``.
"""

import numpy as np

from frftcrypt import (
    EvaluationGrid, FastDfrftPlan, SampledSignal, decrypt, fast_decrypt_attempt, fast_frft, frft,
    make_order, matched_grid,
)
from frftcrypt.experiments import reconstruction_errors, reference_fixture

fx = reference_fixture()
sing = fx.key.weight.taus
abel = reconstruction_errors(decrypt(fx.cipher, fx.key, grid=fx.plain.grid, quad=fx.quad), fx.plain, sing)[0]
print(f"Abel mean, eps=1e-14 : max error {abel:.2e}")
for n in (256, 512, 1024, 2048, 4096):
    plan = FastDfrftPlan.for_angle(n, -fx.key.order.alpha)
    rec = fast_decrypt_attempt(fx.cipher, fx.key, plan, fx.plain.grid, fx.quad)
    print(f"fast DFRFT, n={n:>5}   : max error {reconstruction_errors(rec, fx.plain, sing)[0]:.3f}")

# The same fast path is accurate on smooth, rapidly decaying input.
order = make_order(np.pi / 4)
u = SampledSignal.from_function(lambda t: np.exp(-np.pi * t * t), EvaluationGrid.centered(1 / 64, 2048))
c = frft(order, u, matched_grid(order, u.grid))
back = fast_frft(FastDfrftPlan.for_angle(1024, -np.pi / 4), c)
print()
print(f"smooth gaussian round trip with the fast path: max error "
      f"{np.max(np.abs(back.samples - np.exp(-np.pi * back.t ** 2))):.2e}")
