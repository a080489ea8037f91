import time

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from frftcrypt import (
    BadPlan, EvaluationGrid, FastDfrftPlan, SampledSignal, decrypt, fast_decrypt_attempt, fast_frft, frft,
)
from frftcrypt.core import matched_grid, make_order
from frftcrypt.experiments import (
    reconstruction_errors, reference_fixture, singular_chirp_closed_form,
)
from frftcrypt.fast import _reduce, fast_frft_samples


def shifted_gaussian(t):
    return np.exp(-np.pi * (t - 0.5) ** 2) * np.exp(1j * np.pi * 0.3 * t)


def core_on_plan(plan, f, alpha):
    u = SampledSignal(plan.grid.x0, plan.grid.dx, f)
    return frft(alpha, u, plan.grid).samples


@pytest.fixture(scope="module")
def fx():
    return reference_fixture()


class TestPlan:
    @pytest.mark.parametrize("n", [0, 1, 3, 1000, 2.5])
    def test_bad_sizes(self, n):
        with pytest.raises(BadPlan):
            FastDfrftPlan(n, 0.5)

    def test_grid(self):
        p = FastDfrftPlan(1024, 0.5)
        assert p.width == 32.0
        assert p.grid.dx == pytest.approx(1 / 32)
        assert p.grid.x0 == pytest.approx(-p.grid.last)

    @given(st.floats(-8, 8))
    def test_stage_orders_sum(self, a):
        stages = _reduce(a)
        total = sum(order for _, order in stages)
        assert abs((total - a + 2) % 4 - 2) < 1e-12
        assert all(0.5 <= order <= 1.5 for op, order in stages if op == "core")

    def test_wrong_length(self):
        with pytest.raises(BadPlan):
            fast_frft_samples(FastDfrftPlan(64, 0.5), np.zeros(32))


class TestAccuracy:
    def test_gaussian_quarter(self):
        plan = FastDfrftPlan.for_angle(1024, np.pi / 4)
        f = shifted_gaussian(plan.grid.points)
        ref = core_on_plan(plan, f, np.pi / 4)
        assert np.max(np.abs(fast_frft_samples(plan, f) - ref)) <= 1e-3

    def test_fourier(self):
        plan = FastDfrftPlan.for_angle(1024, np.pi / 2)
        t = plan.grid.points
        f = shifted_gaussian(t)
        direct = np.exp(-2j * np.pi * np.outer(t, t)) @ f / np.sqrt(plan.n)
        assert np.max(np.abs(fast_frft_samples(plan, f) - direct)) <= 1e-10

    @pytest.mark.parametrize("alpha", [np.pi / 4, 1.3, 2.5, -np.pi / 4, 4.0])
    def test_converges(self, alpha):
        errs = []
        for n in (256, 1024):
            plan = FastDfrftPlan.for_angle(n, alpha)
            f = shifted_gaussian(plan.grid.points)
            errs.append(np.max(np.abs(fast_frft_samples(plan, f) - core_on_plan(plan, f, alpha))))
        assert errs[1] <= max(errs[0] / 2, 1e-12)

    def test_whole_orders(self):
        plan = FastDfrftPlan(64, 2.0)
        f = shifted_gaussian(plan.grid.points)
        np.testing.assert_allclose(fast_frft_samples(plan, f), f[::-1])
        np.testing.assert_allclose(fast_frft_samples(FastDfrftPlan(64, 4.0), f), f)

    def test_smooth_pipeline_without_lift(self):
        order = make_order(np.pi / 4)
        u = SampledSignal.from_function(shifted_gaussian, EvaluationGrid.centered(1 / 64, 2048))
        c = frft(order, u, matched_grid(order, u.grid))
        back = fast_frft(FastDfrftPlan.for_angle(1024, -np.pi / 4), c)
        assert np.max(np.abs(back.samples - shifted_gaussian(back.t))) <= 1e-3


class TestFailure:
    def test_singular_chirp_loses_spike(self):
        plan = FastDfrftPlan.for_angle(1024, -np.pi / 4)
        U = singular_chirp_closed_form(plan.grid.points)
        back = fast_frft_samples(plan, U)
        t = plan.grid.points
        near = np.abs(t) < 0.1
        truth = np.exp(-1j * np.pi * t[near] ** 2) / np.sqrt(np.abs(t[near]))
        assert np.max(np.abs(back[near] - truth)) >= 1

    def test_reference_experiment(self, fx):
        abel = reconstruction_errors(decrypt(fx.cipher, fx.key, grid=fx.plain.grid, quad=fx.quad),
                                     fx.plain, fx.key.weight.taus)[0]
        errs = []
        for n in (512, 1024, 2048):
            plan = FastDfrftPlan.for_angle(n, -fx.key.order.alpha)
            rec = fast_decrypt_attempt(fx.cipher, fx.key, plan, fx.plain.grid, fx.quad)
            errs.append(reconstruction_errors(rec, fx.plain, fx.key.weight.taus)[0])
        assert min(errs) >= 10 * abel
        # doubling n buys (essentially) nothing
        assert all(b >= 0.9 * a for a, b in zip(errs, errs[1:]))

    def test_plan_order_checked(self, fx):
        with pytest.raises(BadPlan):
            fast_decrypt_attempt(fx.cipher, fx.key, FastDfrftPlan.for_angle(256, fx.key.order.alpha))

    def test_default_grid(self, fx):
        plan = FastDfrftPlan.for_angle(256, -fx.key.order.alpha)
        rec = fast_decrypt_attempt(fx.cipher, fx.key, plan, quad=fx.quad)
        assert rec.grid == fx.plain.grid


def _best_time(fn, repeats=5):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def test_complexity_trend():
    alpha = np.pi / 4
    fast_t, core_t = [], []
    for n in (512, 2048):
        plan = FastDfrftPlan.for_angle(n, alpha)
        f = shifted_gaussian(plan.grid.points)
        fast_t.append(_best_time(lambda: fast_frft_samples(plan, f)))
        core_t.append(_best_time(lambda: core_on_plan(plan, f, alpha), repeats=2))
    # 4x the samples: n log n predicts ~4.9x, n^2 predicts 16x
    assert fast_t[1] / fast_t[0] < 10
    assert core_t[1] / core_t[0] > 8
