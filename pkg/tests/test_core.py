import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from frftcrypt import (
    EvaluationGrid, GridMismatch, NearSingularOrder, OrderKind, QuadratureSpec, SampledSignal,
    SpecialAngle, frft, inverse_frft, kernel, make_order, matched_grid,
)
from frftcrypt.experiments import rect

from conftest import gaussian

A_QUARTER = 2 ** 0.25 * np.exp(-1j * np.pi / 8)

generic_alpha = st.floats(-20, 20).filter(
    lambda a: abs(np.sin(a)) > 1e-3
)


def rect_signal(n=2000):
    return SampledSignal.from_function(rect, EvaluationGrid.covering(-1, 1, n))


class TestMakeOrder:
    def test_quarter_turn(self):
        o = make_order(np.pi / 2)
        assert o.kind is OrderKind.GENERIC
        assert abs(o.cot_alpha) < 1e-15
        assert o.csc_alpha == pytest.approx(1.0, abs=1e-15)
        assert abs(o.a_alpha - 1) < 1e-15

    @pytest.mark.parametrize("alpha", [0.0, 2 * np.pi, -4 * np.pi, 2 * np.pi + 5e-10])
    def test_identity(self, alpha):
        assert make_order(alpha).kind is OrderKind.IDENTITY

    @pytest.mark.parametrize("alpha", [np.pi, -np.pi, 3 * np.pi - 5e-10])
    def test_reflection(self, alpha):
        assert make_order(alpha).kind is OrderKind.REFLECTION

    def test_eighth_turn_amplitude(self):
        a = make_order(np.pi / 4).a_alpha
        assert abs(a - A_QUARTER) < 1e-15
        assert abs(a - (1.098684 - 0.455090j)) < 1e-6

    @pytest.mark.parametrize("alpha", [np.pi + 1e-8, 1e-7, 2 * np.pi - 3e-7])
    def test_near_singular_rejected(self, alpha):
        with pytest.raises(NearSingularOrder):
            make_order(alpha)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            make_order(np.nan)

    @given(generic_alpha)
    def test_amplitude_modulus(self, alpha):
        o = make_order(alpha)
        assert abs(abs(o.a_alpha) ** 2 - abs(o.csc_alpha)) <= 1e-12 * abs(o.csc_alpha)
        assert o.a_alpha.real > 0


class TestKernel:
    def test_origin(self):
        assert abs(kernel(make_order(np.pi / 4), 0.0, 0.0) - A_QUARTER) < 1e-15

    @given(st.floats(-5, 5), st.floats(-5, 5))
    def test_fourier_kernel(self, x, t):
        assert abs(kernel(make_order(np.pi / 2), x, t) - np.exp(-2j * np.pi * x * t)) < 1e-12

    @given(generic_alpha, st.floats(-5, 5), st.floats(-5, 5))
    def test_modulus(self, alpha, x, t):
        o = make_order(alpha)
        assert abs(abs(kernel(o, x, t)) - abs(o.a_alpha)) < 1e-12 * abs(o.a_alpha)

    @given(generic_alpha, st.floats(-5, 5), st.floats(-5, 5))
    def test_product_with_negated_order(self, alpha, x, t):
        o = make_order(alpha)
        prod = kernel(o, x, t) * kernel(make_order(-alpha), x, t)
        assert abs(abs(prod) - abs(o.a_alpha) ** 2) < 1e-10 * abs(o.a_alpha) ** 2

    def test_special_angle(self):
        with pytest.raises(SpecialAngle):
            kernel(make_order(0.0), 0.0, 0.0)

    def test_broadcasts(self):
        k = kernel(make_order(1.0), np.zeros((3, 1)), np.zeros(4))
        assert k.shape == (3, 4)


class TestFrft:
    def test_fourier_of_rect_at_zero(self):
        out = frft(np.pi / 2, rect_signal(), EvaluationGrid(0.0, 1.0, 1))
        assert out.samples[0] == pytest.approx(2.0, abs=1e-12)

    def test_fourier_of_rect_sinc(self):
        grid = EvaluationGrid(0.1, 0.3, 10)
        out = frft(np.pi / 2, rect_signal(20000), grid)
        x = grid.points
        assert np.max(np.abs(out.samples - 2 * np.sinc(2 * x))) < 1e-4

    def test_identity_returns_input(self, gauss_signal):
        out = frft(2 * np.pi, gauss_signal, gauss_signal.grid)
        np.testing.assert_array_equal(out.samples, gauss_signal.samples)

    def test_reflection(self):
        u = SampledSignal.from_function(lambda t: t + 1j * t ** 2, EvaluationGrid(-2, 0.5, 9))
        out = frft(np.pi, u, u.grid)
        np.testing.assert_allclose(out.samples, u.samples[::-1], atol=1e-15)

    def test_special_angle_grid_mismatch(self, gauss_signal):
        with pytest.raises(GridMismatch):
            frft(0.0, gauss_signal, EvaluationGrid(0.0, 1.0, 100))

    def test_gaussian_is_eigenfunction(self, gauss_signal):
        for alpha in (np.pi / 6, np.pi / 4, 1.0, 2.5):
            grid = EvaluationGrid.centered(0.1, 61)
            out = frft(alpha, gauss_signal, grid)
            assert np.max(np.abs(out.samples - gaussian(grid.points))) < 1e-10

    def test_inverse_round_trip(self, gauss_signal):
        order = make_order(np.pi / 4)
        U = frft(order, gauss_signal, matched_grid(order, gauss_signal.grid))
        back = inverse_frft(order, U, gauss_signal.grid)
        sel = np.abs(gauss_signal.t) <= 3
        assert np.max(np.abs(back.samples - gauss_signal.samples)[sel]) <= 1e-6

    def test_inverse_is_negated_order(self, gauss_signal):
        grid = EvaluationGrid.centered(0.07, 33)
        a = inverse_frft(np.pi / 2, gauss_signal, grid)
        b = frft(-np.pi / 2, gauss_signal, grid)
        np.testing.assert_array_equal(a.samples, b.samples)

    @pytest.mark.parametrize("alpha", [np.pi / 6, np.pi / 4, np.pi / 3])
    def test_unitarity(self, gauss_signal, alpha):
        order = make_order(alpha)
        grid = matched_grid(order, gauss_signal.grid)
        U = frft(order, gauss_signal, grid)
        e_in = np.sum(np.abs(gauss_signal.samples) ** 2) * gauss_signal.dt
        e_out = np.sum(np.abs(U.samples) ** 2) * U.dt
        assert abs(e_out / e_in - 1) <= 1e-6

    def test_additivity(self, gauss_signal):
        u = gauss_signal.with_samples(gauss_signal.samples * np.exp(2j * np.pi * 0.7 * gauss_signal.t))
        grid = EvaluationGrid.centered(0.05, 121)
        half = frft(np.pi / 6, u, matched_grid(make_order(np.pi / 6), u.grid))
        twice = frft(np.pi / 6, half, grid)
        once = frft(np.pi / 3, u, grid)
        assert np.max(np.abs(twice.samples - once.samples)) <= 1e-4

    def test_fourier_specialization(self, gauss_signal):
        grid = EvaluationGrid.centered(0.1, 41)
        out = frft(np.pi / 2, gauss_signal, grid)
        direct = np.exp(-2j * np.pi * np.outer(grid.points, gauss_signal.t)) @ gauss_signal.samples
        assert np.max(np.abs(out.samples - direct * gauss_signal.dt)) <= 1e-12

    def test_split_domain(self):
        rng = np.random.default_rng(3)
        u = SampledSignal(-1.0, 0.01, rng.normal(size=200) + 1j * rng.normal(size=200))
        grid = EvaluationGrid.centered(0.2, 25)
        whole = frft(0.9, u, grid)
        left = frft(0.9, SampledSignal(u.t0, u.dt, u.samples[:77]), grid)
        right = frft(0.9, SampledSignal(u.t[77], u.dt, u.samples[77:]), grid)
        assert np.max(np.abs(whole.samples - left.samples - right.samples)) <= 1e-12

    def test_extent_truncates(self, gauss_signal):
        grid = EvaluationGrid.centered(0.1, 11)
        cut = frft(1.0, gauss_signal, grid, QuadratureSpec(extent=1.0))
        inside = SampledSignal.from_function(
            lambda t: gaussian(t) * (np.abs(t) <= 1.0), gauss_signal.grid)
        np.testing.assert_allclose(cut.samples, frft(1.0, inside, grid).samples, atol=1e-14)

    def test_trapezoid_halves_end_samples(self):
        u = SampledSignal(0.0, 0.5, np.ones(5))
        out = frft(np.pi / 2, u, EvaluationGrid(0.0, 1.0, 1), QuadratureSpec(rule="trapezoid"))
        assert out.samples[0] == pytest.approx(2.0)

    def test_thread_count_does_not_change_bits(self, monkeypatch):
        u = SampledSignal.from_function(gaussian, EvaluationGrid.centered(0.01, 1500))
        grid = EvaluationGrid.centered(0.005, 1024)
        monkeypatch.setenv("FRFT_THREADS", "1")
        one = frft(0.8, u, grid)
        monkeypatch.setenv("FRFT_THREADS", "4")
        four = frft(0.8, u, grid)
        np.testing.assert_array_equal(one.samples, four.samples)


class TestMatchedGrid:
    def test_spacing(self):
        g = EvaluationGrid.covering(-1.1, 1.1, 2048)
        m = matched_grid(make_order(np.pi / 4), g)
        assert m.dx == pytest.approx(1 / (2.2 * np.sqrt(2)))
        assert m.count == 2048
        assert m.x0 == pytest.approx(-m.last)

    @given(generic_alpha, st.integers(8, 64))
    def test_exact_inversion(self, alpha, n):
        rng = np.random.default_rng(n)
        u = SampledSignal(-1.0, 2.0 / n, rng.normal(size=n) + 1j * rng.normal(size=n))
        o = make_order(alpha)
        back = inverse_frft(o, frft(o, u, matched_grid(o, u.grid)), u.grid)
        assert np.max(np.abs(back.samples - u.samples)) < 1e-9 * np.max(np.abs(u.samples))
