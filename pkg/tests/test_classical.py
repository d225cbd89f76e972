"""Tests for sensorfit.classical package."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sensorfit.classical import (
    ClassicalInterpolator,
    InterpolationError,
    LinearModel,
    OutOfRangeError,
    PolynomialModel,
    SingularSystemError,
    SplineModel,
    TooManyPointsError,
    eval_linear,
    eval_polynomial,
    eval_spline,
    fit_interpolator,
    fit_linear,
    fit_polynomial,
    fit_spline,
)
from sensorfit.config import Method
from sensorfit.exceptions import TooFewPointsError
from sensorfit.series.models import TimeSeries

WORKED_X = [1.0, 3.0, 5.0, 7.0, 9.0]
WORKED_Y = [230.02, 321.01, 305.00, 245.75, 345.62]


def lagrange(xs, ys, x):
    """Independent Lagrange-form evaluation."""
    total = 0.0
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = yi
        for j, xj in enumerate(xs):
            if j != i:
                term *= (x - xj) / (xi - xj)
        total += term
    return total


def natural_spline_oracle(xs, ys, queries):
    """Natural cubic spline by a hand-written Thomas algorithm."""
    xs = list(map(float, xs))
    ys = list(map(float, ys))
    n = len(xs)
    h = [xs[i + 1] - xs[i] for i in range(n - 1)]
    m = n - 2
    sub = [h[i] for i in range(m)]
    diag = [2.0 * (h[i] + h[i + 1]) for i in range(m)]
    sup = [h[i + 1] for i in range(m)]
    rhs = [6.0 * ((ys[i + 2] - ys[i + 1]) / h[i + 1] - (ys[i + 1] - ys[i]) / h[i]) for i in range(m)]
    for i in range(1, m):
        w = sub[i] / diag[i - 1]
        diag[i] -= w * sup[i - 1]
        rhs[i] -= w * rhs[i - 1]
    inner = [0.0] * m
    for i in range(m - 1, -1, -1):
        inner[i] = (rhs[i] - (sup[i] * inner[i + 1] if i + 1 < m else 0.0)) / diag[i]
    second = [0.0] + inner + [0.0]

    out = []
    for q in queries:
        i = 0
        while i < n - 2 and q >= xs[i + 1]:
            i += 1
        a, b = xs[i + 1] - q, q - xs[i]
        out.append(
            second[i] * a ** 3 / (6 * h[i]) + second[i + 1] * b ** 3 / (6 * h[i])
            + (ys[i] / h[i] - second[i] * h[i] / 6) * a
            + (ys[i + 1] / h[i] - second[i + 1] * h[i] / 6) * b
        )
    return out


class TestLinear:
    """Tests for fit_linear and eval_linear."""

    def test_exact_line(self):
        """Test data lying on y = 1 + 2x."""
        model = fit_linear(TimeSeries([0, 1, 2], [1, 3, 5]))

        assert model.beta0 == pytest.approx(1.0, abs=1e-12)
        assert model.beta1 == pytest.approx(2.0, abs=1e-12)

    def test_constant_data(self):
        """Test constant y gives zero slope."""
        model = fit_linear(TimeSeries([0, 1, 2, 3], [4, 4, 4, 4]))

        assert model.beta0 == pytest.approx(4.0)
        assert model.beta1 == pytest.approx(0.0, abs=1e-14)

    def test_five_point_dataset_matches_normal_equations(self):
        """Test the five-point dataset against centered sums."""
        x = np.array(WORKED_X)
        y = np.array(WORKED_Y)
        sxy = np.sum((x - x.mean()) * (y - y.mean()))
        sxx = np.sum((x - x.mean()) ** 2)
        beta1 = sxy / sxx
        beta0 = y.mean() - beta1 * x.mean()

        model = fit_linear(TimeSeries(x, y))

        assert model.beta0 == pytest.approx(beta0, rel=1e-10)
        assert model.beta1 == pytest.approx(beta1, rel=1e-10)
        assert eval_linear(model, 4.0) == pytest.approx(beta0 + 4.0 * beta1, rel=1e-10)

    def test_eval(self):
        """Test scalar and array evaluation."""
        model = LinearModel(beta0=1.0, beta1=2.0)

        assert eval_linear(model, 0.0) == 1.0
        assert eval_linear(model, 3.0) == 7.0
        np.testing.assert_array_equal(eval_linear(model, [0.0, 3.0]), [1.0, 7.0])

    def test_too_few_points(self):
        with pytest.raises(TooFewPointsError):
            fit_linear(TimeSeries([0.0], [1.0]))

    def test_rejects_non_finite(self):
        """Test model invariants."""
        with pytest.raises(InterpolationError):
            LinearModel(beta0=float("nan"), beta1=0.0)

    @given(st.integers(min_value=2, max_value=1000), st.integers(min_value=0, max_value=2**32 - 1))
    @settings(max_examples=25, deadline=None)
    def test_random_instances_match_oracle(self, n, seed):
        """Test random fits against the closed-form solution."""
        rng = np.random.default_rng(seed)
        x = np.sort(rng.uniform(0.0, 1.0, n))
        x = np.unique(x)
        if x.size < 2:
            return
        y = 3.0 - 2.0 * x + rng.normal(0.0, 0.1, x.size)
        sxy = np.sum((x - x.mean()) * (y - y.mean()))
        sxx = np.sum((x - x.mean()) ** 2)
        beta1 = sxy / sxx
        beta0 = y.mean() - beta1 * x.mean()

        model = fit_linear(TimeSeries(x, y))

        assert model.beta1 == pytest.approx(beta1, rel=1e-10, abs=1e-12)
        assert model.beta0 == pytest.approx(beta0, rel=1e-10, abs=1e-12)


class TestPolynomial:
    """Tests for fit_polynomial and eval_polynomial."""

    def test_constant(self):
        """Test two equal values."""
        model = fit_polynomial(TimeSeries([0, 1], [5, 5]))

        np.testing.assert_allclose(model.coefficients, [5.0, 0.0], atol=1e-14)

    def test_parabola(self):
        """Test y = x^2 through three points."""
        model = fit_polynomial(TimeSeries([0, 1, 2], [0, 1, 4]))

        np.testing.assert_allclose(model.coefficients, [0.0, 0.0, 1.0], atol=1e-12)
        assert model.degree == 2

    def test_five_point_query_matches_lagrange(self):
        """Test the value at x = 4 of the five-point dataset."""
        model = fit_polynomial(TimeSeries(WORKED_X, WORKED_Y))

        residuals = eval_polynomial(model, WORKED_X) - np.array(WORKED_Y)
        assert np.max(np.abs(residuals)) < 1e-8
        assert eval_polynomial(model, 4.0) == pytest.approx(lagrange(WORKED_X, WORKED_Y, 4.0), abs=1e-8)

    def test_eval_scalar(self):
        """Test Horner evaluation by hand."""
        assert eval_polynomial(PolynomialModel([5.0, 0.0]), 17.0) == 5.0
        assert eval_polynomial(PolynomialModel([0.0, 0.0, 1.0]), 3.0) == 9.0

    def test_eval_matches_power_sum(self):
        """Test random degree-6 coefficients against the naive sum."""
        rng = np.random.default_rng(2)
        coefficients = rng.normal(size=7)
        x = rng.uniform(-2.0, 2.0, 20)

        naive = np.array([sum(a * xi ** i for i, a in enumerate(coefficients)) for xi in x])

        np.testing.assert_allclose(eval_polynomial(PolynomialModel(coefficients), x), naive, rtol=1e-12, atol=1e-12)

    def test_too_many_points(self):
        """Test the Vandermonde cap."""
        times = np.linspace(0.0, 1.0, 31)

        with pytest.raises(TooManyPointsError):
            fit_polynomial(TimeSeries(times, np.sin(times)))

    def test_singular_system(self):
        """Test that nearly coincident nodes trip the pivot tolerance."""
        times = [0.0, 1e-9, 2e-9, 3e-9]

        with pytest.raises(SingularSystemError):
            fit_polynomial(TimeSeries(times, [1.0, 2.0, 3.0, 4.0]))

    @given(st.integers(min_value=1, max_value=10), st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=40, deadline=None)
    def test_reproduces_nodes(self, k, seed):
        """Test node residuals for k <= 10 on [0, 1] inputs."""
        rng = np.random.default_rng(seed)
        times = np.linspace(0.0, 1.0, k) if k > 1 else np.array([0.5])
        values = rng.uniform(0.0, 1.0, k)

        model = fit_polynomial(TimeSeries(times, values))

        assert np.max(np.abs(eval_polynomial(model, times) - values)) <= 1e-8


class TestSpline:
    """Tests for fit_spline and eval_spline."""

    def test_collinear_points(self):
        """Test that affine data is reproduced exactly."""
        model = fit_spline(TimeSeries([0, 1, 2], [0, 2, 4]))

        assert eval_spline(model, 0.5) == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(eval_spline(model, np.linspace(0, 2, 21)), 2 * np.linspace(0, 2, 21), atol=1e-12)

    def test_knots_are_interpolated(self):
        """Test that every knot returns its value."""
        times = np.array([0.0, 0.3, 1.0, 1.7, 2.0])
        values = np.array([1.0, -2.0, 0.5, 3.0, 0.0])

        model = fit_spline(TimeSeries(times, values))

        np.testing.assert_allclose(eval_spline(model, times), values, atol=1e-12)

    def test_four_point_oracle(self):
        """Test the four-point dataset at 1.5 and 100 random points."""
        xs, ys = [0, 1, 2, 3], [0, 1, 0, 1]
        model = fit_spline(TimeSeries(xs, ys))
        queries = np.random.default_rng(7).uniform(0.0, 3.0, 100)

        assert eval_spline(model, 1.5) == pytest.approx(natural_spline_oracle(xs, ys, [1.5])[0], abs=1e-10)
        np.testing.assert_allclose(eval_spline(model, queries), natural_spline_oracle(xs, ys, queries), atol=1e-10)

    def test_natural_boundary(self):
        """Test zero second derivative at both ends."""
        model = fit_spline(TimeSeries([0, 1, 2, 3, 4], [0, 3, 1, 4, 2]))

        assert eval_spline(model, 0.0, derivative=2) == pytest.approx(0.0, abs=1e-12)
        assert eval_spline(model, 4.0, derivative=2) == pytest.approx(0.0, abs=1e-12)

    def test_second_derivative_continuity(self):
        """Test one-sided second derivatives agree at interior knots."""
        times = np.array([0.0, 0.5, 1.2, 2.0, 3.1])
        model = fit_spline(TimeSeries(times, [1.0, 0.0, 2.0, -1.0, 0.5]))

        for i in range(1, times.size - 1):
            c3, c2, _, _ = model.coefficients[i - 1]
            h = times[i] - times[i - 1]
            left = 6.0 * c3 * h + 2.0 * c2
            right = eval_spline(model, times[i], derivative=2)
            assert left == pytest.approx(right, rel=1e-8, abs=1e-10)

    def test_out_of_range(self):
        """Test that the spline does not extrapolate."""
        model = fit_spline(TimeSeries([0, 1, 2], [0, 1, 0]))

        with pytest.raises(OutOfRangeError):
            eval_spline(model, -0.1)
        with pytest.raises(OutOfRangeError):
            eval_spline(model, [0.5, 2.5])

    def test_too_few_points(self):
        with pytest.raises(TooFewPointsError):
            fit_spline(TimeSeries([0, 1], [0, 1]))

    def test_model_shape_checks(self):
        """Test SplineModel invariants."""
        with pytest.raises(InterpolationError):
            SplineModel(knot_times=[0, 1, 2], knot_values=[0, 1, 2], coefficients=np.zeros((3, 4)))
        with pytest.raises(InterpolationError):
            SplineModel(knot_times=[0, 1, 2], knot_values=[0, 1, 2], coefficients=np.zeros((2, 4)), boundary="clamped")

    @given(
        st.floats(min_value=-10, max_value=10),
        st.floats(min_value=-10, max_value=10),
        st.integers(min_value=0, max_value=1000),
    )
    @settings(max_examples=30, deadline=None)
    def test_affine_reproduction(self, c0, c1, seed):
        """Test affine data at 100 random query points."""
        rng = np.random.default_rng(seed)
        times = np.sort(rng.choice(np.linspace(0.0, 1.0, 200), size=8, replace=False))
        model = fit_spline(TimeSeries(times, c0 + c1 * times))
        queries = rng.uniform(times[0], times[-1], 100)

        np.testing.assert_allclose(eval_spline(model, queries), c0 + c1 * queries, atol=1e-10)


class TestFitInterpolator:
    """Tests for fit_interpolator."""

    def test_evaluates_in_raw_units(self):
        """Test that a normalized fit reproduces raw samples."""
        times = 1594247088.0 + np.array([0.0, 1.0, 2.5, 4.0, 6.0])
        values = np.array([33.0, 50.0, 112.0, 80.0, 60.0])
        series = TimeSeries(times, values)

        for method in (Method.POLYNOMIAL, Method.SPLINE):
            interpolator = fit_interpolator(series, method)
            assert isinstance(interpolator, ClassicalInterpolator)
            np.testing.assert_allclose(interpolator(times), values, rtol=1e-9)

    def test_linear_normalized_matches_raw(self):
        """Test normalized and raw linear fits describe the same line."""
        series = TimeSeries([10.0, 11.0, 12.0, 13.0], [1.0, 2.5, 2.9, 4.2])

        scaled = fit_interpolator(series, Method.LINEAR)
        raw = fit_interpolator(series, Method.LINEAR, normalized=False)

        assert raw.params is None
        np.testing.assert_allclose(scaled([10.5, 12.5]), raw([10.5, 12.5]), rtol=1e-12)

    def test_constant_series(self):
        """Test a flat series still fits with widened params."""
        interpolator = fit_interpolator(TimeSeries([0, 1, 2], [7, 7, 7]), Method.SPLINE)

        np.testing.assert_allclose(interpolator([0.5, 1.5]), [7.0, 7.0])

    def test_rejects_neural(self):
        """Test that the neural method is not classical."""
        with pytest.raises(ValueError):
            fit_interpolator(TimeSeries([0, 1, 2], [0, 1, 2]), Method.NEURAL)
