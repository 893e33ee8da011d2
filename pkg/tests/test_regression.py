import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from letterfractal.errors import AllPointsDropped, DegenerateSeries
from letterfractal.regression import FitResult, PointSeries, linear_fit, log_transform
from oracle import ols


def series(*pts):
    return PointSeries(points=tuple((float(x), float(y)) for x, y in pts))


def test_exact_line():
    fit = linear_fit(series((0, 1), (1, 3), (2, 5)))
    assert fit.slope == pytest.approx(2)
    assert fit.intercept == pytest.approx(1)
    assert fit.r_squared == pytest.approx(1)
    assert fit.n_points == 3


def test_constant_y_convention():
    fit = linear_fit(series((1, 2), (2, 2), (3, 2)))
    assert fit.slope == 0.0
    assert fit.r_squared == 0.0
    assert fit.intercept == pytest.approx(2)


def test_three_point_loglog_fit():
    # Expected value from the closed-form fit in tests/oracle.py.
    pts = series((1, 50.0), (1 / 2, 100 / 3), (1 / 3, 100 / 6))
    fit = linear_fit(log_transform(pts, "loglog"))
    assert fit.slope == pytest.approx(0.9553079170365241, abs=1e-12)
    assert fit.slope == pytest.approx(0.9553, abs=5e-5)
    assert fit.r_squared == pytest.approx(0.9126132163526628, abs=1e-12)
    assert fit.transform == "loglog"


@pytest.mark.parametrize(
    "pts",
    [[(1, 1)], [(2, 1), (2, 5)], []],
)
def test_degenerate(pts):
    with pytest.raises(DegenerateSeries):
        linear_fit(series(*pts))


def test_accepts_plain_pairs():
    assert linear_fit([(0, 0), (1, 2)]).slope == pytest.approx(2)


def test_log_transform_loglog():
    out = log_transform(series((1, 10), (10, 100)), "loglog")
    assert out.points == ((0.0, 1.0), (1.0, 2.0))
    assert out.dropped == 0


def test_log_transform_zero_exclusion():
    out = log_transform(series((1, 0), (2, 10)), "semilog-y")
    assert out.points == ((2.0, 1.0),)
    assert out.dropped == 1


def test_log_transform_semilog_x_keeps_zero_y():
    out = log_transform(series((1, 0), (10, 10)), "semilog-x")
    assert out.points == ((0.0, 0.0), (1.0, 10.0))


def test_log_transform_all_dropped():
    with pytest.raises(AllPointsDropped):
        log_transform(series((0, 0)), "loglog")


def test_log_transform_unknown_mode():
    with pytest.raises(ValueError):
        log_transform(series((1, 1)), "cubic")


# -- properties ---------------------------------------------------------------------

coord = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)
pos = st.floats(min_value=0.01, max_value=1000, allow_nan=False, allow_infinity=False)


def _spread(xs):
    return max(xs) - min(xs) > 1e-3


@given(st.lists(st.tuples(coord, coord), min_size=2, max_size=30))
def test_matches_naive_oracle(pts):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    if not _spread(xs):
        return
    fit = linear_fit(series(*pts))
    slope, intercept, r2 = ols(xs, ys)
    if max(ys) == min(ys):
        slope, r2 = 0.0, 0.0
    assert fit.slope == pytest.approx(slope, rel=1e-9, abs=1e-9)
    assert fit.intercept == pytest.approx(intercept, rel=1e-9, abs=1e-7)
    assert fit.r_squared == pytest.approx(min(r2, 1.0), abs=1e-9)
    assert 0.0 <= fit.r_squared <= 1.0


@given(st.lists(st.tuples(coord, coord), min_size=3, max_size=20))
def test_residuals_reproduce_r_squared(pts):
    s = series(*pts)
    if not _spread(s.xs) or np.ptp(s.ys) < 1e-6:
        return
    fit = linear_fit(s)
    assert fit.residual_r_squared(s) == pytest.approx(fit.r_squared, abs=1e-9)


def _grid_search(xs, ys, slope0, icpt0, half_width, steps):
    a = np.linspace(slope0 - half_width, slope0 + half_width, steps)[:, None, None]
    b = np.linspace(icpt0 - half_width, icpt0 + half_width, steps)[None, :, None]
    x = np.asarray(xs)[None, None, :]
    y = np.asarray(ys)[None, None, :]
    sse = ((y - a * x - b) ** 2).sum(axis=2)
    ia, ib = np.unravel_index(np.argmin(sse), sse.shape)
    return float(a[ia, 0, 0]), float(b[0, ib, 0])


def _grid_minimizer(xs, ys, slope0, icpt0, half_width=0.1, steps=501, passes=3):
    """Exhaustive search of summed squared residuals, re-gridded 10x finer around each best point."""
    a, b = slope0, icpt0
    for _ in range(passes):
        a, b = _grid_search(xs, ys, a, b, half_width, steps)
        half_width /= 10
    return a, b


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=4, max_size=4
    )
)
def test_brute_force_grid_equivalence(pts):
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    if len(set(xs)) < 2:
        return
    fit = linear_fit(series(*pts))
    # Centre the grid on a rounded guess so the search is not handed the answer.
    a, b = _grid_minimizer(xs, ys, round(fit.slope, 1), round(fit.intercept, 1))
    assert a == pytest.approx(fit.slope, abs=5e-4)
    assert b == pytest.approx(fit.intercept, abs=5e-4)


@given(st.lists(st.tuples(pos, pos), min_size=3, max_size=20))
def test_log_base_invariance(pts):
    s = series(*pts)
    if not _spread(np.log10(s.xs)) or np.ptp(np.log10(s.ys)) < 1e-6:
        return
    for mode in ("loglog", "semilog-x", "semilog-y"):
        ten = linear_fit(log_transform(s, mode))
        log_x = mode in ("loglog", "semilog-x")
        log_y = mode in ("loglog", "semilog-y")
        nat = linear_fit(
            [
                (math.log(x) if log_x else x, math.log(y) if log_y else y)
                for x, y in s.points
            ]
        )
        assert nat.r_squared == pytest.approx(ten.r_squared, abs=1e-9)
        if mode == "loglog":
            assert nat.slope == pytest.approx(ten.slope, rel=1e-9, abs=1e-9)


@given(st.lists(st.tuples(coord, pos), min_size=3, max_size=20), coord)
def test_r_squared_affine_invariant_under_rank_reversal(pts, a):
    s = series(*pts)
    if not _spread(s.xs) or np.ptp(s.ys) < 1e-6:
        return
    flipped = series(*[(a - x, y) for x, y in pts])
    assert linear_fit(flipped).r_squared == pytest.approx(linear_fit(s).r_squared, abs=1e-9)
    sy = linear_fit(log_transform(s, "semilog-y"))
    sy_flip = linear_fit(log_transform(flipped, "semilog-y"))
    assert sy_flip.r_squared == pytest.approx(sy.r_squared, abs=1e-9)


@given(st.lists(st.tuples(pos, pos), min_size=3, max_size=20), st.floats(0.001, 1e6))
def test_loglog_scale_invariance(pts, k):
    s = series(*pts)
    if not _spread(np.log10(s.xs)) or np.ptp(np.log10(s.ys)) < 1e-6:
        return
    scaled = series(*[(x, k * y) for x, y in pts])
    base = linear_fit(log_transform(s, "loglog"))
    other = linear_fit(log_transform(scaled, "loglog"))
    assert other.slope == pytest.approx(base.slope, rel=1e-7, abs=1e-9)
    assert other.r_squared == pytest.approx(base.r_squared, abs=1e-9)
    assert linear_fit(scaled).r_squared == pytest.approx(linear_fit(s).r_squared, abs=1e-9)


def test_fit_result_predict():
    fit = FitResult(slope=2.0, intercept=1.0, r_squared=1.0, n_points=2)
    assert list(fit.predict([0, 1])) == [1.0, 3.0]
